#pragma once

#include <vector>

#include "lemn/zipoly.hpp"

namespace lemn {

/// Reduced rational function num/den over Z[i][x]. Canonical form: den != 0,
/// gcd(num, den) = 1 (polynomial and scalar content), and the leading
/// coefficient of den carries the canonical unit (normalized when odd,
/// rotated into re > 0, im >= 0 otherwise). Equal rational functions have
/// identical representations.
class RatFunc {
  public:
    RatFunc() : num_(), den_(ZiPoly::one()) {}
    explicit RatFunc(ZiPoly p) : num_(std::move(p)), den_(ZiPoly::one()) {}
    RatFunc(ZiPoly num, ZiPoly den);

    const ZiPoly& num() const { return num_; }
    const ZiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const GaussInt& s) const;

    std::string str() const;

  private:
    struct reduced_tag {};
    RatFunc(ZiPoly num, ZiPoly den, reduced_tag);
    /// Scalar-content and unit normalization for inputs whose polynomial
    /// parts are already coprime.
    static RatFunc make_coprime(ZiPoly num, ZiPoly den);

    ZiPoly num_, den_;
};

/// Element a(x) + b(x)*y of the coordinate ring of y^2 = 1 - x^4, with x, y
/// standing for the function and its derivative.
class FieldElem {
  public:
    FieldElem() = default;
    explicit FieldElem(RatFunc a) : a_(std::move(a)) {}
    FieldElem(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b)) {}

    static FieldElem x();
    static FieldElem y();
    static FieldElem constant(GaussInt c);

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool has_y_part() const { return !b_.is_zero(); }

    bool operator==(const FieldElem& o) const { return a_ == o.a_ && b_ == o.b_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator*(const GaussInt& s) const;
    FieldElem inverse() const;
    FieldElem operator/(const FieldElem& o) const;

  private:
    RatFunc a_, b_;
};

/// The pair (value of phi(beta z), value of phi'(beta z)) as functions of
/// x = phi(z), y = phi'(z).
struct CMPoint {
    FieldElem X, Y;
};

/// The multiplication map M_beta(x) = i^epsilon x P(x^4)/Q(x^4).
struct MultMap {
    GaussInt beta;
    int epsilon = 0;
    ZiPoly P, Q;
};

CMPoint point_base();
CMPoint point_zero();
CMPoint point_neg(const CMPoint& p);
CMPoint point_i_mult(const CMPoint& p);
CMPoint point_add(const CMPoint& p, const CMPoint& q);
CMPoint point_int_mult(unsigned long n, const CMPoint& p);

/// True iff Y^2 = 1 - X^4 holds identically for the point.
bool on_curve(const CMPoint& p);

/// Computes the multiplication map of an odd nonzero beta by the addition
/// ladder and verifies its structural properties before returning.
MultMap mult_map(const GaussInt& beta);

/// The division polynomial x P_beta(x^4), of degree norm(beta).
ZiPoly division_poly(const GaussInt& beta);

}  // namespace lemn
