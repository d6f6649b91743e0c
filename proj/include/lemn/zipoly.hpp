#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lemn/gaussint.hpp"

namespace lemn {

/// Dense univariate polynomial over Z[i], coefficients in ascending degree,
/// canonical form (no trailing zeros; the zero polynomial is the empty list).
class ZiPoly {
  public:
    ZiPoly() = default;
    explicit ZiPoly(GaussInt constant);
    explicit ZiPoly(std::vector<GaussInt> coeffs);

    static ZiPoly x();
    static ZiPoly one() { return ZiPoly(GaussInt(1, 0)); }
    static ZiPoly monomial(GaussInt c, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussInt>& coeffs() const { return c_; }
    GaussInt coeff(std::size_t i) const;
    const GaussInt& lc() const;

    bool operator==(const ZiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ZiPoly& o) const { return !(*this == o); }

    ZiPoly operator+(const ZiPoly& o) const;
    ZiPoly operator-(const ZiPoly& o) const;
    ZiPoly operator-() const;
    ZiPoly operator*(const ZiPoly& o) const;
    ZiPoly operator*(const GaussInt& s) const;

    /// p(x^m) for m >= 1.
    ZiPoly compose_power(std::size_t m) const;
    ZiPoly compose_x4() const { return compose_power(4); }

    /// Largest m such that p is a polynomial in x^m (0 for constants).
    std::size_t stride() const;
    /// Inverse of compose_power: requires stride() divisible by m.
    ZiPoly compress_power(std::size_t m) const;

    /// Number of leading zero coefficients (multiplicity of the root 0).
    std::size_t trailing_zeros() const;
    /// p / x^k; requires k <= trailing_zeros().
    ZiPoly shift_down(std::size_t k) const;
    ZiPoly shift_up(std::size_t k) const;

    ZiPoly derivative() const;
    ZiPoly conjugate() const;
    /// Coefficient list reversed within length d+1; requires d >= degree.
    ZiPoly reverse(std::size_t d) const;

    GaussInt eval(const GaussInt& z) const;

    bool is_monic() const;
    /// Gaussian gcd of all coefficients (0 for the zero polynomial),
    /// in the canonical form produced by gcd().
    GaussInt content() const;
    ZiPoly primitive_part() const;
    /// Divides every coefficient by s; throws not_divisible_error on failure.
    ZiPoly exact_div_scalar(const GaussInt& s) const;

    std::string str() const;

  private:
    void trim();
    std::vector<GaussInt> c_;
};

/// Exact quotient p/q over Z[i]; throws not_divisible_error when q does not
/// divide p (nonzero remainder or a coefficient division failure).
ZiPoly exact_div(const ZiPoly& p, const ZiPoly& q);
bool try_exact_div(const ZiPoly& p, const ZiPoly& q, ZiPoly* quotient);

/// True iff all non-leading coefficients of monic p are divisible by the
/// prime pi and the constant term is not divisible by pi^2.
bool is_eisenstein_at(const ZiPoly& p, const GaussInt& pi);

/// Polynomial gcd over Z[i][x] (small-prime modular algorithm with a
/// primitive-PRS fallback), returned with deterministic normalization:
/// content = gcd of contents, primitive part with canonical leading unit.
ZiPoly zipoly_gcd(const ZiPoly& a, const ZiPoly& b);

/// True iff a and b have no common factor of positive degree over Q(i).
/// Certified: decided by a single good-reduction prime when it reports true.
bool zipoly_coprime(const ZiPoly& a, const ZiPoly& b);

std::size_t karatsuba_threshold();
void set_karatsuba_threshold(std::size_t n);

}  // namespace lemn
