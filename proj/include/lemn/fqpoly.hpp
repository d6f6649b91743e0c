#pragma once

#include <cstdint>
#include <vector>

#include "lemn/zipoly.hpp"

namespace lemn {

/// Element of O/piO: a single residue for split pi (b = 0), or a + b*t with
/// t^2 = -1 for inert pi.
struct FqElem {
    uint64_t a = 0, b = 0;
    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const FqElem&) const = default;
};

/// The residue field O/piO for a normalized odd prime pi: F_p when pi splits
/// (norm(pi) = p = 1 mod 4), F_{p^2} = F_p[t]/(t^2+1) when pi = -p is inert.
class ResidueField {
  public:
    explicit ResidueField(const GaussInt& pi);

    const GaussInt& pi() const { return pi_; }
    uint64_t p() const { return p_; }
    int ext_degree() const { return ext_degree_; }
    uint64_t size() const { return ext_degree_ == 1 ? p_ : p_ * p_; }

    FqElem reduce(const GaussInt& c) const;
    FqElem add(FqElem x, FqElem y) const;
    FqElem sub(FqElem x, FqElem y) const;
    FqElem mul(FqElem x, FqElem y) const;
    FqElem inv(FqElem x) const;
    FqElem one() const { return {1, 0}; }

    bool operator==(const ResidueField& o) const { return pi_ == o.pi_; }

  private:
    GaussInt pi_;
    uint64_t p_ = 0;
    int ext_degree_ = 1;
    uint64_t i_image_ = 0;  // the residue of i, split case only
};

/// Dense polynomial over a residue field, ascending degree, trimmed.
class FqPoly {
  public:
    explicit FqPoly(ResidueField field) : field_(std::move(field)) {}
    FqPoly(ResidueField field, std::vector<FqElem> coeffs);

    const ResidueField& field() const { return field_; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == FqElem{1, 0}; }

    bool operator==(const FqPoly& o) const { return c_ == o.c_ && field_ == o.field_; }

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;

    FqPoly monic() const;
    FqPoly derivative() const;
    static FqPoly x(const ResidueField& f);

  private:
    void trim();
    ResidueField field_;
    std::vector<FqElem> c_;
};

std::pair<FqPoly, FqPoly> fq_divrem(const FqPoly& a, const FqPoly& b);
FqPoly fq_gcd(FqPoly a, FqPoly b);  // monic (or zero)
FqPoly fq_powmod(const FqPoly& base, uint64_t e, const FqPoly& modulus);

/// Coefficientwise reduction of p into O/piO. Requires pi normalized odd prime.
FqPoly reduce_mod(const ZiPoly& p, const GaussInt& pi);

/// gcd(p mod pi, (p mod pi)') is constant. Throws zero_error when the
/// reduction vanishes identically.
bool is_separable_mod(const ZiPoly& p, const GaussInt& pi);

/// Distinct-degree factorization of a squarefree monic polynomial: list of
/// (d, product of all irreducible factors of degree d), ascending d.
/// Throws not_squarefree_error when gcd(f, f') is nonconstant.
std::vector<std::pair<int, FqPoly>> distinct_degree_factorization(const FqPoly& f);

/// DDF degree multiset: each degree d repeated (deg bucket)/d times.
std::vector<int> ddf_degree_multiset(const FqPoly& f);

}  // namespace lemn
