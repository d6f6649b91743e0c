#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lemn/errors.hpp"

namespace lemn {

using BigInt = mpz_class;

/// A Gaussian integer re + im*i with arbitrary-precision components.
/// Immutable in spirit: all operations return new values.
class GaussInt {
  public:
    GaussInt() : re_(0), im_(0) {}
    GaussInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussInt(long re, long im) : re_(re), im_(im) {}
    explicit GaussInt(long re) : re_(re), im_(0) {}
    explicit GaussInt(BigInt re) : re_(std::move(re)), im_(0) {}

    const BigInt& re() const { return re_; }
    const BigInt& im() const { return im_; }

    /// i^k for any integer k.
    static GaussInt unit_i_pow(int k);

    GaussInt operator+(const GaussInt& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussInt operator-(const GaussInt& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussInt operator-() const { return {-re_, -im_}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussInt& operator+=(const GaussInt& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussInt& operator*=(const GaussInt& o) { *this = *this * o; return *this; }

    bool operator==(const GaussInt& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }

    GaussInt conj() const { return {re_, -im_}; }
    GaussInt mul_i() const { return {-im_, re_}; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_unit() const;

    /// Lexicographic (re, im) order; used only to break ties deterministically.
    bool lex_less(const GaussInt& o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return im_ < o.im_;
    }

    std::string str() const;
    static GaussInt parse(const std::string& text);

  private:
    BigInt re_, im_;
};

struct GaussFactorization {
    GaussInt unit;                                       // one of 1, i, -1, -i
    std::vector<std::pair<GaussInt, unsigned>> factors;  // (prime, exponent), sorted

    /// unit * prod prime^exp, recomputed exactly.
    GaussInt value() const;
};

BigInt norm(const GaussInt& b);

bool is_odd(const GaussInt& b);

/// The unique e in {0,1,2,3} with b = i^e mod 2(1+i). Requires b odd.
int unit_class(const GaussInt& b);

bool is_normalized(const GaussInt& b);

/// Returns (u, b') with b' = u*b and b' = 1 mod 2(1+i). Requires b odd.
std::pair<GaussInt, GaussInt> normalize(const GaussInt& b);

/// Euclidean division with componentwise nearest-integer rounding, ties toward
/// -infinity. The remainder satisfies norm(r) <= norm(b)/2 < norm(b).
std::pair<GaussInt, GaussInt> divrem(const GaussInt& a, const GaussInt& b);

/// Canonical residue of a mod b (the divrem remainder).
GaussInt mod(const GaussInt& a, const GaussInt& b);

/// True iff b divides a exactly; q receives the quotient when non-null.
bool divides(const GaussInt& b, const GaussInt& a, GaussInt* q = nullptr);

/// Exact quotient a/b; throws not_divisible_error if b does not divide a.
GaussInt exact_div(const GaussInt& a, const GaussInt& b);

/// Greatest common divisor, returned normalized when odd, otherwise as
/// (1+i)^k times a normalized element.
GaussInt gcd(const GaussInt& a, const GaussInt& b);

bool is_prime(const GaussInt& b);

/// Factorization into normalized primes (plus 1+i for even input) and a unit,
/// with factors sorted by (norm, re, im). Requires b != 0.
GaussFactorization factor(const GaussInt& b);

/// All normalized divisors of odd b, one per associate class, sorted by
/// (norm, re, im). Includes 1 and the normalized associate of b.
std::vector<GaussInt> normalized_divisors(const GaussInt& b);

/// |(O/bO)^x| for odd nonzero b.
BigInt unit_group_order(const GaussInt& b);

/// Least t >= 1 with a^t = 1 mod b. Requires b odd nonzero, gcd(a,b) a unit.
BigInt multiplicative_order(const GaussInt& a, const GaussInt& b);

/// a^e mod b with canonical residues; e >= 0.
GaussInt powmod(const GaussInt& a, const BigInt& e, const GaussInt& b);

bool congruent(const GaussInt& a, const GaussInt& b, const GaussInt& mod);

/// Canonical residue representatives of (O/bO)^x, sorted by (norm, re, im).
std::vector<GaussInt> unit_residues(const GaussInt& b);

/// Deterministic (norm, re, im) order used for divisor and factor lists.
bool norm_lex_less(const GaussInt& a, const GaussInt& b);

// Rational-integer helpers shared across modules (trial-division based,
// intended for desk-scale operands).
bool is_rational_prime(const BigInt& n);
std::vector<std::pair<BigInt, unsigned>> factor_integer(BigInt n);

}  // namespace lemn
