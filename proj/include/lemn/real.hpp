#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "lemn/gaussint.hpp"

namespace lemn {

/// Arbitrary-precision binary floating point (MPFR), value semantics.
/// Each value carries its own precision; binary operations compute at the
/// larger of the two operand precisions.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(double value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, value, MPFR_RNDN); }
    Real(const BigInt& value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

    friend Real sqrt(const Real& a) {
        Real r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sinh(const Real& a) {
        Real r(a.prec());
        mpfr_sinh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real cosh(const Real& a) {
        Real r(a.prec());
        mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real tanh(const Real& a) {
        Real r(a.prec());
        mpfr_tanh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real fmod(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_fmod(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    /// a * 2^e, exact.
    friend Real ldexp2(const Real& a, long e) {
        Real r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    /// 10^-k at the precision of the template value.
    static Real pow10(long k, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
        if (k < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

/// Complex number over Real.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
    explicit Complex(const Real& real) : re(real), im(Real(real.prec())) {}
    Complex(const GaussInt& g, mpfr_prec_t prec) : re(g.re(), prec), im(g.im(), prec) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }
    Complex operator/(const Real& s) const { return {re / s, im / s}; }
    Complex operator/(const Complex& o) const {
        Real n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Complex conj() const { return {re, -im}; }

    friend Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }
};

}  // namespace lemn
