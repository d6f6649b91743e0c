#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lemn/cmfield.hpp"
#include "lemn/real.hpp"
#include "lemn/zipoly.hpp"

namespace lemn {

/// High-precision evaluator for the lemniscatic function and its derivative
/// on the real line and the complex plane. Immutable after construction;
/// evaluations are pure.
class PhiEvaluator {
  public:
    explicit PhiEvaluator(int digits = 40);

    int digits() const { return digits_; }
    mpfr_prec_t prec() const { return prec_; }
    const Real& varpi() const { return varpi_; }
    /// Residual budget for numeric verification, 1e-30 at the default 40 digits.
    Real target_tolerance() const { return Real::pow10(-(digits_ - 10), prec_); }

    /// Twice the complete arc-length integral, by tanh-sinh quadrature.
    Real varpi_by_quadrature() const;
    /// pi / agm(1, sqrt 2).
    Real varpi_by_agm() const;

    struct PhiPair {
        Real phi, phiprime;
    };
    PhiPair phi_pair(const Real& s) const;
    Real phi_real(const Real& s) const { return phi_pair(s).phi; }
    Real phiprime_real(const Real& s) const { return phi_pair(s).phiprime; }

    struct ComplexPair {
        Complex phi, phiprime;
    };
    ComplexPair phi_complex_pair(const Complex& z) const;
    Complex phi_complex(const Complex& z) const { return phi_complex_pair(z).phi; }
    Complex phiprime_complex(const Complex& z) const { return phi_complex_pair(z).phiprime; }

    /// The incomplete integral of 1/sqrt(1-t^4) from 0 to r, 0 <= r <= 0.9.
    Real arc_length(const Real& r) const;

    Real make_real(double v) const { return Real(v, prec_); }
    Complex make_complex(const GaussInt& g) const { return Complex(g, prec_); }

  private:
    Real invert_arc(const Real& s) const;  // principal branch, s in [0, varpi/4]
    void setup_gauss_legendre();

    int digits_;
    mpfr_prec_t prec_;
    Real varpi_;
    Real pole_tol_;
    std::vector<Real> gl_nodes_, gl_weights_;  // on [-1, 1]
};

/// Horner evaluation with complex arithmetic at the argument's precision.
Complex eval_poly_complex(const ZiPoly& p, const Complex& z);

/// Max |Lambda_beta(phi(alpha (1+i) varpi / beta))| over the unit residues.
Real verify_lemnatomic_roots(const PhiEvaluator& ev, const GaussInt& beta);

/// Max |phi(beta z) - M_beta(phi(z))| over random pole-avoiding samples.
Real verify_multmap_numeric(const PhiEvaluator& ev, const GaussInt& beta, int samples,
                            uint64_t seed = 0x1e3a5c);

struct IdentityResidual {
    std::string name;
    Real max_residual;
};

/// Numeric spot checks of the addition law, the duplication law, the
/// differential equation, the half-period derivative identity, and the
/// phi(2 varpi / beta) identity.
std::vector<IdentityResidual> verify_identities(const PhiEvaluator& ev, int samples,
                                                uint64_t seed = 0x1e3a5c);

}  // namespace lemn
