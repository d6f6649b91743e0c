#pragma once

#include <map>
#include <vector>

#include "lemn/zipoly.hpp"

namespace lemn {

/// T_n with cos(n t) = T_n(cos t), integer coefficients.
ZiPoly chebyshev_T(unsigned n);

/// The monic variant C_n(x) = 2 T_n(x/2), n >= 1.
ZiPoly monic_C(unsigned n);

/// For odd n: D_k for every divisor k of n, computed recursively by exact
/// division from C_n = prod D_k; D_1 = x and deg D_k = phi(k).
std::map<unsigned, ZiPoly> factor_D(unsigned n);

unsigned euler_phi(unsigned n);

struct DConstantReport {
    bool pass = false;
    long value = 0;     // D_n(0)
    long expected = 0;  // (-1)^((p-1)/2) p for n = p^k, otherwise 1
};

/// Magnitude and sign of D_n(0), n odd >= 3.
DConstantReport verify_D_constant(unsigned n);

/// Max |sin(n t) - (-1)^((n-1)/2) T_n(sin t)| over the samples, with T_n
/// evaluated by the three-term recurrence.
double sin_identity_check(unsigned n, const std::vector<double>& thetas);

/// T_n at a point by the recurrence (numerically stable on [-1, 1]).
double chebyshev_T_value(unsigned n, double x);

}  // namespace lemn
