#pragma once

#include <string>
#include <vector>

#include "lemn/gaussint.hpp"

namespace lemn {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0;
};

/// Normalized odd elements with 1 <= norm <= max_norm, sorted by
/// (norm, re, im). Excludes 1 when exclude_unit is set.
std::vector<GaussInt> normalized_odd_elements(const BigInt& max_norm, bool exclude_unit);

/// Degree, constant-term, decomposition, map-shape and Eisenstein checks for
/// every normalized odd beta with 1 < norm(beta) <= max_norm.
SuiteResult run_structural_suite(const BigInt& max_norm, unsigned threads = 0);

/// Frobenius factorization patterns over the first `primes` admissible
/// primes for every normalized odd nonunit beta with norm <= max_norm, plus
/// the outright-irreducibility spot checks.
SuiteResult run_frobenius_suite(const BigInt& max_norm, std::size_t primes = 3,
                                unsigned threads = 0);

/// M_{beta gamma} = M_beta o M_gamma for the first `pairs` normalized pairs
/// with norm(beta gamma) <= max_norm, by exact cross-multiplication.
SuiteResult run_composition_suite(std::size_t pairs = 20, const BigInt& max_norm = 200);

/// varpi cross-check, function identities, lemnatomic root residuals and
/// numeric multiplication-map residuals at the given precision.
SuiteResult run_numeric_suite(int digits = 40);

/// Chebyshev factorization, constant terms and the sine identity.
SuiteResult run_chebyshev_suite();

/// is_constructible(n) against the power-of-two order test for n <= limit.
SuiteResult run_constructibility_suite(long limit = 100000);

}  // namespace lemn
