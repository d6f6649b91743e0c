#pragma once

#include <string>
#include <vector>

#include "lemn/cmfield.hpp"
#include "lemn/fqpoly.hpp"

namespace lemn {

/// The lemnatomic polynomial of a (normalized) odd element, together with
/// the invariants the structure theorems prescribe for it.
struct LemnatomicRecord {
    GaussInt beta;  // normalized associate of the input
    ZiPoly poly;
    BigInt degree;
    GaussInt constant_term;
};

/// Computes the lemnatomic polynomial by dividing the division polynomial by
/// the lemnatomic polynomials of all proper normalized divisors (memoized).
/// Throws internal_inconsistency_error if any division is inexact.
LemnatomicRecord lemnatomic(const GaussInt& beta);

struct CheckReport {
    bool pass = false;
    std::string detail;
};

/// deg Lambda_beta = |(O/beta O)^x|.
CheckReport verify_degree(const GaussInt& beta);

/// Lambda_beta(0) = pi for beta a unit times a power of the normalized prime
/// pi, and 1 otherwise. Requires beta odd nonunit.
CheckReport verify_constant_term(const GaussInt& beta);

/// prod over normalized divisors gamma of Lambda_gamma = x P_beta(x^4).
CheckReport verify_decomposition(const GaussInt& beta);

struct FrobeniusPattern {
    GaussInt prime;
    BigInt expected;            // multiplicative order of [prime] mod beta
    std::vector<int> observed;  // DDF factor degrees, ascending
    bool pass = false;
};

/// Factorization degree pattern of Lambda_beta modulo an admissible prime.
/// Throws not_coprime_error / not_separable_error for inadmissible primes.
FrobeniusPattern frobenius_pattern(const GaussInt& beta, const GaussInt& pi);

/// The first `count` normalized odd primes, by (norm, re, im), that are
/// coprime to beta and keep Lambda_beta separable.
std::vector<GaussInt> admissible_primes(const GaussInt& beta, std::size_t count);

enum class EvidenceStatus { kProved, kConsistent, kRefuted };

const char* to_string(EvidenceStatus s);

struct IrreducibilityEvidence {
    EvidenceStatus status = EvidenceStatus::kConsistent;
    std::vector<FrobeniusPattern> patterns;
    int mismatches = 0;
    std::size_t primes_tested = 0;
};

/// Runs frobenius_pattern over the first `trials` admissible primes.
/// PROVED when some pattern is a single factor of full degree; a mismatch is
/// recorded as a warning and escalates to REFUTED only when it recurs across
/// three primes (the Frobenius identification carries an index caveat).
IrreducibilityEvidence irreducibility_evidence(const GaussInt& beta, std::size_t trials);

}  // namespace lemn
