#pragma once

#include <vector>

#include "lemn/gaussint.hpp"

namespace lemn {

struct FermatDecomposition {
    bool decomposable = false;
    unsigned k = 0;               // power of two stripped
    std::vector<BigInt> primes;   // distinct Fermat primes, ascending
    BigInt offender;              // first factor breaking the pattern, when any
};

/// p = 2^(2^m) + 1 and prime.
bool is_fermat_prime(const BigInt& p);

/// n = 2^k p_1 ... p_m with distinct Fermat primes p_i, or NotDecomposable.
FermatDecomposition fermat_decomposition(const BigInt& n);

/// The n-division points admit a ruler-and-compass construction.
bool is_constructible(const BigInt& n);

/// |(O/nO)^x| is a power of two; requires n odd >= 1.
bool power_of_two_test(const BigInt& n);

/// |(O/nO)^x| for odd n >= 1 via the prime-power formula over the rational
/// factorization of n (split and inert cases by p mod 4).
BigInt unit_group_order_int(const BigInt& n);

/// The same order via n^2 prod (1 - 1/p)(1 - (-1/p)/p), evaluated exactly.
BigInt degree_formula_order(const BigInt& n);

}  // namespace lemn
