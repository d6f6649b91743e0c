#include "lemn/construct.hpp"

namespace lemn {

bool is_fermat_prime(const BigInt& p) {
    if (p < 3) return false;
    BigInt m = p - 1;
    // m must be 2^e with e itself a power of two
    if (mpz_popcount(m.get_mpz_t()) != 1) return false;
    unsigned long e = mpz_scan1(m.get_mpz_t(), 0);
    if (e & (e - 1)) return false;
    return is_rational_prime(p);
}

FermatDecomposition fermat_decomposition(const BigInt& n) {
    if (n < 1) throw zero_error("fermat_decomposition requires n >= 1");
    FermatDecomposition out;
    BigInt odd = n;
    while (mpz_even_p(odd.get_mpz_t())) {
        odd /= 2;
        ++out.k;
    }
    for (const auto& [p, e] : factor_integer(odd)) {
        if (e > 1 || !is_fermat_prime(p)) {
            out.decomposable = false;
            out.offender = p;
            return out;
        }
        out.primes.push_back(p);
    }
    out.decomposable = true;
    return out;
}

bool is_constructible(const BigInt& n) { return fermat_decomposition(n).decomposable; }

BigInt unit_group_order_int(const BigInt& n) {
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw not_odd_error("unit_group_order_int requires an odd positive integer");
    BigInt order = 1;
    for (const auto& [p, e] : factor_integer(n)) {
        BigInt pk1 = 1;  // p^(e-1)
        for (unsigned j = 0; j + 1 < e; ++j) pk1 *= p;
        if (p % 4 == 1)
            order *= pk1 * (p - 1) * pk1 * (p - 1);
        else
            order *= pk1 * pk1 * (p * p - 1);
    }
    return order;
}

BigInt degree_formula_order(const BigInt& n) {
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw not_odd_error("degree_formula_order requires an odd positive integer");
    BigInt order = n * n;
    for (const auto& [p, e] : factor_integer(n)) {
        (void)e;
        long chi = (p % 4 == 1) ? 1 : -1;
        order = order / (p * p) * (p - 1) * (p - chi);
    }
    return order;
}

bool power_of_two_test(const BigInt& n) {
    BigInt order = unit_group_order_int(n);
    return mpz_popcount(order.get_mpz_t()) == 1;
}

}  // namespace lemn
