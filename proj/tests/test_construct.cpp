#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "lemn/construct.hpp"

using namespace lemn;
using lemn::testing::G;

TEST_CASE("fermat primes") {
    for (long p : {3L, 5L, 17L, 257L, 65537L}) CHECK(is_fermat_prime(BigInt(p)));
    for (long p : {2L, 7L, 11L, 13L, 41L, 97L}) CHECK(!is_fermat_prime(BigInt(p)));
}

TEST_CASE("fermat decomposition") {
    FermatDecomposition d5 = fermat_decomposition(BigInt(5));
    CHECK(d5.decomposable);
    CHECK(d5.k == 0);
    CHECK(d5.primes == std::vector<BigInt>{BigInt(5)});

    CHECK(!fermat_decomposition(BigInt(7)).decomposable);
    CHECK(fermat_decomposition(BigInt(7)).offender == 7);

    FermatDecomposition d60 = fermat_decomposition(BigInt(60));
    CHECK(d60.decomposable);
    CHECK(d60.k == 2);
    CHECK(d60.primes == std::vector<BigInt>{BigInt(3), BigInt(5)});

    CHECK_THROWS_AS(fermat_decomposition(BigInt(0)), zero_error);
}

TEST_CASE("constructibility") {
    CHECK(is_constructible(BigInt(15)));
    CHECK(!is_constructible(BigInt(9)));
    CHECK(is_constructible(BigInt(1)));
}

TEST_CASE("power of two order test") {
    CHECK(power_of_two_test(BigInt(5)));
    CHECK(unit_group_order_int(BigInt(5)) == 16);
    CHECK(!power_of_two_test(BigInt(7)));
    CHECK(unit_group_order_int(BigInt(7)) == 48);
    CHECK(power_of_two_test(BigInt(3)));
    CHECK(unit_group_order_int(BigInt(3)) == 8);
    CHECK_THROWS_AS(power_of_two_test(BigInt(4)), not_odd_error);
}

TEST_CASE("equivalence of the two tests on a prefix range") {
    for (long n = 1; n <= 4000; n += 2)
        CHECK(is_constructible(BigInt(n)) == power_of_two_test(BigInt(n)));
}

TEST_CASE("halving invariance") {
    for (long n = 1; n <= 500; ++n)
        CHECK(is_constructible(BigInt(2 * n)) == is_constructible(BigInt(n)));
}

TEST_CASE("order formulas agree, including the Gaussian route") {
    for (long n = 1; n <= 2001; n += 2) {
        CHECK(unit_group_order_int(BigInt(n)) == degree_formula_order(BigInt(n)));
    }
    for (long n = 1; n <= 301; n += 2) {
        CHECK(unit_group_order_int(BigInt(n)) == unit_group_order(G(n)));
    }
}
