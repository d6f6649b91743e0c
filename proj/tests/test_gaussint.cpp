#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lemn/gaussint.hpp"

using namespace lemn;
using lemn::testing::G;

TEST_CASE("norm") {
    CHECK(norm(G(5)) == 25);
    CHECK(norm(G(-1, 2)) == 5);
    CHECK(norm(G(0)) == 0);
    // multiplicativity
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        GaussInt a(d(rng), d(rng)), b(d(rng), d(rng));
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}

TEST_CASE("is_odd") {
    CHECK(is_odd(G(5)));
    CHECK(!is_odd(G(3, 1)));
    CHECK(!is_odd(G(1, 1)));
    CHECK(!is_odd(G(0)));
    // odd iff norm is odd
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            CHECK(is_odd(G(a, b)) == (norm(G(a, b)) % 2 == 1));
}

TEST_CASE("unit_class") {
    CHECK(unit_class(G(1)) == 0);
    CHECK(unit_class(G(3)) == 2);
    // oracle for 3: 3 - i^2 = 4 = 2(1+i)(1-i)
    CHECK(G(2, 2) * G(1, -1) == G(4));
    CHECK(unit_class(G(-1, 2)) == 0);
    CHECK_THROWS_AS(unit_class(G(1, 1)), not_odd_error);
    CHECK_THROWS_AS(unit_class(G(0)), not_odd_error);
}

TEST_CASE("normalize") {
    CHECK(normalize(G(-1, 2)) == std::pair(G(1), G(-1, 2)));
    CHECK(normalize(G(3)) == std::pair(G(-1), G(-3)));
    CHECK(normalize(G(0, 1)) == std::pair(G(0, -1), G(1)));
    // all four associates normalize to the same representative
    for (long a = -5; a <= 5; ++a) {
        for (long b = -5; b <= 5; ++b) {
            GaussInt g(a, b);
            if (!is_odd(g)) continue;
            GaussInt expected = normalize(g).second;
            for (int k = 0; k < 4; ++k) {
                auto [u, n] = normalize(g * GaussInt::unit_i_pow(k));
                CHECK(n == expected);
                CHECK(u * (g * GaussInt::unit_i_pow(k)) == n);
            }
        }
    }
}

TEST_CASE("divrem rounds ties toward minus infinity") {
    // 1/2 has quotient components exactly at a tie
    auto [q1, r1] = divrem(G(1), G(2));
    CHECK(q1 == G(0));
    CHECK(r1 == G(1));
    auto [q2, r2] = divrem(G(-1), G(2));
    CHECK(q2 == G(-1));
    CHECK(r2 == G(1));
    auto [q3, r3] = divrem(G(1, 1), G(2));
    CHECK(q3 == G(0));
    CHECK(r3 == G(1, 1));
}

TEST_CASE("divrem") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> d(-80, 80);
    for (int i = 0; i < 500; ++i) {
        GaussInt a(d(rng), d(rng)), b(d(rng), d(rng));
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(2 * norm(r) <= norm(b));
    }
    CHECK_THROWS_AS(divrem(G(1), G(0)), zero_error);
}

TEST_CASE("gcd") {
    CHECK(gcd(G(5), G(-1, 2)) == G(-1, 2));
    CHECK(gcd(G(3, 1), G(1, 1)) == G(1, 1));
    CHECK(G(1, 1) * G(2, -1) == G(3, 1));  // oracle: 3+i = (1+i)(2-i)
    CHECK(gcd(G(7), G(1)) == G(1));
    CHECK_THROWS_AS(gcd(G(0), G(0)), zero_error);
    // gcd divides both arguments and is normalized when odd
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int i = 0; i < 300; ++i) {
        GaussInt a(d(rng), d(rng)), b(d(rng), d(rng));
        if (a.is_zero() && b.is_zero()) continue;
        GaussInt g = gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        if (is_odd(g)) CHECK(is_normalized(g));
    }
}

TEST_CASE("gcd of even elements carries 1+i powers") {
    // 4 = -(1+i)^4 and 2+2i = -i(1+i)^3, so the gcd is (1+i)^3 = -2+2i
    CHECK(gcd(G(4), G(2, 2)) == G(-2, 2));
    CHECK(gcd(G(2), G(1, 1)) == G(1, 1));
    CHECK(gcd(G(6), G(3, 3)) == G(-3) * G(1, 1));
}

TEST_CASE("is_prime") {
    CHECK(is_prime(G(-1, 2)));
    CHECK(is_prime(G(3)));
    CHECK(!is_prime(G(5)));
    CHECK(is_prime(G(1, 1)));
    CHECK(!is_prime(G(1)));
    CHECK(!is_prime(G(0)));
    CHECK(is_prime(G(0, -7)));
    CHECK(!is_prime(G(0, 9)));
}

TEST_CASE("factor") {
    GaussFactorization f5 = factor(G(5));
    CHECK(f5.unit == G(1));
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0] == std::pair(G(-1, -2), 1u));
    CHECK(f5.factors[1] == std::pair(G(-1, 2), 1u));

    GaussFactorization f1 = factor(G(1));
    CHECK(f1.unit == G(1));
    CHECK(f1.factors.empty());

    GaussFactorization f9 = factor(G(9));
    CHECK(f9.unit == G(1));
    REQUIRE(f9.factors.size() == 1);
    CHECK(f9.factors[0] == std::pair(G(-3), 2u));

    CHECK_THROWS_AS(factor(G(0)), zero_error);
}

TEST_CASE("factor round-trips exhaustively up to norm 10^4") {
    long bound = 100;
    for (long a = -bound; a <= bound; ++a) {
        for (long b = -bound; b <= bound; ++b) {
            GaussInt g(a, b);
            BigInt n = norm(g);
            if (n == 0 || n > 10000) continue;
            GaussFactorization f = factor(g);
            CHECK(f.value() == g);
            CHECK(f.unit.is_unit());
            for (const auto& [p, e] : f.factors) {
                CHECK(e >= 1);
                CHECK(is_prime(p));
                if (p != G(1, 1)) CHECK(is_normalized(p));
            }
        }
    }
}

TEST_CASE("normalized_divisors") {
    CHECK(normalized_divisors(G(5)) ==
          std::vector<GaussInt>{G(1), G(-1, -2), G(-1, 2), G(5)});
    CHECK(normalized_divisors(G(-1, 2)) == std::vector<GaussInt>{G(1), G(-1, 2)});
    CHECK(normalized_divisors(G(9)) == std::vector<GaussInt>{G(1), G(-3), G(9)});
    CHECK(normalized_divisors(G(15)) ==
          std::vector<GaussInt>{G(1), G(-1, -2), G(-1, 2), G(-3), G(5), G(3, -6),
                                G(3, 6), G(-15)});
    CHECK_THROWS_AS(normalized_divisors(G(1, 1)), not_odd_error);

    // count = prod (k_j + 1)
    for (long a = -9; a <= 9; ++a) {
        for (long b = -9; b <= 9; ++b) {
            GaussInt g(a, b);
            if (g.is_zero() || !is_odd(g) || norm(g) > 150) continue;
            std::size_t expected = 1;
            for (const auto& [p, e] : factor(g).factors) {
                (void)p;
                expected *= e + 1;
            }
            CHECK(normalized_divisors(g).size() == expected);
        }
    }
}

TEST_CASE("unit_group_order") {
    CHECK(unit_group_order(G(5)) == 16);
    CHECK(unit_group_order(G(1)) == 1);
    CHECK(unit_group_order(G(15)) == 128);
    CHECK_THROWS_AS(unit_group_order(G(2)), not_odd_error);

    // matches a brute-force count of invertible residues
    for (long a = -7; a <= 7; ++a) {
        for (long b = -7; b <= 7; ++b) {
            GaussInt g(a, b);
            if (g.is_zero() || !is_odd(g) || norm(g) > 200 || norm(g) == 1) continue;
            CHECK(BigInt(long(unit_residues(g).size())) == unit_group_order(g));
        }
    }

    // multiplicative over coprime factors
    CHECK(unit_group_order(G(3) * G(-1, 2)) ==
          unit_group_order(G(3)) * unit_group_order(G(-1, 2)));
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(G(0, 1), G(5)) == 4);
    CHECK(multiplicative_order(G(1), G(7)) == 1);
    CHECK(multiplicative_order(G(3), G(-1, 2)) == 4);
    // brute-force oracle for 3 mod -1+2i
    GaussInt pi(-1, 2), x(1, 0);
    int t = 0;
    do {
        x = mod(x * G(3), pi);
        ++t;
    } while (!congruent(x, G(1), pi) && t < 10);
    CHECK(t == 4);
    CHECK_THROWS_AS(multiplicative_order(G(-1, 2), G(5)), not_coprime_error);

    // order divides the group order; a^t = 1
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
        GaussInt b(d(rng), d(rng));
        if (b.is_zero() || !is_odd(b) || norm(b) == 1) continue;
        GaussInt a(d(rng), d(rng));
        if (a.is_zero() || !gcd(a, b).is_unit()) continue;
        BigInt ord = multiplicative_order(a, b);
        CHECK(unit_group_order(b) % ord == 0);
        CHECK(congruent(powmod(a, ord, b), G(1), b));
    }
}

TEST_CASE("text round-trip") {
    for (const char* s : {"5", "-1+2i", "3-i", "i", "-i", "2i", "0", "-7", "12+345i"}) {
        GaussInt g = GaussInt::parse(s);
        CHECK(GaussInt::parse(g.str()) == g);
    }
    CHECK(GaussInt::parse(" - 1 + 2 i ") == G(-1, 2));
    CHECK(GaussInt::parse("3+i") == G(3, 1));
    CHECK(G(-1, 2).str() == "-1+2i");
    CHECK(G(0, -1).str() == "-i");
    CHECK_THROWS_AS(GaussInt::parse(""), parse_error);
    CHECK_THROWS_AS(GaussInt::parse("1+2"), parse_error);
    CHECK_THROWS_AS(GaussInt::parse("xyz"), parse_error);
    CHECK_THROWS_AS(GaussInt::parse("1i+2i"), parse_error);
}

TEST_CASE("unit_residues") {
    CHECK(unit_residues(G(1)).size() == 1);
    CHECK(unit_residues(G(-1, 2)).size() == 4);
    CHECK(unit_residues(G(5)).size() == 16);
    // every residue coprime to the modulus, pairwise incongruent
    auto rs = unit_residues(G(3));
    CHECK(rs.size() == 8);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(gcd(rs[i], G(3)).is_unit());
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            CHECK(!congruent(rs[i], rs[j], G(3)));
    }
}
