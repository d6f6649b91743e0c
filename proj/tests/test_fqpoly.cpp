#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lemn/fqpoly.hpp"
#include "lemn/lemnatomic.hpp"

using namespace lemn;
using lemn::testing::G;
using lemn::testing::P;

TEST_CASE("residue fields") {
    ResidueField split(G(-1, 2));
    CHECK(split.ext_degree() == 1);
    CHECK(split.p() == 5);
    CHECK(split.size() == 5);
    // image of i squares to -1 and is congruent to i mod pi
    FqElem i_img = split.reduce(G(0, 1));
    CHECK(split.mul(i_img, i_img) == split.reduce(G(-1)));

    ResidueField inert(G(-3));
    CHECK(inert.ext_degree() == 2);
    CHECK(inert.size() == 9);
    FqElem t = inert.reduce(G(0, 1));
    CHECK(inert.mul(t, t) == inert.reduce(G(-1)));

    CHECK_THROWS(ResidueField(G(5)));     // not prime
    CHECK_THROWS(ResidueField(G(3)));     // not normalized
    CHECK_THROWS(ResidueField(G(1, 1)));  // even
}

TEST_CASE("reduction") {
    // 5x + 1 mod -1+2i is the constant 1
    FqPoly f = reduce_mod(P({{1, 5, 0}, {0, 1, 0}}), G(-1, 2));
    CHECK(f.degree() == 0);
    CHECK(f.coeffs()[0] == FqElem{1, 0});
    CHECK(reduce_mod(ZiPoly::x(), G(-3)).degree() == 1);
    CHECK(reduce_mod(P({{2, 1, 0}, {0, -1, 0}}), G(-3)).degree() == 2);
}

TEST_CASE("separability") {
    CHECK(is_separable_mod(P({{2, 1, 0}, {0, -1, 0}}), G(-3)));
    CHECK(!is_separable_mod(P({{2, 1, 0}}), G(-3)));
    CHECK(!is_separable_mod(P({{2, 1, 0}}), G(-1, 2)));
    CHECK_THROWS_AS(is_separable_mod(P({{0, 5, 0}}), G(-1, 2)), zero_error);
    // Lambda_5 is separable mod a norm-13 prime
    GaussInt pi13 = factor(G(13)).factors[0].first;
    CHECK(is_separable_mod(lemn::testing::lambda5(), pi13));
}

TEST_CASE("distinct-degree factorization") {
    // x^2 - 1 over F_5 splits into linear factors
    auto ddf1 = distinct_degree_factorization(reduce_mod(P({{2, 1, 0}, {0, -1, 0}}), G(-1, 2)));
    REQUIRE(ddf1.size() == 1);
    CHECK(ddf1[0].first == 1);
    CHECK(ddf1[0].second.degree() == 2);

    // x^2 + 1 splits over F_9 = O/(-3): t^2 = -1 makes -1 a square there
    auto split9 = distinct_degree_factorization(reduce_mod(P({{2, 1, 0}, {0, 1, 0}}), G(-3)));
    REQUIRE(split9.size() == 1);
    CHECK(split9[0].first == 1);

    // x^2 + 2 is irreducible over F_5 (-2 = 3 is a non-square mod 5)
    auto ddf2 = distinct_degree_factorization(reduce_mod(P({{2, 1, 0}, {0, 2, 0}}), G(-1, 2)));
    REQUIRE(ddf2.size() == 1);
    CHECK(ddf2[0].first == 2);
    CHECK(ddf2[0].second.degree() == 2);

    // x^2 - (1+i) is irreducible over F_9: 1+t generates the order-8 unit group
    auto ddf3 = distinct_degree_factorization(reduce_mod(P({{2, 1, 0}, {0, -1, -1}}), G(-3)));
    REQUIRE(ddf3.size() == 1);
    CHECK(ddf3[0].first == 2);

    CHECK_THROWS_AS(distinct_degree_factorization(reduce_mod(P({{2, 1, 0}}), G(-3))),
                    not_squarefree_error);
}

TEST_CASE("ddf buckets multiply back and degrees sum") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> dc(-6, 6);
    for (GaussInt pi : {G(-1, 2), G(-3), G(-7), G(3, 2)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<GaussInt> c(9);
            for (auto& x : c) x = GaussInt(dc(rng), dc(rng));
            c.back() = G(1);  // monic
            FqPoly f = reduce_mod(ZiPoly(c), pi);
            if (f.degree() < 1 || !f.is_monic()) continue;
            if (fq_gcd(f, f.derivative()).degree() != 0) continue;
            auto ddf = distinct_degree_factorization(f);
            FqPoly product(f.field(), {{1, 0}});
            int total = 0;
            int last_d = 0;
            for (const auto& [d, bucket] : ddf) {
                CHECK(d > last_d);
                last_d = d;
                CHECK(bucket.degree() % d == 0);
                total += bucket.degree();
                product = product * bucket;
            }
            CHECK(total == f.degree());
            CHECK(product == f);
        }
    }
}

TEST_CASE("frobenius powering") {
    // x^q = x for every element of F_q: powmod consistency on a sample poly
    ResidueField field(G(-3));
    FqPoly f = reduce_mod(P({{3, 1, 0}, {1, 2, 0}, {0, 1, 0}}), G(-3));
    FqPoly xq = fq_powmod(FqPoly::x(field), field.size(), f);
    // (x^q)^q mod f iterates the Frobenius twice
    FqPoly xqq = fq_powmod(xq, field.size(), f);
    FqPoly expected = fq_powmod(FqPoly::x(field), field.size() * field.size(), f);
    CHECK(xqq == expected);
}
