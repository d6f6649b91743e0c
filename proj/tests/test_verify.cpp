#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "lemn/verify.hpp"

using namespace lemn;
using lemn::testing::G;

TEST_CASE("normalized odd element enumeration") {
    auto elems = normalized_odd_elements(BigInt(50), /*exclude_unit=*/false);
    CHECK(elems.front() == G(1));
    for (const auto& e : elems) {
        CHECK(is_normalized(e));
        CHECK(norm(e) <= 50);
    }
    for (std::size_t i = 1; i < elems.size(); ++i)
        CHECK(norm_lex_less(elems[i - 1], elems[i]));
    // one representative per associate class: count against a direct scan
    std::size_t raw = 0;
    for (long a = -8; a <= 8; ++a)
        for (long b = -8; b <= 8; ++b)
            if (!G(a, b).is_zero() && is_odd(G(a, b)) && norm(G(a, b)) <= 50) ++raw;
    CHECK(elems.size() * 4 == raw);
}

TEST_CASE("structural suite parallel run matches the sequential one") {
    SuiteResult seq = run_structural_suite(BigInt(60), 1);
    SuiteResult par = run_structural_suite(BigInt(60), 4);
    CHECK(seq.pass);
    CHECK(par.pass);
    CHECK(seq.failures == par.failures);
    CHECK(seq.notes == par.notes);
}

TEST_CASE("frobenius suite on a small range") {
    SuiteResult r = run_frobenius_suite(BigInt(40), 3, 2);
    CHECK(r.pass);
    CHECK(r.failures.empty());
}

TEST_CASE("composition suite") {
    SuiteResult r = run_composition_suite(10, BigInt(120));
    CHECK(r.pass);
}

TEST_CASE("constructibility suite on a prefix") {
    SuiteResult r = run_constructibility_suite(3000);
    CHECK(r.pass);
}
