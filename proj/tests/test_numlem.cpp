#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "lemn/lemnatomic.hpp"
#include "lemn/numlem.hpp"

using namespace lemn;
using lemn::testing::G;
using lemn::testing::P;

namespace {

const PhiEvaluator& ev40() {
    static PhiEvaluator ev(40);
    return ev;
}

double log10_abs(const Real& r) {
    double d = std::fabs(r.to_double());
    return d == 0 ? -400.0 : std::log10(d);
}

}  // namespace

TEST_CASE("varpi") {
    const auto& ev = ev40();
    CHECK(ev.digits() == 40);
    // agreement of the two independent methods within the residual budget
    Real gap = abs(ev.varpi_by_quadrature() - ev.varpi_by_agm());
    CHECK(gap < ev.target_tolerance());
    CHECK(gap < Real::pow10(-30, ev.prec()));
    // frozen reference value (established by quadrature + AGM cross-check)
    Real reference(ev.prec());
    mpfr_set_str(reference.raw(), "2.6220575542921198104648395898911194137", 10, MPFR_RNDN);
    CHECK(abs(ev.varpi() - reference) < Real::pow10(-36, ev.prec()));
}

TEST_CASE("special values") {
    const auto& ev = ev40();
    Real tol = Real::pow10(-35, ev.prec());
    CHECK(abs(ev.phi_real(Real(0L, ev.prec()))) < tol);
    CHECK(abs(ev.phi_real(ev.varpi() / 2L) - Real(1L, ev.prec())) < tol);
    CHECK(abs(ev.phiprime_real(ev.varpi() / 2L)) < tol);
    CHECK(abs(ev.phiprime_real(Real(0L, ev.prec())) - Real(1L, ev.prec())) < tol);
    CHECK(abs(ev.phi_real(ev.varpi())) < tol);
    CHECK(abs(ev.phiprime_real(ev.varpi()) + Real(1L, ev.prec())) < tol);
}

TEST_CASE("periodicity, oddness and the half-period flip") {
    const auto& ev = ev40();
    Real tol = Real::pow10(-34, ev.prec());
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        Real s = ev.make_real(d(rng) * 2.62);
        CHECK(abs(ev.phi_real(s + ev.varpi() * 2L) - ev.phi_real(s)) < tol);
        CHECK(abs(ev.phi_real(s + ev.varpi()) + ev.phi_real(s)) < tol);
        CHECK(abs(ev.phi_real(-s) + ev.phi_real(s)) < tol);
        CHECK(abs(ev.phiprime_real(-s) - ev.phiprime_real(s)) < tol);
    }
}

TEST_CASE("half-period derivative identity at z = varpi/2") {
    // both sides equal 1: phi'(0) = 1 and 2 phi(varpi/2)/(1 + phi(varpi/2)^2) = 1
    const auto& ev = ev40();
    Real one(1L, ev.prec());
    Real z = ev.varpi() / 2L;
    Real lhs = ev.phiprime_real(z - ev.varpi() / 2L);
    Real phi_z = ev.phi_real(z);
    Real rhs = phi_z * 2L / (one + phi_z * phi_z);
    Real tol = Real::pow10(-35, ev.prec());
    CHECK(abs(lhs - one) < tol);
    CHECK(abs(rhs - one) < tol);
}

TEST_CASE("phi(2 varpi / 5) is a root of Lambda_5") {
    const auto& ev = ev40();
    Real r = ev.phi_real(ev.varpi() * 2L / 5L);
    CHECK(r.sign() > 0);
    Complex val = eval_poly_complex(lemn::testing::lambda5(), Complex(r));
    CHECK(abs(val) < Real::pow10(-25, ev.prec()));
}

TEST_CASE("imaginary axis") {
    const auto& ev = ev40();
    Real tol = Real::pow10(-34, ev.prec());
    for (double sd : {0.3, 0.9, 1.7, 2.5}) {
        Real s = ev.make_real(sd);
        Complex z(Real(0L, ev.prec()), s);
        Complex phi = ev.phi_complex(z);
        CHECK(abs(phi.re) < tol);
        CHECK(abs(phi.im - ev.phi_real(s)) < tol);
        Complex dphi = ev.phiprime_complex(z);
        CHECK(abs(dphi.re - ev.phiprime_real(s)) < tol);
        CHECK(abs(dphi.im) < tol);
    }
}

TEST_CASE("poles raise pole_error") {
    const auto& ev = ev40();
    Complex pole(ev.varpi() / 2L, ev.varpi() / 2L);
    CHECK_THROWS_AS(ev.phi_complex(pole), pole_error);
    Complex pole2(ev.varpi() / 2L, -(ev.varpi() / 2L));
    CHECK_THROWS_AS(ev.phi_complex(pole2), pole_error);
}

TEST_CASE("lemnatomic root residuals") {
    const auto& ev = ev40();
    CHECK(verify_lemnatomic_roots(ev, G(1)) < Real::pow10(-30, ev.prec()));
    CHECK(verify_lemnatomic_roots(ev, G(5)) < Real::pow10(-20, ev.prec()));
    CHECK(verify_lemnatomic_roots(ev, G(-1, 2)) < Real::pow10(-20, ev.prec()));
    // the -1+2i roots satisfy x^4 = 1 - 2i
    Complex delta = (ev.make_complex(G(1, 1)) / ev.make_complex(G(-1, 2))) * ev.varpi();
    Complex root = ev.phi_complex(delta);
    Complex r2 = root * root;
    Complex lhs = r2 * r2 - ev.make_complex(G(1, -2));
    CHECK(abs(lhs) < Real::pow10(-20, ev.prec()));
}

TEST_CASE("division polynomial vanishes at every residue value") {
    const auto& ev = ev40();
    Real tol = Real::pow10(-20, ev.prec());
    for (GaussInt beta : {G(-1, 2), G(-3)}) {
        ZiPoly dp = division_poly(beta);
        // all residues mod beta, by canonicalizing a covering box
        std::vector<GaussInt> residues;
        for (long a = -4; a <= 4; ++a) {
            for (long b = -4; b <= 4; ++b) {
                GaussInt r = mod(G(a, b), beta);
                if (std::find(residues.begin(), residues.end(), r) == residues.end())
                    residues.push_back(r);
            }
        }
        REQUIRE(BigInt(long(residues.size())) == norm(beta));
        Complex delta = (ev.make_complex(G(1, 1)) / ev.make_complex(beta)) * ev.varpi();
        for (const auto& alpha : residues) {
            Complex root = ev.phi_complex(ev.make_complex(alpha) * delta);
            CHECK(abs(eval_poly_complex(dp, root)) < tol);
        }
    }
}

TEST_CASE("identities") {
    const auto& ev = ev40();
    Real tol = Real::pow10(-25, ev.prec());
    for (const auto& [name, residual] : verify_identities(ev, 25)) {
        INFO(name);
        CHECK(residual < tol);
    }
}

TEST_CASE("multiplication map residuals") {
    const auto& ev = ev40();
    CHECK(verify_multmap_numeric(ev, G(1), 5).is_zero());
    CHECK(verify_multmap_numeric(ev, G(-1, 2), 5) < Real::pow10(-20, ev.prec()));
    CHECK(verify_multmap_numeric(ev, G(5), 5) < Real::pow10(-18, ev.prec()));
}

TEST_CASE("residuals scale with the precision") {
    PhiEvaluator lo(30), hi(50);
    auto res_lo = verify_identities(lo, 10);
    auto res_hi = verify_identities(hi, 10);
    REQUIRE(res_lo.size() == res_hi.size());
    for (std::size_t i = 0; i < res_lo.size(); ++i) {
        INFO(res_lo[i].name);
        CHECK(log10_abs(res_hi[i].max_residual) < log10_abs(res_lo[i].max_residual) - 5.0);
    }
}
