#include "lemn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "lemn/chebyshev.hpp"
#include "lemn/cmfield.hpp"
#include "lemn/construct.hpp"
#include "lemn/lemnatomic.hpp"
#include "lemn/numlem.hpp"

namespace lemn {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

// Runs fn(i) for i in [0, count) on worker threads; failure strings are
// collected per index so the merged report is order-independent.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<std::size_t>(threads, count ? count : 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string fmt_residual(const Real& r) { return r.str(3); }

}  // namespace

std::vector<GaussInt> normalized_odd_elements(const BigInt& max_norm, bool exclude_unit) {
    std::vector<GaussInt> out;
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), max_norm.get_mpz_t());
    bound += 1;
    for (BigInt a = -bound; a <= bound; ++a) {
        for (BigInt b = -bound; b <= bound; ++b) {
            GaussInt g(a, b);
            BigInt n = norm(g);
            if (n == 0 || n > max_norm) continue;
            if (!is_odd(g) || !is_normalized(g)) continue;
            if (exclude_unit && n == 1) continue;
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
}

SuiteResult run_structural_suite(const BigInt& max_norm, unsigned threads) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "structural";
    std::vector<GaussInt> betas = normalized_odd_elements(max_norm, /*exclude_unit=*/true);
    std::vector<std::vector<std::string>> failures(betas.size());

    parallel_for(betas.size(), threads, [&](std::size_t i) {
        const GaussInt& beta = betas[i];
        auto& bad = failures[i];
        auto tag = [&beta](const std::string& what) { return beta.str() + ": " + what; };

        CheckReport deg = verify_degree(beta);
        if (!deg.pass) bad.push_back(tag("degree: " + deg.detail));
        CheckReport ct = verify_constant_term(beta);
        if (!ct.pass) bad.push_back(tag("constant term: " + ct.detail));
        CheckReport dec = verify_decomposition(beta);
        if (!dec.pass) bad.push_back(tag("decomposition: " + dec.detail));

        MultMap m = mult_map(beta);
        BigInt d = (norm(beta) - 1) / 4;
        if (!m.P.is_monic()) bad.push_back(tag("P is not monic"));
        if (BigInt(m.P.degree()) != d || BigInt(m.Q.degree()) != d)
            bad.push_back(tag("deg P or deg Q differs from (N-1)/4"));
        if (m.Q != m.P.reverse(m.P.degree())) bad.push_back(tag("Q != reverse(P)"));
        if (m.P.eval(GaussInt()) != beta) bad.push_back(tag("P(0) != beta"));
        if (is_prime(beta) && !is_eisenstein_at(m.P, beta))
            bad.push_back(tag("P is not Eisenstein at beta"));
    });

    for (auto& f : failures)
        result.failures.insert(result.failures.end(), f.begin(), f.end());
    result.pass = result.failures.empty();
    result.notes.push_back(std::to_string(betas.size()) + " elements checked up to norm " +
                           max_norm.get_str());
    result.seconds = timer.seconds();
    return result;
}

SuiteResult run_frobenius_suite(const BigInt& max_norm, std::size_t primes,
                                unsigned threads) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "frobenius";
    std::vector<GaussInt> betas = normalized_odd_elements(max_norm, /*exclude_unit=*/true);
    std::vector<std::vector<std::string>> failures(betas.size());

    parallel_for(betas.size(), threads, [&](std::size_t i) {
        const GaussInt& beta = betas[i];
        for (const auto& pi : admissible_primes(beta, primes)) {
            FrobeniusPattern pat = frobenius_pattern(beta, pi);
            if (!pat.pass) {
                std::string degs;
                for (int d : pat.observed) degs += std::to_string(d) + " ";
                failures[i].push_back(beta.str() + " mod " + pi.str() + ": degrees " +
                                      degs + "!= order " + pat.expected.get_str());
            }
        }
    });
    for (auto& f : failures)
        result.failures.insert(result.failures.end(), f.begin(), f.end());
    result.pass = result.failures.empty();
    result.notes.push_back(std::to_string(betas.size()) + " elements, " +
                           std::to_string(primes) + " admissible primes each");
    result.seconds = timer.seconds();
    return result;
}

namespace {

// Exact check of M_{beta gamma} = M_beta o M_gamma by cross-multiplication
// in the compressed variable u = x^4.
bool composition_matches(const GaussInt& beta, const GaussInt& gamma) {
    MultMap mb = mult_map(beta);
    MultMap mg = mult_map(gamma);
    MultMap mbg = mult_map(beta * gamma);

    ZiPoly A = mg.P, B = mg.Q;
    ZiPoly A4 = A * A, B4 = B * B;
    A4 = A4 * A4;
    B4 = B4 * B4;
    ZiPoly S = ZiPoly::x() * A4;  // u A(u)^4
    int d = mb.P.degree();
    std::vector<ZiPoly> b_pow(d + 1);
    b_pow[0] = ZiPoly::one();
    for (int j = 1; j <= d; ++j) b_pow[j] = b_pow[j - 1] * B4;

    auto homogenize = [&](const ZiPoly& poly) {
        ZiPoly acc;
        for (int j = d; j >= 0; --j) {
            acc = acc * S + b_pow[d - j] * poly.coeff(j);
        }
        return acc;
    };
    ZiPoly phat = homogenize(mb.P);
    ZiPoly qhat = homogenize(mb.Q);
    return A * phat * mbg.Q == mbg.P * (B * qhat);
}

}  // namespace

SuiteResult run_composition_suite(std::size_t pairs, const BigInt& max_norm) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "composition";
    std::vector<GaussInt> betas = normalized_odd_elements(max_norm, /*exclude_unit=*/true);
    std::vector<std::pair<GaussInt, GaussInt>> chosen;
    for (const auto& b : betas) {
        for (const auto& g : betas) {
            if (norm(b) * norm(g) > max_norm) continue;
            if (norm_lex_less(g, b)) continue;  // unordered pairs once
            chosen.emplace_back(b, g);
        }
    }
    // largest admissible products first: composing high-degree maps is the
    // stronger check
    std::sort(chosen.begin(), chosen.end(), [](const auto& x, const auto& y) {
        BigInt nx = norm(x.first * x.second), ny = norm(y.first * y.second);
        if (nx != ny) return nx > ny;
        if (x.first != y.first) return norm_lex_less(x.first, y.first);
        return norm_lex_less(x.second, y.second);
    });
    if (chosen.size() > pairs) chosen.resize(pairs);

    for (const auto& [b, g] : chosen) {
        if (!composition_matches(b, g))
            result.failures.push_back("M_{" + (b * g).str() + "} != M_{" + b.str() +
                                      "} o M_{" + g.str() + "}");
    }
    result.pass = result.failures.empty();
    result.notes.push_back(std::to_string(chosen.size()) + " pairs checked");
    result.seconds = timer.seconds();
    return result;
}

SuiteResult run_numeric_suite(int digits) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "numeric";
    PhiEvaluator ev(digits);

    Real varpi_gap = abs(ev.varpi_by_quadrature() - ev.varpi_by_agm());
    Real tol_varpi = Real::pow10(-30, ev.prec());
    result.notes.push_back("varpi = " + ev.varpi().str(digits));
    result.notes.push_back("varpi quadrature/AGM gap = " + fmt_residual(varpi_gap));
    if (!(varpi_gap < tol_varpi))
        result.failures.push_back("varpi methods disagree: " + fmt_residual(varpi_gap));

    Real tol_identity = Real::pow10(-25, ev.prec());
    for (const auto& [name, residual] : verify_identities(ev, 100)) {
        result.notes.push_back(name + " residual = " + fmt_residual(residual));
        if (!(residual < tol_identity))
            result.failures.push_back(name + " residual " + fmt_residual(residual) +
                                      " exceeds 1e-25");
    }

    Real tol_roots = Real::pow10(-18, ev.prec());
    for (const auto& beta : normalized_odd_elements(BigInt(50), /*exclude_unit=*/false)) {
        Real residual = verify_lemnatomic_roots(ev, beta);
        if (!(residual < tol_roots))
            result.failures.push_back("lemnatomic roots of " + beta.str() + ": residual " +
                                      fmt_residual(residual));
    }
    result.notes.push_back("lemnatomic roots verified up to norm 50");

    const std::vector<GaussInt> multmap_cases = {GaussInt(3), GaussInt(5), GaussInt(-1, 2),
                                                 GaussInt(2, 3)};
    for (const auto& beta : multmap_cases) {
        Real residual = verify_multmap_numeric(ev, beta, 20);
        result.notes.push_back("multiplication map " + beta.str() + " residual = " +
                               fmt_residual(residual));
        if (!(residual < tol_roots))
            result.failures.push_back("multiplication map residual for " + beta.str() +
                                      ": " + fmt_residual(residual));
    }

    result.pass = result.failures.empty();
    result.seconds = timer.seconds();
    return result;
}

SuiteResult run_chebyshev_suite() {
    Stopwatch timer;
    SuiteResult result;
    result.name = "chebyshev";
    for (unsigned n = 1; n <= 99; n += 2) {
        auto factors = factor_D(n);
        ZiPoly product = ZiPoly::one();
        for (const auto& [k, dk] : factors) {
            product = product * dk;
            if (static_cast<unsigned>(dk.degree()) != euler_phi(k))
                result.failures.push_back("deg D_" + std::to_string(k) + " != phi(k)");
        }
        if (product != monic_C(n))
            result.failures.push_back("product of D_k differs from C_" + std::to_string(n));
        if (n >= 3) {
            DConstantReport rep = verify_D_constant(n);
            if (!rep.pass)
                result.failures.push_back("D_" + std::to_string(n) + "(0) = " +
                                          std::to_string(rep.value) + ", expected " +
                                          std::to_string(rep.expected));
        }
    }

    std::mt19937_64 rng(20260810);
    std::uniform_real_distribution<double> dist(-3.2, 3.2);
    double worst = 0;
    for (unsigned n = 1; n <= 15; n += 2) {
        std::vector<double> thetas(100);
        for (auto& t : thetas) t = dist(rng);
        worst = std::max(worst, sin_identity_check(n, thetas));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    result.notes.push_back(std::string("sine identity max residual = ") + buf);
    if (!(worst < 1e-10))
        result.failures.push_back("sine identity residual " + std::to_string(worst));

    result.pass = result.failures.empty();
    result.seconds = timer.seconds();
    return result;
}

SuiteResult run_constructibility_suite(long limit) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "constructibility";
    for (long n = 1; n <= limit; ++n) {
        BigInt bn(n);
        BigInt odd = bn;
        while (mpz_even_p(odd.get_mpz_t())) odd /= 2;
        bool abel = is_constructible(bn);
        bool order = power_of_two_test(odd);
        if (abel != order) {
            result.failures.push_back("n = " + std::to_string(n) +
                                      ": Fermat test and order test disagree");
            if (result.failures.size() > 20) break;
        }
        if (mpz_odd_p(bn.get_mpz_t()) &&
            unit_group_order_int(bn) != degree_formula_order(bn)) {
            result.failures.push_back("n = " + std::to_string(n) +
                                      ": the two order formulas disagree");
            break;
        }
    }
    struct Spot {
        long n;
        bool expected;
    };
    const Spot spots[] = {{3, true},  {4, true},   {5, true},   {6, true},  {15, true},
                          {16, true}, {17, true},  {7, false},  {9, false}, {11, false},
                          {13, false}, {21, false}, {25, false}};
    for (const auto& s : spots) {
        if (is_constructible(BigInt(s.n)) != s.expected)
            result.failures.push_back("spot value n = " + std::to_string(s.n));
    }
    result.pass = result.failures.empty();
    result.notes.push_back("checked n <= " + std::to_string(limit));
    result.seconds = timer.seconds();
    return result;
}

}  // namespace lemn
