#include "lemn/lemnatomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lemn {

namespace {

void require_odd_nonzero(const GaussInt& beta, const char* who) {
    if (beta.is_zero() || !is_odd(beta))
        throw not_odd_error(std::string(who) + " requires an odd nonzero element, got " +
                            beta.str());
}

ZiPoly compute_lemnatomic(const GaussInt& bn);

const ZiPoly& lemnatomic_poly(const GaussInt& bn) {
    static std::map<std::string, ZiPoly> cache;
    static std::mutex mtx;
    std::string key = bn.str();
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ZiPoly computed = compute_lemnatomic(bn);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(computed)).first->second;
}

ZiPoly compute_lemnatomic(const GaussInt& bn) {
    if (bn.is_one()) return ZiPoly::x();
    ZiPoly quotient = division_poly(bn);
    for (const auto& gamma : normalized_divisors(bn)) {
        if (gamma == bn) continue;
        ZiPoly q;
        if (!try_exact_div(quotient, lemnatomic_poly(gamma), &q))
            throw internal_inconsistency_error(
                "division polynomial of " + bn.str() +
                " is not divisible by the lemnatomic polynomial of " + gamma.str());
        quotient = std::move(q);
    }
    return quotient;
}

}  // namespace

LemnatomicRecord lemnatomic(const GaussInt& beta) {
    require_odd_nonzero(beta, "lemnatomic");
    GaussInt bn = normalize(beta).second;
    const ZiPoly& poly = lemnatomic_poly(bn);
    return {bn, poly, BigInt(poly.degree()), poly.eval(GaussInt())};
}

CheckReport verify_degree(const GaussInt& beta) {
    LemnatomicRecord rec = lemnatomic(beta);
    BigInt expected = unit_group_order(rec.beta);
    bool pass = rec.degree == expected;
    return {pass, "deg = " + rec.degree.get_str() + ", |(O/beta)^x| = " + expected.get_str()};
}

CheckReport verify_constant_term(const GaussInt& beta) {
    require_odd_nonzero(beta, "verify_constant_term");
    if (norm(beta) == 1)
        throw not_odd_error("verify_constant_term requires a nonunit");
    LemnatomicRecord rec = lemnatomic(beta);
    GaussFactorization f = factor(rec.beta);
    GaussInt expected = f.factors.size() == 1 ? f.factors[0].first : GaussInt(1, 0);
    bool pass = rec.constant_term == expected;
    return {pass,
            "constant term = " + rec.constant_term.str() + ", expected " + expected.str()};
}

CheckReport verify_decomposition(const GaussInt& beta) {
    require_odd_nonzero(beta, "verify_decomposition");
    GaussInt bn = normalize(beta).second;
    ZiPoly product = ZiPoly::one();
    for (const auto& gamma : normalized_divisors(bn))
        product = product * lemnatomic(gamma).poly;
    bool pass = product == division_poly(bn);
    return {pass, pass ? "product of lemnatomic factors matches the division polynomial"
                       : "product mismatch for " + bn.str()};
}

FrobeniusPattern frobenius_pattern(const GaussInt& beta, const GaussInt& pi) {
    require_odd_nonzero(beta, "frobenius_pattern");
    LemnatomicRecord rec = lemnatomic(beta);
    if (!gcd(pi, rec.beta).is_unit())
        throw not_coprime_error("frobenius_pattern requires gcd(pi, beta) = 1");
    if (!is_separable_mod(rec.poly, pi))
        throw not_separable_error("lemnatomic polynomial of " + rec.beta.str() +
                                  " is inseparable mod " + pi.str());
    FrobeniusPattern out;
    out.prime = pi;
    out.expected = multiplicative_order(pi, rec.beta);
    out.observed = ddf_degree_multiset(reduce_mod(rec.poly, pi));
    out.pass = std::all_of(out.observed.begin(), out.observed.end(),
                           [&](int d) { return BigInt(d) == out.expected; });
    return out;
}

std::vector<GaussInt> admissible_primes(const GaussInt& beta, std::size_t count) {
    require_odd_nonzero(beta, "admissible_primes");
    LemnatomicRecord rec = lemnatomic(beta);
    std::vector<GaussInt> out;
    BigInt bound = 20;
    while (out.size() < count) {
        out.clear();
        std::vector<GaussInt> primes;
        for (BigInt p = 3; p <= bound; p += 2) {
            if (!is_rational_prime(p)) continue;
            if (p % 4 == 3) {
                if (p * p <= bound) primes.emplace_back(-p, BigInt(0));
            } else {
                GaussFactorization f = factor(GaussInt(p));
                for (const auto& [q, e] : f.factors) {
                    (void)e;
                    primes.push_back(q);
                }
            }
        }
        std::sort(primes.begin(), primes.end(), norm_lex_less);
        for (const auto& pi : primes) {
            if (out.size() == count) break;
            if (!gcd(pi, rec.beta).is_unit()) continue;
            if (!is_separable_mod(rec.poly, pi)) continue;
            out.push_back(pi);
        }
        bound *= 4;
    }
    return out;
}

const char* to_string(EvidenceStatus s) {
    switch (s) {
        case EvidenceStatus::kProved: return "PROVED";
        case EvidenceStatus::kConsistent: return "CONSISTENT";
        default: return "REFUTED";
    }
}

IrreducibilityEvidence irreducibility_evidence(const GaussInt& beta, std::size_t trials) {
    require_odd_nonzero(beta, "irreducibility_evidence");
    if (norm(beta) == 1)
        throw not_odd_error("irreducibility_evidence requires a nonunit");
    LemnatomicRecord rec = lemnatomic(beta);
    IrreducibilityEvidence ev;
    for (const auto& pi : admissible_primes(beta, trials)) {
        FrobeniusPattern pat = frobenius_pattern(beta, pi);
        if (!pat.pass) ++ev.mismatches;
        if (pat.observed.size() == 1 && BigInt(pat.observed[0]) == rec.degree)
            ev.status = EvidenceStatus::kProved;
        ev.patterns.push_back(std::move(pat));
        ++ev.primes_tested;
    }
    if (ev.mismatches >= 3) ev.status = EvidenceStatus::kRefuted;
    return ev;
}

}  // namespace lemn
