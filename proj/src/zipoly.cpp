#include "lemn/zipoly.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

namespace lemn {

namespace {
std::atomic<std::size_t> g_karatsuba_threshold{32};
}

std::size_t karatsuba_threshold() { return g_karatsuba_threshold.load(); }
void set_karatsuba_threshold(std::size_t n) { g_karatsuba_threshold.store(n ? n : 1); }

ZiPoly::ZiPoly(GaussInt constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

ZiPoly::ZiPoly(std::vector<GaussInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZiPoly ZiPoly::x() { return monomial(GaussInt(1, 0), 1); }

ZiPoly ZiPoly::monomial(GaussInt c, std::size_t deg) {
    if (c.is_zero()) return {};
    std::vector<GaussInt> v(deg + 1);
    v[deg] = std::move(c);
    return ZiPoly(std::move(v));
}

void ZiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussInt ZiPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : GaussInt();
}

const GaussInt& ZiPoly::lc() const {
    if (c_.empty()) throw zero_error("leading coefficient of the zero polynomial");
    return c_.back();
}

ZiPoly ZiPoly::operator+(const ZiPoly& o) const {
    std::vector<GaussInt> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return ZiPoly(std::move(v));
}

ZiPoly ZiPoly::operator-(const ZiPoly& o) const {
    std::vector<GaussInt> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return ZiPoly(std::move(v));
}

ZiPoly ZiPoly::operator-() const {
    std::vector<GaussInt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return ZiPoly(std::move(v));
}

namespace {

void mul_school(const std::vector<GaussInt>& a, const std::vector<GaussInt>& b,
                std::vector<GaussInt>& out) {
    out.assign(a.size() + b.size() - 1, GaussInt());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
}

void mul_rec(const std::vector<GaussInt>& a, const std::vector<GaussInt>& b,
             std::vector<GaussInt>& out) {
    if (a.empty() || b.empty()) {
        out.clear();
        return;
    }
    if (std::min(a.size(), b.size()) < karatsuba_threshold()) {
        mul_school(a, b, out);
        return;
    }
    std::size_t m = std::max(a.size(), b.size()) / 2;
    auto split = [m](const std::vector<GaussInt>& v) {
        std::vector<GaussInt> lo(v.begin(), v.begin() + std::min(m, v.size()));
        std::vector<GaussInt> hi(v.begin() + std::min(m, v.size()), v.end());
        return std::pair(std::move(lo), std::move(hi));
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    auto add_vec = [](const std::vector<GaussInt>& x, const std::vector<GaussInt>& y) {
        std::vector<GaussInt> s(std::max(x.size(), y.size()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i < x.size()) s[i] += x[i];
            if (i < y.size()) s[i] += y[i];
        }
        return s;
    };
    std::vector<GaussInt> z0, z2, z1;
    mul_rec(a0, b0, z0);
    mul_rec(a1, b1, z2);
    mul_rec(add_vec(a0, a1), add_vec(b0, b1), z1);
    // z1 -= z0 + z2
    if (z1.size() < std::max(z0.size(), z2.size())) z1.resize(std::max(z0.size(), z2.size()));
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    out.assign(a.size() + b.size() - 1, GaussInt());
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (i + m < out.size()) out[i + m] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i)
        if (i + 2 * m < out.size()) out[i + 2 * m] += z2[i];
}

}  // namespace

ZiPoly ZiPoly::operator*(const ZiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<GaussInt> out;
    mul_rec(c_, o.c_, out);
    return ZiPoly(std::move(out));
}

ZiPoly ZiPoly::operator*(const GaussInt& s) const {
    if (s.is_zero()) return {};
    std::vector<GaussInt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return ZiPoly(std::move(v));
}

ZiPoly ZiPoly::compose_power(std::size_t m) const {
    if (m == 0) throw zero_error("compose_power requires m >= 1");
    if (is_zero() || m == 1) return *this;
    std::vector<GaussInt> v(m * (c_.size() - 1) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
    return ZiPoly(std::move(v));
}

std::size_t ZiPoly::stride() const {
    std::size_t g = 0;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) g = std::gcd(g, i);
    return g;
}

ZiPoly ZiPoly::compress_power(std::size_t m) const {
    if (m == 0) throw zero_error("compress_power requires m >= 1");
    if (m == 1 || is_zero()) return *this;
    std::vector<GaussInt> v((c_.size() - 1) / m + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % m != 0)
            throw internal_inconsistency_error("compress_power: polynomial not in x^m");
        v[i / m] = c_[i];
    }
    return ZiPoly(std::move(v));
}

std::size_t ZiPoly::trailing_zeros() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return c_.empty() ? 0 : k;
}

ZiPoly ZiPoly::shift_down(std::size_t k) const {
    if (k == 0) return *this;
    if (k > trailing_zeros())
        throw not_divisible_error("shift_down below the trailing-zero count");
    return ZiPoly(std::vector<GaussInt>(c_.begin() + k, c_.end()));
}

ZiPoly ZiPoly::shift_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<GaussInt> v(c_.size() + k);
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return ZiPoly(std::move(v));
}

ZiPoly ZiPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussInt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * GaussInt(long(i));
    return ZiPoly(std::move(v));
}

ZiPoly ZiPoly::conjugate() const {
    std::vector<GaussInt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].conj();
    return ZiPoly(std::move(v));
}

ZiPoly ZiPoly::reverse(std::size_t d) const {
    if (static_cast<int>(d) < degree())
        throw zero_error("reverse length below the degree");
    std::vector<GaussInt> v(d + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[d - i] = c_[i];
    return ZiPoly(std::move(v));
}

GaussInt ZiPoly::eval(const GaussInt& z) const {
    GaussInt acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
}

bool ZiPoly::is_monic() const { return !is_zero() && lc().is_one(); }

GaussInt ZiPoly::content() const {
    GaussInt g;
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? gcd(c, GaussInt()) : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

ZiPoly ZiPoly::primitive_part() const {
    if (is_zero()) return {};
    return exact_div_scalar(content());
}

ZiPoly ZiPoly::exact_div_scalar(const GaussInt& s) const {
    std::vector<GaussInt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = exact_div(c_[i], s);
    return ZiPoly(std::move(v));
}

std::string ZiPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const GaussInt& c = c_[i];
        if (c.is_zero()) continue;
        std::string var = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        std::string term;
        bool negative = false;
        if (c.im() == 0) {
            negative = c.re() < 0;
            BigInt mag = abs(c.re());
            if (mag == 1 && i > 0)
                term = var;
            else
                term = mag.get_str() + var;
        } else {
            term = "(" + c.str() + ")" + var;
        }
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

bool try_exact_div(const ZiPoly& p, const ZiPoly& q, ZiPoly* quotient) {
    if (q.is_zero()) throw zero_error("polynomial division by zero");
    if (p.is_zero()) {
        if (quotient) *quotient = ZiPoly();
        return true;
    }
    if (p.degree() < q.degree()) return false;
    std::vector<GaussInt> r = p.coeffs();
    std::size_t dq = static_cast<std::size_t>(q.degree());
    std::vector<GaussInt> out(r.size() - dq);
    for (std::size_t k = out.size(); k-- > 0;) {
        GaussInt c;
        if (!divides(q.lc(), r[k + dq], &c)) return false;
        out[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dq; ++j) r[k + j] -= c * q.coeff(j);
    }
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    if (quotient) *quotient = ZiPoly(std::move(out));
    return true;
}

ZiPoly exact_div(const ZiPoly& p, const ZiPoly& q) {
    ZiPoly out;
    if (!try_exact_div(p, q, &out))
        throw not_divisible_error("inexact polynomial division");
    return out;
}

bool is_eisenstein_at(const ZiPoly& p, const GaussInt& pi) {
    if (!p.is_monic() || p.degree() < 1) return false;
    for (int i = 0; i < p.degree(); ++i)
        if (!divides(pi, p.coeff(i))) return false;
    return !divides(pi * pi, p.coeff(0));
}

// ---------------------------------------------------------------------------
// Polynomial gcd over Z[i][x].
//
// Images are taken modulo small rational primes p = 3 mod 4, where
// Z[i]/p = F_{p^2} = F_p[t]/(t^2+1) and reduction acts componentwise on
// re/im. Candidate gcds are CRT-lifted componentwise and certified by exact
// trial division; unlucky primes are discarded by minimal image degree.
// ---------------------------------------------------------------------------

namespace {

uint32_t inert_prime(std::size_t idx) {
    static std::vector<uint32_t> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto is_small_prime = [](uint32_t n) {
        if (n % 2 == 0) return n == 2;
        for (uint32_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return n > 1;
    };
    uint32_t candidate = cache.empty() ? 1048575u : cache.back() - 2;
    while (cache.size() <= idx) {
        while (candidate % 4 != 3 || !is_small_prime(candidate)) candidate -= 2;
        cache.push_back(candidate);
        candidate -= 2;
    }
    return cache[idx];
}

struct Fp2 {
    uint64_t a = 0, b = 0;  // a + b*t, t^2 = -1
    bool is_zero() const { return a == 0 && b == 0; }
};

uint64_t mod_pow(uint64_t base, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Fp2 fp2_sub(Fp2 x, Fp2 y, uint64_t p) { return {(x.a + p - y.a) % p, (x.b + p - y.b) % p}; }
Fp2 fp2_mul(Fp2 x, Fp2 y, uint64_t p) {
    uint64_t a = (x.a * y.a + (p - x.b % p) * y.b) % p;
    uint64_t b = (x.a * y.b + x.b * y.a) % p;
    return {a, b};
}
Fp2 fp2_inv(Fp2 x, uint64_t p) {
    uint64_t n = (x.a * x.a + x.b * x.b) % p;
    uint64_t ninv = mod_pow(n, p - 2, p);
    return {x.a * ninv % p, (p - x.b % p) * ninv % p};
}

using Fp2Poly = std::vector<Fp2>;  // ascending degree, trimmed

void fp2_trim(Fp2Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Fp2Poly reduce_mod_inert(const ZiPoly& f, uint64_t p) {
    Fp2Poly out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].a = mpz_fdiv_ui(f.coeffs()[i].re().get_mpz_t(), p);
        out[i].b = mpz_fdiv_ui(f.coeffs()[i].im().get_mpz_t(), p);
    }
    fp2_trim(out);
    return out;
}

void fp2_make_monic(Fp2Poly& f, uint64_t p) {
    if (f.empty()) return;
    Fp2 inv = fp2_inv(f.back(), p);
    for (auto& c : f) c = fp2_mul(c, inv, p);
}

// In-place remainder of a by monic b.
void fp2_rem(Fp2Poly& a, const Fp2Poly& b, uint64_t p) {
    while (a.size() >= b.size() && !a.empty()) {
        Fp2 f = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = fp2_sub(a[shift + i], fp2_mul(f, b[i], p), p);
        fp2_trim(a);
    }
}

Fp2Poly fp2_gcd(Fp2Poly a, Fp2Poly b, uint64_t p) {
    fp2_trim(a);
    fp2_trim(b);
    while (!b.empty()) {
        fp2_make_monic(b, p);
        fp2_rem(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) fp2_make_monic(a, p);
    return a;
}

// Canonical unit choice for the leading coefficient of a gcd: normalized
// when odd, otherwise rotated into the quadrant re > 0, im >= 0.
ZiPoly canonical_leading_unit(const ZiPoly& f) {
    if (f.is_zero()) return f;
    const GaussInt& l = f.lc();
    if (is_odd(l)) return f * GaussInt::unit_i_pow(4 - unit_class(l));
    for (int k = 0; k < 4; ++k) {
        GaussInt u = GaussInt::unit_i_pow(k);
        GaussInt r = l * u;
        if (r.re() > 0 && r.im() >= 0) return f * u;
    }
    return f;
}

ZiPoly prs_pseudo_rem(ZiPoly a, const ZiPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        ZiPoly t = ZiPoly::monomial(a.lc(), a.degree() - b.degree());
        a = a * b.lc() - t * b;
    }
    return a;
}

ZiPoly prs_gcd(ZiPoly a, ZiPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZiPoly r = prs_pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? ZiPoly() : r.primitive_part();
    }
    return a.primitive_part();
}

struct CrtState {
    BigInt modulus = 1;
    std::vector<std::pair<BigInt, BigInt>> coeffs;  // canonical residues in [0, M)

    void reset(uint64_t p, const Fp2Poly& h) {
        modulus = BigInt(static_cast<unsigned long>(p));
        coeffs.assign(h.size(), {});
        for (std::size_t i = 0; i < h.size(); ++i)
            coeffs[i] = {BigInt(static_cast<unsigned long>(h[i].a)),
                         BigInt(static_cast<unsigned long>(h[i].b))};
    }

    void add(uint64_t p, const Fp2Poly& h) {
        uint64_t m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        uint64_t minv = mod_pow(m_mod_p, p - 2, p);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            auto lift = [&](BigInt& v, uint64_t target) {
                uint64_t vp = mpz_fdiv_ui(v.get_mpz_t(), p);
                uint64_t d = (target + p - vp) % p;
                v += modulus * BigInt(static_cast<unsigned long>(d * minv % p));
            };
            lift(coeffs[i].first, h[i].a);
            lift(coeffs[i].second, h[i].b);
        }
        modulus *= static_cast<unsigned long>(p);
    }

    ZiPoly symmetric_poly() const {
        BigInt half = modulus / 2;
        std::vector<GaussInt> v(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            BigInt re = coeffs[i].first, im = coeffs[i].second;
            if (re > half) re -= modulus;
            if (im > half) im -= modulus;
            v[i] = GaussInt(re, im);
        }
        return ZiPoly(std::move(v));
    }
};

// Gcd of two primitive polynomials of positive degree (up to units).
ZiPoly modular_gcd_core(const ZiPoly& a, const ZiPoly& b) {
    GaussInt lead_bound = gcd(a.lc(), b.lc());
    CrtState crt;
    int best_deg = -1;
    ZiPoly prev_candidate;
    bool have_prev = false;
    for (std::size_t idx = 0; idx < 64; ++idx) {
        uint64_t p = inert_prime(idx);
        Fp2Poly ia = reduce_mod_inert(a, p), ib = reduce_mod_inert(b, p);
        if (ia.size() != a.coeffs().size() || ib.size() != b.coeffs().size())
            continue;  // p divides a leading coefficient
        Fp2Poly g = fp2_gcd(std::move(ia), std::move(ib), p);
        int d = static_cast<int>(g.size()) - 1;
        if (d == 0) return ZiPoly::one();
        Fp2 scale = {mpz_fdiv_ui(lead_bound.re().get_mpz_t(), p),
                     mpz_fdiv_ui(lead_bound.im().get_mpz_t(), p)};
        for (auto& c : g) c = fp2_mul(c, scale, p);
        if (best_deg == -1 || d < best_deg) {
            best_deg = d;
            crt.reset(p, g);
            have_prev = false;
        } else if (d > best_deg) {
            continue;
        } else {
            crt.add(p, g);
        }
        ZiPoly candidate = crt.symmetric_poly();
        if (candidate.is_zero()) continue;
        candidate = candidate.primitive_part();
        if (have_prev && candidate == prev_candidate) {
            if (try_exact_div(a, candidate, nullptr) && try_exact_div(b, candidate, nullptr))
                return candidate;
        }
        prev_candidate = std::move(candidate);
        have_prev = true;
    }
    return prs_gcd(a, b);
}

}  // namespace

ZiPoly zipoly_gcd(const ZiPoly& a, const ZiPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return canonical_leading_unit(b.primitive_part()) * b.content();
    if (b.is_zero()) return canonical_leading_unit(a.primitive_part()) * a.content();
    GaussInt c = gcd(a.content(), b.content());
    ZiPoly pa = a.primitive_part(), pb = b.primitive_part();
    if (pa.degree() == 0 || pb.degree() == 0) return ZiPoly(c);

    std::size_t xs = std::min(pa.trailing_zeros(), pb.trailing_zeros());
    pa = pa.shift_down(xs);
    pb = pb.shift_down(xs);
    ZiPoly g;
    if (pa.degree() == 0 || pb.degree() == 0) {
        g = ZiPoly::one();
    } else {
        std::size_t m = std::gcd(pa.stride(), pb.stride());
        if (m > 1)
            g = modular_gcd_core(pa.compress_power(m), pb.compress_power(m)).compose_power(m);
        else
            g = modular_gcd_core(pa, pb);
    }
    return canonical_leading_unit(g.shift_up(xs)) * c;
}

bool zipoly_coprime(const ZiPoly& a, const ZiPoly& b) {
    if (a.is_zero()) return b.degree() <= 0;
    if (b.is_zero()) return a.degree() <= 0;
    if (a.degree() == 0 || b.degree() == 0) return true;
    if (a.trailing_zeros() > 0 && b.trailing_zeros() > 0) return false;
    for (std::size_t idx = 0; idx < 8; ++idx) {
        uint64_t p = inert_prime(idx);
        Fp2Poly ia = reduce_mod_inert(a, p), ib = reduce_mod_inert(b, p);
        if (ia.size() != a.coeffs().size() || ib.size() != b.coeffs().size()) continue;
        return fp2_gcd(std::move(ia), std::move(ib), p).size() == 1;
    }
    return zipoly_gcd(a, b).degree() == 0;
}

}  // namespace lemn
