#include "lemn/fqpoly.hpp"

#include <algorithm>

namespace lemn {

namespace {

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

}  // namespace

ResidueField::ResidueField(const GaussInt& pi) : pi_(pi) {
    if (!is_prime(pi) || !is_odd(pi) || !is_normalized(pi))
        throw error("residue field requires a normalized odd Gaussian prime, got " +
                    pi.str());
    BigInt n = norm(pi);
    if (pi.im() == 0) {
        // inert: pi = -p, p = 3 mod 4
        ext_degree_ = 2;
        BigInt p = -pi.re();
        if (!p.fits_ulong_p() || p.get_ui() >= (1ull << 31))
            throw error("residue-field modulus too large: " + pi.str());
        p_ = p.get_ui();
    } else {
        ext_degree_ = 1;
        if (!n.fits_ulong_p() || n.get_ui() >= (1ull << 31))
            throw error("residue-field modulus too large: " + pi.str());
        p_ = n.get_ui();
        // image of i: pi = c + di divides i - r, so r = -c * d^{-1} mod p
        uint64_t c = mpz_fdiv_ui(pi.re().get_mpz_t(), p_);
        uint64_t d = mpz_fdiv_ui(pi.im().get_mpz_t(), p_);
        uint64_t dinv = mod_pow(d, p_ - 2, p_);
        i_image_ = (p_ - c) % p_ * dinv % p_;
        if (i_image_ * i_image_ % p_ != p_ - 1)
            throw internal_inconsistency_error("bad image of i mod " + pi.str());
    }
}

FqElem ResidueField::reduce(const GaussInt& c) const {
    uint64_t re = mpz_fdiv_ui(c.re().get_mpz_t(), p_);
    uint64_t im = mpz_fdiv_ui(c.im().get_mpz_t(), p_);
    if (ext_degree_ == 1) return {(re + im * i_image_) % p_, 0};
    return {re, im};
}

FqElem ResidueField::add(FqElem x, FqElem y) const {
    return {(x.a + y.a) % p_, (x.b + y.b) % p_};
}

FqElem ResidueField::sub(FqElem x, FqElem y) const {
    return {(x.a + p_ - y.a) % p_, (x.b + p_ - y.b) % p_};
}

FqElem ResidueField::mul(FqElem x, FqElem y) const {
    if (ext_degree_ == 1) return {x.a * y.a % p_, 0};
    uint64_t a = (x.a * y.a % p_ + (p_ - x.b) * y.b % p_) % p_;
    uint64_t b = (x.a * y.b % p_ + x.b * y.a % p_) % p_;
    return {a, b};
}

FqElem ResidueField::inv(FqElem x) const {
    if (x.is_zero()) throw zero_error("inverse of zero residue");
    if (ext_degree_ == 1) return {mod_pow(x.a, p_ - 2, p_), 0};
    uint64_t n = (x.a * x.a % p_ + x.b * x.b % p_) % p_;
    uint64_t ninv = mod_pow(n, p_ - 2, p_);
    return {x.a * ninv % p_, (p_ - x.b) * ninv % p_};
}

FqPoly::FqPoly(ResidueField field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::x(const ResidueField& f) {
    return FqPoly(f, {{0, 0}, {1, 0}});
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<FqElem> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        FqElem a = i < c_.size() ? c_[i] : FqElem{};
        FqElem b = i < o.c_.size() ? o.c_[i] : FqElem{};
        v[i] = field_.add(a, b);
    }
    return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<FqElem> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        FqElem a = i < c_.size() ? c_[i] : FqElem{};
        FqElem b = i < o.c_.size() ? o.c_[i] : FqElem{};
        v[i] = field_.sub(a, b);
    }
    return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(field_);
    std::vector<FqElem> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    FqElem inv = field_.inv(c_.back());
    std::vector<FqElem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], inv);
    return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(field_);
    std::vector<FqElem> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        FqElem k = field_.reduce(GaussInt(long(i % field_.p()), 0));
        v[i - 1] = field_.mul(c_[i], k);
    }
    return FqPoly(field_, std::move(v));
}

std::pair<FqPoly, FqPoly> fq_divrem(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw zero_error("polynomial division by zero");
    const ResidueField& F = a.field();
    std::vector<FqElem> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {FqPoly(F), a};
    std::vector<FqElem> q(a.degree() - db + 1);
    FqElem lcinv = F.inv(b.coeffs().back());
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        FqElem c = F.mul(r[k + db], lcinv);
        q[k] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b.coeffs()[j]));
    }
    return {FqPoly(F, std::move(q)), FqPoly(F, std::move(r))};
}

FqPoly fq_gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = fq_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FqPoly fq_powmod(const FqPoly& base, uint64_t e, const FqPoly& modulus) {
    const ResidueField& F = base.field();
    FqPoly result(F, {{1, 0}});
    FqPoly b = fq_divrem(base, modulus).second;
    while (e) {
        if (e & 1) result = fq_divrem(result * b, modulus).second;
        b = fq_divrem(b * b, modulus).second;
        e >>= 1;
    }
    return result;
}

FqPoly reduce_mod(const ZiPoly& p, const GaussInt& pi) {
    ResidueField F(pi);
    std::vector<FqElem> v(p.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.reduce(p.coeffs()[i]);
    return FqPoly(std::move(F), std::move(v));
}

bool is_separable_mod(const ZiPoly& p, const GaussInt& pi) {
    FqPoly f = reduce_mod(p, pi);
    if (f.is_zero()) throw zero_error("polynomial reduces to zero mod " + pi.str());
    return fq_gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<int, FqPoly>> distinct_degree_factorization(const FqPoly& f) {
    if (!f.is_monic()) throw error("distinct-degree factorization requires a monic input");
    if (fq_gcd(f, f.derivative()).degree() != 0)
        throw not_squarefree_error("polynomial is not squarefree over its field");
    const ResidueField& F = f.field();
    uint64_t q = F.size();
    std::vector<std::pair<int, FqPoly>> out;
    FqPoly fstar = f;
    FqPoly h = FqPoly::x(F);
    int d = 0;
    while (fstar.degree() > 0 && 2 * (d + 1) <= fstar.degree()) {
        ++d;
        h = fq_powmod(h, q, fstar);
        FqPoly g = fq_gcd(fstar, h - FqPoly::x(F));
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            fstar = fq_divrem(fstar, g).first;
            h = fq_divrem(h, fstar).second;
        }
    }
    if (fstar.degree() > 0) out.emplace_back(fstar.degree(), fstar);
    return out;
}

std::vector<int> ddf_degree_multiset(const FqPoly& f) {
    std::vector<int> degs;
    for (const auto& [d, bucket] : distinct_degree_factorization(f)) {
        int count = bucket.degree() / d;
        for (int j = 0; j < count; ++j) degs.push_back(d);
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace lemn
