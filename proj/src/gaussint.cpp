#include "lemn/gaussint.hpp"

#include <algorithm>
#include <cctype>

namespace lemn {

namespace {

// round(x/n) with ties toward -infinity, n > 0: ceil((2x - n) / (2n)).
BigInt round_half_down_div(const BigInt& x, const BigInt& n) {
    BigInt num = 2 * x - n;
    BigInt den = 2 * n;
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

const GaussInt kOnePlusI(1, 1);

}  // namespace

GaussInt GaussInt::unit_i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussInt(1, 0);
        case 1: return GaussInt(0, 1);
        case 2: return GaussInt(-1, 0);
        default: return GaussInt(0, -1);
    }
}

bool GaussInt::is_unit() const { return norm(*this) == 1; }

std::string GaussInt::str() const {
    if (im_ == 0) return re_.get_str();
    std::string imag;
    BigInt a = abs(im_);
    imag = (a == 1) ? "i" : a.get_str() + "i";
    std::string sign = (im_ < 0) ? "-" : "+";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
    return re_.get_str() + sign + imag;
}

GaussInt GaussInt::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty Gaussian integer literal");

    BigInt re = 0, im = 0;
    bool have_re = false, have_im = false;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        bool imag = false;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
            imag = true;
            ++pos;
        }
        if (digits.empty() && !imag)
            throw parse_error("malformed Gaussian integer: '" + text + "'");
        BigInt v = digits.empty() ? BigInt(1) : BigInt(digits);
        if (sign < 0) v = -v;
        if (imag) {
            if (have_im) throw parse_error("duplicate imaginary part: '" + text + "'");
            im = v;
            have_im = true;
        } else {
            if (have_re) throw parse_error("duplicate real part: '" + text + "'");
            re = v;
            have_re = true;
        }
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw parse_error("malformed Gaussian integer: '" + text + "'");
    }
    return {re, im};
}

GaussInt GaussFactorization::value() const {
    GaussInt v = unit;
    for (const auto& [p, e] : factors)
        for (unsigned j = 0; j < e; ++j) v *= p;
    return v;
}

BigInt norm(const GaussInt& b) { return b.re() * b.re() + b.im() * b.im(); }

bool is_odd(const GaussInt& b) { return mpz_odd_p(BigInt(b.re() + b.im()).get_mpz_t()); }

int unit_class(const GaussInt& b) {
    if (!is_odd(b)) throw not_odd_error("unit_class requires an odd Gaussian integer");
    GaussInt two_one_plus_i(2, 2);
    for (int e = 0; e < 4; ++e) {
        if (divides(two_one_plus_i, b - GaussInt::unit_i_pow(e))) return e;
    }
    throw internal_inconsistency_error("odd element not congruent to any i^e mod 2(1+i)");
}

bool is_normalized(const GaussInt& b) { return is_odd(b) && unit_class(b) == 0; }

std::pair<GaussInt, GaussInt> normalize(const GaussInt& b) {
    int e = unit_class(b);
    GaussInt u = GaussInt::unit_i_pow(4 - e);
    return {u, u * b};
}

std::pair<GaussInt, GaussInt> divrem(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw zero_error("division by zero Gaussian integer");
    GaussInt x = a * b.conj();
    BigInt n = norm(b);
    GaussInt q(round_half_down_div(x.re(), n), round_half_down_div(x.im(), n));
    return {q, a - q * b};
}

GaussInt mod(const GaussInt& a, const GaussInt& b) { return divrem(a, b).second; }

bool divides(const GaussInt& b, const GaussInt& a, GaussInt* q) {
    if (b.is_zero()) {
        if (!a.is_zero()) return false;
        if (q) *q = GaussInt();
        return true;
    }
    GaussInt x = a * b.conj();
    BigInt n = norm(b);
    if (!mpz_divisible_p(x.re().get_mpz_t(), n.get_mpz_t())) return false;
    if (!mpz_divisible_p(x.im().get_mpz_t(), n.get_mpz_t())) return false;
    if (q) *q = GaussInt(x.re() / n, x.im() / n);
    return true;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
    GaussInt q;
    if (!divides(b, a, &q))
        throw not_divisible_error(b.str() + " does not divide " + a.str());
    return q;
}

GaussInt gcd(const GaussInt& a, const GaussInt& b) {
    if (a.is_zero() && b.is_zero()) throw zero_error("gcd(0, 0) is undefined");
    GaussInt x = a, y = b;
    while (!y.is_zero()) {
        GaussInt r = divrem(x, y).second;
        x = y;
        y = r;
    }
    // Canonical representative: strip 1+i factors, normalize the odd part.
    unsigned k = 0;
    while (!is_odd(x)) {
        x = exact_div(x, kOnePlusI);
        ++k;
    }
    GaussInt g = normalize(x).second;
    for (unsigned j = 0; j < k; ++j) g *= kOnePlusI;
    return g;
}

bool is_prime(const GaussInt& b) {
    BigInt n = norm(b);
    if (n <= 1) return false;
    if (is_rational_prime(n)) return true;
    if (b.re() == 0 || b.im() == 0) {
        BigInt q = abs(b.re() == 0 ? b.im() : b.re());
        return q % 4 == 3 && is_rational_prime(q);
    }
    return false;
}

namespace {

// Square root of -1 mod p for a rational prime p = 1 mod 4, via the smallest
// quadratic non-residue.
BigInt sqrt_minus_one_mod(const BigInt& p) {
    BigInt e = (p - 1) / 2;
    for (BigInt c = 2; c < p; ++c) {
        BigInt t;
        mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if (t == p - 1) {
            BigInt r, e4 = (p - 1) / 4;
            mpz_powm(r.get_mpz_t(), c.get_mpz_t(), e4.get_mpz_t(), p.get_mpz_t());
            return r;
        }
    }
    throw internal_inconsistency_error("no quadratic non-residue found mod " + p.get_str());
}

}  // namespace

GaussFactorization factor(const GaussInt& b) {
    if (b.is_zero()) throw zero_error("cannot factor 0");
    GaussFactorization out;
    GaussInt rest = b;
    auto strip = [&rest](const GaussInt& prime) {
        unsigned e = 0;
        GaussInt q;
        while (divides(prime, rest, &q)) {
            rest = q;
            ++e;
        }
        return e;
    };
    for (const auto& [p, ignored] : factor_integer(norm(b))) {
        (void)ignored;
        if (p == 2) {
            if (unsigned e = strip(kOnePlusI)) out.factors.emplace_back(kOnePlusI, e);
        } else if (p % 4 == 3) {
            GaussInt pi(-p, BigInt(0));
            if (unsigned e = strip(pi)) out.factors.emplace_back(pi, e);
        } else {
            BigInt r = sqrt_minus_one_mod(p);
            GaussInt pi = gcd(GaussInt(p), GaussInt(r, BigInt(1)));
            GaussInt pibar = normalize(pi.conj()).second;
            if (unsigned e = strip(pi)) out.factors.emplace_back(pi, e);
            if (unsigned e = strip(pibar)) out.factors.emplace_back(pibar, e);
        }
    }
    if (!rest.is_unit())
        throw internal_inconsistency_error("factorization of " + b.str() +
                                           " left non-unit cofactor " + rest.str());
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return norm_lex_less(x.first, y.first); });
    return out;
}

std::vector<GaussInt> normalized_divisors(const GaussInt& b) {
    if (b.is_zero() || !is_odd(b))
        throw not_odd_error("normalized_divisors requires an odd nonzero element");
    GaussFactorization f = factor(b);
    std::vector<GaussInt> divs{GaussInt(1, 0)};
    for (const auto& [p, e] : f.factors) {
        std::vector<GaussInt> next;
        next.reserve(divs.size() * (e + 1));
        for (const auto& d : divs) {
            GaussInt cur = d;
            next.push_back(cur);
            for (unsigned j = 0; j < e; ++j) {
                cur *= p;
                next.push_back(cur);
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), norm_lex_less);
    return divs;
}

BigInt unit_group_order(const GaussInt& b) {
    if (b.is_zero() || !is_odd(b))
        throw not_odd_error("unit_group_order requires an odd nonzero element");
    BigInt order = 1;
    for (const auto& [p, e] : factor(b).factors) {
        BigInt q = norm(p);
        for (unsigned j = 0; j + 1 < e; ++j) order *= q;
        order *= q - 1;
    }
    return order;
}

GaussInt powmod(const GaussInt& a, const BigInt& e, const GaussInt& b) {
    GaussInt result(1, 0);
    GaussInt base = mod(a, b);
    BigInt k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mod(result * base, b);
        base = mod(base * base, b);
        k >>= 1;
    }
    return result;
}

bool congruent(const GaussInt& a, const GaussInt& b, const GaussInt& m) {
    return divides(m, a - b);
}

BigInt multiplicative_order(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero() || !is_odd(b))
        throw not_odd_error("multiplicative_order requires an odd nonzero modulus");
    if (!gcd(a, b).is_unit())
        throw not_coprime_error("multiplicative_order requires gcd(" + a.str() + ", " +
                                b.str() + ") = 1");
    BigInt t = unit_group_order(b);
    for (const auto& [q, e] : factor_integer(t)) {
        (void)e;
        while (mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t()) &&
               congruent(powmod(a, t / q, b), GaussInt(1, 0), b))
            t /= q;
    }
    return t;
}

std::vector<GaussInt> unit_residues(const GaussInt& b) {
    if (b.is_zero() || !is_odd(b))
        throw not_odd_error("unit_residues requires an odd nonzero modulus");
    if (norm(b) == 1) return {GaussInt()};  // O/bO is the zero ring
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), norm(b).get_mpz_t());
    bound += 2;
    std::vector<GaussInt> residues;
    for (BigInt a = -bound; a <= bound; ++a) {
        for (BigInt c = -bound; c <= bound; ++c) {
            GaussInt r = mod(GaussInt(a, c), b);
            if (std::find(residues.begin(), residues.end(), r) == residues.end())
                residues.push_back(r);
        }
    }
    if (BigInt(long(residues.size())) != norm(b))
        throw internal_inconsistency_error("residue enumeration mismatch for " + b.str());
    std::vector<GaussInt> units;
    for (const auto& r : residues)
        if (!r.is_zero() && gcd(r, b).is_unit()) units.push_back(r);
    std::sort(units.begin(), units.end(), norm_lex_less);
    return units;
}

bool norm_lex_less(const GaussInt& a, const GaussInt& b) {
    BigInt na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a.lex_less(b);
}

bool is_rational_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (BigInt d = 3; d * d <= n; d += 2)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

std::vector<std::pair<BigInt, unsigned>> factor_integer(BigInt n) {
    if (n < 1) throw zero_error("factor_integer requires n >= 1");
    std::vector<std::pair<BigInt, unsigned>> out;
    auto strip = [&n, &out](const BigInt& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(BigInt(2));
    for (BigInt d = 3; d * d <= n; d += 2) strip(d);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace lemn
