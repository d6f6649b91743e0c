#include "lemn/cmfield.hpp"

#include <map>
#include <mutex>
#include <string>

namespace lemn {

namespace {

GaussInt den_unit(const ZiPoly& den) {
    const GaussInt& l = den.lc();
    if (is_odd(l)) return GaussInt::unit_i_pow(4 - unit_class(l));
    for (int k = 0; k < 4; ++k) {
        GaussInt u = GaussInt::unit_i_pow(k);
        GaussInt r = l * u;
        if (r.re() > 0 && r.im() >= 0) return u;
    }
    return GaussInt(1, 0);
}

}  // namespace

RatFunc::RatFunc(ZiPoly num, ZiPoly den, reduced_tag)
    : num_(std::move(num)), den_(std::move(den)) {}

RatFunc RatFunc::make_coprime(ZiPoly num, ZiPoly den) {
    if (den.is_zero()) throw zero_error("rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    GaussInt c = gcd(num.content(), den.content());
    if (!c.is_one()) {
        num = num.exact_div_scalar(c);
        den = den.exact_div_scalar(c);
    }
    GaussInt u = den_unit(den);
    if (!u.is_one()) {
        num = num * u;
        den = den * u;
    }
    return RatFunc(std::move(num), std::move(den), reduced_tag{});
}

RatFunc::RatFunc(ZiPoly num, ZiPoly den) {
    if (den.is_zero()) throw zero_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = ZiPoly();
        den_ = ZiPoly::one();
        return;
    }
    if (!zipoly_coprime(num, den)) {
        ZiPoly g = zipoly_gcd(num, den);
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    *this = make_coprime(std::move(num), std::move(den));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const ZiPoly &a = num_, &b = den_, &c = o.num_, &d = o.den_;
    if (b == d) {
        ZiPoly t = a + c;
        if (t.is_zero()) return RatFunc();
        ZiPoly h = zipoly_gcd(t, b);
        if (h.degree() == 0 && h.coeffs()[0].is_unit())
            return make_coprime(std::move(t), b);
        return make_coprime(exact_div(t, h), exact_div(b, h));
    }
    ZiPoly g = zipoly_gcd(b, d);
    if (g.degree() == 0 && g.coeffs()[0].is_unit()) {
        ZiPoly t = a * d + c * b;
        if (t.is_zero()) return RatFunc();
        return make_coprime(std::move(t), b * d);
    }
    ZiPoly b1 = exact_div(b, g), d1 = exact_div(d, g);
    ZiPoly t = a * d1 + c * b1;
    if (t.is_zero()) return RatFunc();
    ZiPoly h = zipoly_gcd(t, g);
    if (h.degree() == 0 && h.coeffs()[0].is_unit())
        return make_coprime(std::move(t), b1 * d);
    return make_coprime(exact_div(t, h), b1 * d1 * exact_div(g, h));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    ZiPoly g1 = zipoly_gcd(num_, o.den_);
    ZiPoly g2 = zipoly_gcd(o.num_, den_);
    ZiPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    ZiPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    return make_coprime(std::move(n), std::move(d));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw zero_error("division by the zero rational function");
    if (is_zero()) return RatFunc();
    ZiPoly g1 = zipoly_gcd(num_, o.num_);
    ZiPoly g2 = zipoly_gcd(o.den_, den_);
    ZiPoly n = exact_div(num_, g1) * exact_div(o.den_, g2);
    ZiPoly d = exact_div(den_, g2) * exact_div(o.num_, g1);
    return make_coprime(std::move(n), std::move(d));
}

RatFunc RatFunc::operator*(const GaussInt& s) const {
    if (s.is_zero() || is_zero()) return RatFunc();
    return RatFunc(num_ * s, den_);
}

std::string RatFunc::str() const {
    if (is_polynomial() && den_.coeffs()[0].is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// --- FieldElem ---------------------------------------------------------

namespace {
const ZiPoly& curve_poly() {
    // 1 - x^4
    static const ZiPoly s = ZiPoly(GaussInt(1, 0)) - ZiPoly::monomial(GaussInt(1, 0), 4);
    return s;
}
}  // namespace

FieldElem FieldElem::x() { return FieldElem(RatFunc(ZiPoly::x())); }
FieldElem FieldElem::y() { return FieldElem(RatFunc(), RatFunc(ZiPoly::one())); }
FieldElem FieldElem::constant(GaussInt c) { return FieldElem(RatFunc(ZiPoly(std::move(c)))); }

FieldElem FieldElem::operator+(const FieldElem& o) const { return {a_ + o.a_, b_ + o.b_}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {a_ - o.a_, b_ - o.b_}; }
FieldElem FieldElem::operator-() const { return {-a_, -b_}; }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    RatFunc s(curve_poly());
    RatFunc a = a_ * o.a_ + b_ * o.b_ * s;
    RatFunc b = a_ * o.b_ + b_ * o.a_;
    return {std::move(a), std::move(b)};
}

FieldElem FieldElem::operator*(const GaussInt& s) const { return {a_ * s, b_ * s}; }

FieldElem FieldElem::inverse() const {
    // 1/(a + b y) = (a - b y) / (a^2 - b^2 (1 - x^4))
    RatFunc d = a_ * a_ - b_ * b_ * RatFunc(curve_poly());
    if (d.is_zero()) throw degenerate_pair_error("non-invertible coordinate element");
    return {a_ / d, -b_ / d};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    if (o.is_zero()) throw degenerate_pair_error("division by zero coordinate element");
    if (o.b_.is_zero()) return {a_ / o.a_, b_ / o.a_};
    return *this * o.inverse();
}

// --- CMPoint arithmetic -------------------------------------------------

CMPoint point_base() { return {FieldElem::x(), FieldElem::y()}; }

CMPoint point_zero() {
    return {FieldElem(), FieldElem::constant(GaussInt(1, 0))};
}

CMPoint point_neg(const CMPoint& p) { return {-p.X, p.Y}; }

CMPoint point_i_mult(const CMPoint& p) {
    return {p.X * GaussInt(0, 1), p.Y};
}

CMPoint point_add(const CMPoint& p, const CMPoint& q) {
    const FieldElem &x1 = p.X, &y1 = p.Y, &x2 = q.X, &y2 = q.Y;
    FieldElem num = x1 * y2 + x2 * y1;
    FieldElem den = FieldElem::constant(GaussInt(1, 0)) + (x1 * x1) * (x2 * x2);
    if (den.is_zero())
        throw degenerate_pair_error("vanishing denominator in the addition law");
    FieldElem x3 = num / den;
    // derivative of the addition law in the first argument:
    // dx1 = y1, dy1 = -2 x1^3
    FieldElem x1sq = x1 * x1;
    FieldElem dnum = y1 * y2 - (x1sq * x1) * x2 * GaussInt(2, 0);
    FieldElem dden = x1 * y1 * (x2 * x2) * GaussInt(2, 0);
    FieldElem y3 = (dnum * den - num * dden) / (den * den);
    return {std::move(x3), std::move(y3)};
}

CMPoint point_int_mult(unsigned long n, const CMPoint& p) {
    if (n == 0) return point_zero();
    int bits = 0;
    for (unsigned long t = n; t; t >>= 1) ++bits;
    CMPoint r = p;
    for (int i = bits - 2; i >= 0; --i) {
        r = point_add(r, r);
        if ((n >> i) & 1) r = point_add(r, p);
    }
    return r;
}

bool on_curve(const CMPoint& p) {
    FieldElem x2 = p.X * p.X;
    FieldElem lhs = p.Y * p.Y + x2 * x2;
    return lhs == FieldElem::constant(GaussInt(1, 0));
}

// --- mult_map -----------------------------------------------------------

namespace {

struct CoreMap {
    ZiPoly P, Q;
};

void require_odd_nonzero(const GaussInt& beta, const char* who) {
    if (beta.is_zero() || !is_odd(beta))
        throw not_odd_error(std::string(who) + " requires an odd nonzero element, got " +
                            beta.str());
}

void check(bool ok, const GaussInt& beta, const std::string& claim) {
    if (!ok)
        throw internal_inconsistency_error("multiplication map for " + beta.str() +
                                           " violates: " + claim);
}

// The verified ladder computation for a normalized odd element.
CoreMap compute_core(const GaussInt& bn) {
    BigInt m = bn.re(), n = bn.im();
    CMPoint A = point_int_mult(BigInt(abs(m)).get_ui(), point_base());
    if (m < 0) A = point_neg(A);
    CMPoint B = point_int_mult(BigInt(abs(n)).get_ui(), point_i_mult(point_base()));
    if (n < 0) B = point_neg(B);
    CMPoint S = point_add(A, B);

    check(!S.X.has_y_part(), bn, "phi(beta z) is a rational function of x alone");
    const RatFunc& f = S.X.a();
    ZiPoly N = f.num(), D = f.den();
    check(D.coeff(0).is_one(), bn, "Q(0) = 1");
    check(N.trailing_zeros() == 1, bn, "numerator is x times a polynomial in x^4");
    ZiPoly P = N.shift_down(1).compress_power(4);
    ZiPoly Q = D.compress_power(4);

    BigInt deg_expected = (norm(bn) - 1) / 4;
    check(BigInt(P.degree()) == deg_expected, bn, "deg P = (N(beta)-1)/4");
    check(BigInt(Q.degree()) == deg_expected, bn, "deg Q = (N(beta)-1)/4");
    check(P.is_monic(), bn, "P is monic");
    check(Q == P.reverse(P.degree()), bn, "Q is the reversal of P");
    check(zipoly_coprime(P, Q), bn, "P and Q are relatively prime");
    check(P.eval(GaussInt()) == bn, bn, "P(0) equals beta");
    ZiPoly divpoly = P.compose_x4().shift_up(1);
    check(zipoly_coprime(divpoly, divpoly.derivative()), bn,
          "the division polynomial is separable");
    if (is_prime(bn)) {
        check(is_eisenstein_at(P, bn), bn, "P is Eisenstein at beta");
    }
    return {std::move(P), std::move(Q)};
}

const CoreMap& core_map(const GaussInt& bn) {
    static std::map<std::string, CoreMap> cache;
    static std::mutex mtx;
    std::string key = bn.str();
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CoreMap computed = compute_core(bn);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(computed)).first->second;
}

}  // namespace

MultMap mult_map(const GaussInt& beta) {
    require_odd_nonzero(beta, "mult_map");
    int eps = unit_class(beta);
    const CoreMap& core = core_map(normalize(beta).second);
    return {beta, eps, core.P, core.Q};
}

ZiPoly division_poly(const GaussInt& beta) {
    require_odd_nonzero(beta, "division_poly");
    const CoreMap& core = core_map(normalize(beta).second);
    return core.P.compose_x4().shift_up(1);
}

}  // namespace lemn
