#include "lemn/chebyshev.hpp"

#include <cmath>

namespace lemn {

ZiPoly chebyshev_T(unsigned n) {
    ZiPoly prev = ZiPoly::one();
    if (n == 0) return prev;
    ZiPoly cur = ZiPoly::x();
    ZiPoly two_x = ZiPoly::monomial(GaussInt(2, 0), 1);
    for (unsigned k = 1; k < n; ++k) {
        ZiPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ZiPoly monic_C(unsigned n) {
    if (n == 0) throw zero_error("monic_C requires n >= 1");
    // C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}
    ZiPoly prev(GaussInt(2, 0));
    ZiPoly cur = ZiPoly::x();
    for (unsigned k = 1; k < n; ++k) {
        ZiPoly next = ZiPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::map<unsigned, ZiPoly> factor_D(unsigned n) {
    if (n == 0 || n % 2 == 0) throw not_odd_error("factor_D requires odd n >= 1");
    std::map<unsigned, ZiPoly> out;
    for (unsigned k = 1; k <= n; ++k) {
        if (n % k) continue;
        ZiPoly d = monic_C(k);
        for (const auto& [j, dj] : out)
            if (k % j == 0) d = exact_div(d, dj);
        if (static_cast<unsigned>(d.degree()) != euler_phi(k))
            throw internal_inconsistency_error("deg D_" + std::to_string(k) +
                                               " differs from phi(" + std::to_string(k) + ")");
        out.emplace(k, std::move(d));
    }
    return out;
}

DConstantReport verify_D_constant(unsigned n) {
    if (n % 2 == 0 || n < 3) throw not_odd_error("verify_D_constant requires odd n >= 3");
    DConstantReport rep;
    auto factors = factor_integer(BigInt(static_cast<unsigned long>(n)));
    if (factors.size() == 1) {
        long p = factors[0].first.get_si();
        rep.expected = (((p - 1) / 2) % 2 == 0) ? p : -p;
    } else {
        rep.expected = 1;
    }
    GaussInt c0 = factor_D(n).at(n).eval(GaussInt());
    rep.value = c0.re().get_si();
    rep.pass = c0.im() == 0 && BigInt(rep.value) == c0.re() && rep.value == rep.expected;
    return rep;
}

double chebyshev_T_value(unsigned n, double x) {
    double prev = 1.0, cur = x;
    if (n == 0) return prev;
    for (unsigned k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double sin_identity_check(unsigned n, const std::vector<double>& thetas) {
    if (n % 2 == 0) throw not_odd_error("sin_identity_check requires odd n");
    double sign = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    double worst = 0.0;
    for (double t : thetas) {
        double lhs = std::sin(double(n) * t);
        double rhs = sign * chebyshev_T_value(n, std::sin(t));
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

}  // namespace lemn
