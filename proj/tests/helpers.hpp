#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "lemn/gaussint.hpp"
#include "lemn/zipoly.hpp"

namespace lemn::testing {

inline GaussInt G(long re, long im = 0) { return GaussInt(re, im); }

// Polynomial from (degree, re, im) terms.
inline ZiPoly P(std::initializer_list<std::tuple<int, long, long>> terms) {
    ZiPoly out;
    for (const auto& [deg, re, im] : terms)
        out = out + ZiPoly::monomial(GaussInt(re, im), static_cast<std::size_t>(deg));
    return out;
}

// x P_5(x^4) from the worked 5-division example.
inline ZiPoly divpoly5() {
    return P({{25, 1, 0}, {21, 50, 0}, {17, -125, 0}, {13, 300, 0},
              {9, -105, 0}, {5, -62, 0}, {1, 5, 0}});
}

inline ZiPoly lambda5() {
    return P({{16, 1, 0}, {12, 52, 0}, {8, -26, 0}, {4, -12, 0}, {0, 1, 0}});
}

}  // namespace lemn::testing
