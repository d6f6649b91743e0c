#pragma once

#include <json.hpp>

#include "lemn/cmfield.hpp"
#include "lemn/gaussint.hpp"
#include "lemn/lemnatomic.hpp"
#include "lemn/zipoly.hpp"

namespace lemn {

using Json = nlohmann::ordered_json;

/// [re, im], components as decimal strings.
Json to_json(const GaussInt& g);
GaussInt gaussint_from_json(const Json& j);

/// {"coeffs": [[re, im], ...]} in ascending degree.
Json to_json(const ZiPoly& p);
ZiPoly zipoly_from_json(const Json& j);

/// {"beta", "epsilon", "P", "Q"}.
Json to_json(const MultMap& m);

/// {"beta", "poly", "degree", "constant_term"} plus optional evidence.
Json to_json(const LemnatomicRecord& rec);
Json to_json(const LemnatomicRecord& rec, const IrreducibilityEvidence& ev);

Json to_json(const GaussFactorization& f);

}  // namespace lemn
