#include "lemn/json_io.hpp"

namespace lemn {

Json to_json(const GaussInt& g) {
    return Json::array({g.re().get_str(), g.im().get_str()});
}

GaussInt gaussint_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw parse_error("Gaussian integer JSON must be [re, im]");
    auto read = [](const Json& v) {
        if (v.is_string()) return BigInt(v.get<std::string>());
        if (v.is_number_integer()) return BigInt(v.get<long>());
        throw parse_error("Gaussian integer component must be a decimal string");
    };
    return {read(j[0]), read(j[1])};
}

Json to_json(const ZiPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"coeffs", coeffs}};
}

ZiPoly zipoly_from_json(const Json& j) {
    if (!j.contains("coeffs")) throw parse_error("polynomial JSON must contain 'coeffs'");
    std::vector<GaussInt> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(gaussint_from_json(c));
    return ZiPoly(std::move(coeffs));
}

Json to_json(const MultMap& m) {
    return Json{{"beta", to_json(m.beta)},
                {"epsilon", m.epsilon},
                {"P", to_json(m.P)},
                {"Q", to_json(m.Q)}};
}

Json to_json(const LemnatomicRecord& rec) {
    return Json{{"beta", to_json(rec.beta)},
                {"poly", to_json(rec.poly)},
                {"degree", rec.degree.get_str()},
                {"constant_term", to_json(rec.constant_term)}};
}

Json to_json(const LemnatomicRecord& rec, const IrreducibilityEvidence& ev) {
    Json j = to_json(rec);
    j["evidence"] = Json{{"status", to_string(ev.status)},
                         {"primes_tested", ev.primes_tested}};
    return j;
}

Json to_json(const GaussFactorization& f) {
    Json factors = Json::array();
    for (const auto& [p, e] : f.factors)
        factors.push_back(Json{{"prime", to_json(p)}, {"exponent", e}});
    return Json{{"unit", to_json(f.unit)}, {"factors", factors}};
}

}  // namespace lemn
