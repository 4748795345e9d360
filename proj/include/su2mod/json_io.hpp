#pragma once

// JSON encoding conventions: rationals and big integers as decimal
// strings ("p" or "p/q"), cyclotomic numbers as coordinate vectors with a
// floating point hint, matrices as row-major entry arrays, series as
// coefficient arrays. Keys keep insertion order for stable output.

#include <complex>
#include <string>

#include <json.hpp>

#include "su2mod/cyclotomic.hpp"
#include "su2mod/modular_data.hpp"
#include "su2mod/qseries.hpp"

namespace su2mod {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& value) { return to_string(value); }

inline Json json_of(const Integer& value) { return value.get_str(); }

inline Json json_of(std::complex<double> value) {
    return Json{{"re", value.real()}, {"im", value.imag()}};
}

inline Json json_of(const Cyclotomic& value) {
    Json coords = Json::array();
    for (const auto& c : value.coords()) coords.push_back(to_string(c));
    return Json{{"conductor", value.conductor()},
                {"coords", std::move(coords)},
                {"approx", json_of(value.embed())}};
}

inline Json json_of(const InvariantMatrix& m) {
    Json entries = Json::array();
    for (const auto v : m.entries) entries.push_back(v);
    return Json{{"n", m.n}, {"entries", std::move(entries)}};
}

// accepts either the bare matrix object or one wrapped under "matrix"
inline InvariantMatrix invariant_from_json(const Json& j) {
    const Json& body = j.contains("matrix") ? j.at("matrix") : j;
    if (!body.contains("n") || !body.contains("entries"))
        throw std::invalid_argument("invariant_from_json: expected keys n and entries");
    InvariantMatrix m(body.at("n").get<int>());
    const auto& entries = body.at("entries");
    if (entries.size() != m.entries.size())
        throw std::invalid_argument("invariant_from_json: entry count mismatch");
    for (std::size_t e = 0; e < m.entries.size(); ++e)
        m.entries[e] = entries[e].get<long long>();
    return m;
}

inline Json json_of(const QSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
    return Json{{"h0", to_string(s.leading_exponent())},
                {"coeffs", std::move(coeffs)},
                {"order", s.order()}};
}

}  // namespace su2mod
