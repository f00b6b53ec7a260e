#pragma once

// JSON forms.
//   Poly:     [{"coeff": "p/q", "vars": {"x": 2, "a_1": 1}}, ...] in canonical term order
//   Series:   {"variable": "z", "order": N, "coefficients": [Poly, ...]}
//   PolySeq:  {"entries": [Poly, ...], "provenance": {"origin", "umbrae", "representing", "detail"}}
//   KSeq:     [Poly, ...]

#include "umbral/multiplicative.hpp"
#include "umbral/sequences.hpp"
#include "umbral/series.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace umbral {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}

inline Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json vars = Json::object();
        for (const auto& [v, e] : mono.factors()) vars[v.name()] = e;
        terms.push_back({{"coeff", coeff.str()}, {"vars", vars}});
    }
    return terms;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
    Poly p;
    for (const auto& t : j) {
        Monomial m;
        for (const auto& [name, e] : t.at("vars").items()) m = m * Monomial(Var::parse(name), e.get<std::uint32_t>());
        p.add_term(m, rational_from_json(t.at("coeff")));
    }
    return p;
}

inline Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (const Poly& c : s.coefficients()) coeffs.push_back(to_json(c));
    return {{"variable", name_of(s.var())}, {"order", s.order()}, {"coefficients", coeffs}};
}

inline Series series_from_json(const Json& j) {
    std::string var = j.at("variable").get<std::string>();
    if (var != "z" && var != "D") throw std::invalid_argument("series variable must be z or D");
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(poly_from_json(c));
    if (coeffs.size() != j.at("order").get<std::size_t>() + 1)
        throw std::invalid_argument("series order does not match its coefficient count");
    return Series(coeffs, var == "z" ? SeriesVar::z : SeriesVar::D);
}

inline UmbraId umbra_id_from_string(const std::string& s) {
    std::size_t end = s.size();
    while (end > 0 && s[end - 1] == '\'') --end;
    return UmbraId{s.substr(0, end), static_cast<std::uint32_t>(s.size() - end)};
}

inline Json to_json(const Provenance& p) {
    Json umbrae = Json::array();
    for (const auto& id : p.umbrae) umbrae.push_back(id.str());
    return {{"origin", name_of(p.origin)},
            {"umbrae", umbrae},
            {"representing", p.representing ? Json(p.representing->str()) : Json(nullptr)},
            {"detail", p.detail}};
}

inline Provenance provenance_from_json(const Json& j) {
    Provenance p;
    p.origin = seq_origin_from_name(j.at("origin").get<std::string>());
    for (const auto& u : j.at("umbrae")) p.umbrae.push_back(umbra_id_from_string(u.get<std::string>()));
    if (!j.at("representing").is_null()) p.representing = umbra_id_from_string(j.at("representing").get<std::string>());
    p.detail = j.at("detail").get<std::string>();
    return p;
}

inline Json to_json(const PolySeq& s) {
    Json entries = Json::array();
    for (const Poly& p : s.entries) entries.push_back(to_json(p));
    return {{"entries", entries}, {"provenance", to_json(s.provenance)}};
}

inline PolySeq polyseq_from_json(const Json& j) {
    PolySeq s;
    for (const auto& e : j.at("entries")) s.entries.push_back(poly_from_json(e));
    s.provenance = provenance_from_json(j.at("provenance"));
    return s;
}

inline Json to_json(const KSeq& k) {
    Json out = Json::array();
    for (const Poly& p : k.entries) out.push_back(to_json(p));
    return out;
}

inline KSeq kseq_from_json(const Json& j, const std::string& stem = "a") {
    KSeq k;
    k.stem = stem;
    for (const auto& e : j) k.entries.push_back(poly_from_json(e));
    return k;
}

}  // namespace umbral
