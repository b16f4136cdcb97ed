#pragma once

// File and wire schemas.
//
// Morphism file: { "signature": {"n": N, "field": "q" | "fp:P"},
//                  "images": {"e1": "<expr>", ..., "eN": "<expr>"} }
//
// Multivector wire form: { "result": "<canonical text>",
//                          "terms": [{"blade": [indices], "coeff": "..."}] }
// Coefficients travel as strings so exactness survives serialization.

#include <string>

#include <json.hpp>

#include "invariant.hpp"
#include "morphism.hpp"
#include "parse.hpp"

namespace exalg {

inline FieldSpec field_from_name(const std::string& name) {
    if (name == "q") return FieldSpec::rationals();
    if (name.rfind("fp:", 0) == 0) return FieldSpec::prime(std::stoull(name.substr(3)));
    throw std::invalid_argument("unknown field \"" + name + "\" (expected \"q\" or \"fp:P\")");
}

inline nlohmann::json signature_json(const AlgebraSignature& sig) {
    return {{"n", sig.n}, {"field", sig.field.name()}};
}

inline AlgebraSignature signature_from_json(const nlohmann::json& j) {
    return {j.at("n").get<int>(), field_from_name(j.at("field").get<std::string>())};
}

inline nlohmann::json multivector_json(const Multivector& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [b, c] : x.terms())
        terms.push_back({{"blade", b.indices()}, {"coeff", c.str()}});
    return {{"result", format_canonical(x)}, {"terms", terms}};
}

inline nlohmann::json morphism_json(const Morphism& f) {
    nlohmann::json images;
    for (int i = 1; i <= f.signature().n; ++i)
        images["e" + std::to_string(i)] = format_canonical(f.image(i));
    return {{"signature", signature_json(f.signature())}, {"images", images}};
}

inline Morphism morphism_from_json(const nlohmann::json& j) {
    AlgebraSignature sig = signature_from_json(j.at("signature"));
    std::vector<Multivector> images;
    const nlohmann::json& table = j.at("images");
    for (int i = 1; i <= sig.n; ++i) {
        std::string key = "e" + std::to_string(i);
        if (!table.contains(key)) throw std::invalid_argument("morphism file missing image for " + key);
        images.push_back(parse_expr(table.at(key).get<std::string>(), sig));
    }
    return {sig, std::move(images)};
}

inline nlohmann::json witness_json(const InvarianceWitness& w) {
    return {{"morphism", morphism_json(w.automorphism)},
            {"blade", w.blade.indices()},
            {"escaping_grade", w.escaping_grade}};
}

inline nlohmann::json invariance_report_json(const InvarianceReport& r) {
    nlohmann::json j{{"signature", signature_json(r.spec.signature)},
                     {"grades", r.spec.grades},
                     {"provenance", r.spec.provenance},
                     {"samples_tested", r.samples_tested},
                     {"verdict", r.verdict == Verdict::invariant_on_sample ? "invariant_on_sample" : "refuted"}};
    if (r.witness) j["witness"] = witness_json(*r.witness);
    return j;
}

inline nlohmann::json classification_json(const Classification& c) {
    nlohmann::json matched = nlohmann::json::array(), anomalies = nlohmann::json::array(),
                   refuted = nlohmann::json::array();
    for (const auto& m : c.matched) matched.push_back({{"grades", m.grades}, {"form", m.matched_form}});
    for (const auto& a : c.anomalies) anomalies.push_back({{"grades", a.grades}});
    for (const auto& r : c.refuted) refuted.push_back({{"grades", r.grades}, {"witness", witness_json(r.witness)}});
    return {{"matched", matched}, {"anomalies", anomalies}, {"refuted", refuted}};
}

}  // namespace exalg
