#pragma once

#include <json.hpp>

#include "brauerkit/brauer_complete.hpp"
#include "brauerkit/brauer_global.hpp"
#include "brauerkit/characters.hpp"
#include "brauerkit/constructions.hpp"
#include "brauerkit/lift.hpp"

// JSON views of the public types.  Object keys are emitted in sorted order
// by the json library, so serialization is byte-stable for equal inputs.

namespace brauerkit {

using json = nlohmann::json;

inline json to_json(const QmodZ& x) { return x.to_string(); }
inline json to_json(const Place& v) { return v.to_string(); }

inline json to_json(const CyclicCharacter& chi) {
    json j;
    j["order"] = chi.order();
    if (chi.kind() == CyclicCharacter::Kind::Constant) {
        j["kind"] = "constant";
        j["frob"] = chi.frobenius_image().to_string();
    } else {
        j["kind"] = "kummer";
        j["radicand"] = chi.radicand().to_string();
    }
    return j;
}

inline json to_json(const GlobalBrauerClass& alpha) {
    json j;
    j["base"] = {{"p", alpha.base().p}};
    json invs = json::array();
    for (const auto& [v, x] : alpha.invariants())
        invs.push_back({{"place", v.to_string()}, {"inv", x.to_string()}});
    j["invariants"] = std::move(invs);
    return j;
}

inline json to_json(const RestrictedClass& beta) {
    json j = json::array();
    for (const auto& [w, x] : beta.invariants())
        j.push_back({{"place", w.base.to_string()},
                     {"index", w.index},
                     {"inv", x.to_string()}});
    return j;
}

inline json to_json(const CompletedClass& gamma) {
    json j;
    j["alpha0"] = to_json(gamma.alpha0());
    j["chi0"] = to_json(gamma.chi0());
    j["pi"] = gamma.uniformizer_label();
    return j;
}

inline json to_json(const IndecompCertificate& cert) {
    json j;
    j["q"] = cert.q;
    j["e"] = cert.e;
    j["t"] = cert.t;
    j["ind"] = cert.ind;
    j["ind_q"] = cert.ind_q;
    j["verdict"] = cert.verdict;
    j["branch"] = cert.branch;
    return j;
}

inline json to_json(const LiftedClass& lifted, const IndexReport& rep) {
    json j;
    j["source"] = to_json(lifted.source());
    json support = json::array();
    for (const auto& lp : lifted.lifted_support()) support.push_back(lp.name());
    j["lifted_support"] = std::move(support);
    j["ind"] = rep.ind;
    j["per"] = rep.per;
    j["upper_bound_check"] = rep.upper_bound_check;
    if (rep.upper_bound_check == "skipped") j["note"] = rep.note;
    else j["bound"] = rep.bound;
    return j;
}

inline json residue_table_json(const std::vector<std::pair<Place, QmodZ>>& table) {
    json rows = json::array();
    for (const auto& [v, x] : table)
        rows.push_back({{"place", v.to_string()}, {"residue", x.to_string()}});
    return rows;
}

inline json to_json(const NcpBaseParams& bp) {
    return json{{"r", bp.r}, {"s", bp.s}, {"d", bp.d}};
}

inline json to_json(const NcpParams& params) {
    json j;
    j["n"] = params.n;
    j["m"] = params.m;
    j["l"] = params.l;
    j["a"] = params.a;
    j["index"] = params.index_value;
    j["period"] = params.period_value;
    j["m_is_zero"] = params.m_is_zero;
    return j;
}

// Parsers for round-tripping the schemas above.

inline QmodZ qmodz_from_json(const json& j) { return QmodZ::parse(j.get<std::string>()); }

inline Place place_from_json(PrimeField base, const json& j) {
    return Place::parse(base, j.get<std::string>());
}

inline CyclicCharacter character_from_json(PrimeField base, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        CyclicCharacter chi =
            CyclicCharacter::constant(base, QmodZ::parse(j.at("frob").get<std::string>()));
        if (chi.order() != j.at("order").get<uint64_t>())
            throw std::invalid_argument("order does not match frobenius image");
        return chi;
    }
    if (kind == "kummer")
        return CyclicCharacter::kummer(
            base, j.at("order").get<uint64_t>(),
            RationalFunction::parse(base, j.at("radicand").get<std::string>()));
    throw std::invalid_argument("unknown character kind: " + kind);
}

inline GlobalBrauerClass class_from_json(const json& j) {
    PrimeField base(j.at("base").at("p").get<uint64_t>());
    std::vector<std::pair<Place, QmodZ>> entries;
    for (const auto& row : j.at("invariants"))
        entries.emplace_back(place_from_json(base, row.at("place")),
                             qmodz_from_json(row.at("inv")));
    return GlobalBrauerClass::from_invariants(base, entries);
}

inline CompletedClass completed_from_json(const json& j) {
    GlobalBrauerClass alpha0 = class_from_json(j.at("alpha0"));
    CyclicCharacter chi0 = character_from_json(alpha0.base(), j.at("chi0"));
    return CompletedClass(alpha0, chi0, j.at("pi").get<std::string>());
}

} // namespace brauerkit
