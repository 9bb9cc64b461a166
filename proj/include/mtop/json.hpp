#pragma once

#include <json.hpp>

#include "mtop/example1.hpp"
#include "mtop/identity.hpp"
#include "mtop/search.hpp"
#include "mtop/topology.hpp"

// Canonical JSON interchange. nlohmann::json keeps object keys sorted, which
// is exactly the canonical form: msets as {"counts":{...},"elements":[...],
// "omega":n} with zero counts omitted, pair sets as sorted [[element,k],...].
namespace mtop {

using json = nlohmann::json;

inline json universe_to_json(const UniversePtr& u) {
    return json{{"elements", u->elements()}, {"omega", u->omega()}};
}

inline UniversePtr universe_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("omega"))
        fail(errc::bad_input, "universe JSON needs \"elements\" and \"omega\"");
    return make_universe(j.at("elements").get<std::vector<std::string>>(),
                         j.at("omega").get<int>());
}

inline json mset_to_json(const Mset& m) {
    json counts = json::object();
    for (int i = 0; i < m.universe()->size(); ++i)
        if (m.count(i) > 0) counts[m.universe()->name(i)] = m.count(i);
    json j = universe_to_json(m.universe());
    j["counts"] = std::move(counts);
    return j;
}

inline Mset mset_from_json(const json& j) {
    auto u = universe_from_json(j);
    std::map<std::string, int> raw;
    if (j.contains("counts")) {
        if (!j.at("counts").is_object()) fail(errc::bad_input, "\"counts\" must be an object");
        for (const auto& [name, c] : j.at("counts").items()) raw[name] = c.get<int>();
    }
    return make_mset(u, raw);
}

// Reads an mset against an already-known universe (for compact fixtures);
// any embedded universe must agree.
inline Mset mset_from_json(const json& j, const UniversePtr& u) {
    if (j.contains("elements") || j.contains("omega")) {
        Mset m = mset_from_json(j);
        require_same_universe(m.universe(), u);
        return m;
    }
    std::map<std::string, int> raw;
    const json& counts = j.contains("counts") ? j.at("counts") : j;
    if (!counts.is_object()) fail(errc::bad_input, "mset JSON must be a counts object");
    for (const auto& [name, c] : counts.items()) raw[name] = c.get<int>();
    return make_mset(u, raw);
}

inline json pairset_to_json(const PairSet& p) {
    json arr = json::array();
    for (const auto& [e, k] : p.pairs()) arr.push_back(json::array({p.universe()->name(e), k}));
    return arr;
}

inline PairSet pairset_from_json(const json& j, const UniversePtr& u) {
    if (!j.is_array()) fail(errc::bad_input, "pair set JSON must be an array of [element, k]");
    std::vector<std::pair<std::string, int>> named;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            fail(errc::bad_input, "pair set entries must be [element, k]");
        named.emplace_back(item.at(0).get<std::string>(), item.at(1).get<int>());
    }
    return PairSet::from_names(u, named);
}

inline json cofinite_to_json(const CofinitePairSet& c) {
    return json{{"cofinite_excluding", pairset_to_json(c.excluded())}};
}

inline CofinitePairSet cofinite_from_json(const json& j, const UniversePtr& u) {
    if (!j.is_object() || !j.contains("cofinite_excluding"))
        fail(errc::bad_input, "cofinite JSON needs \"cofinite_excluding\"");
    return CofinitePairSet(pairset_from_json(j.at("cofinite_excluding"), u));
}

inline json pair_or_cofinite_to_json(const PairOrCofinite& v) {
    if (const auto* p = std::get_if<PairSet>(&v)) return pairset_to_json(*p);
    return cofinite_to_json(std::get<CofinitePairSet>(v));
}

inline json alg_value_to_json(const AlgValue& v) {
    if (const auto* m = std::get_if<Mset>(&v)) return mset_to_json(*m);
    if (const auto* p = std::get_if<PairSet>(&v)) return pairset_to_json(*p);
    return cofinite_to_json(std::get<CofinitePairSet>(v));
}

inline json family_to_json(const MFamily& fam) {
    json members = json::array();
    for (const auto& m : fam.members()) members.push_back(mset_to_json(m));
    return json{{"parent", mset_to_json(fam.parent())}, {"members", std::move(members)}};
}

inline MFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("parent") || !j.contains("members"))
        fail(errc::bad_input, "family JSON needs \"parent\" and \"members\"");
    Mset parent = mset_from_json(j.at("parent"));
    std::vector<Mset> members;
    for (const auto& m : j.at("members")) members.push_back(mset_from_json(m, parent.universe()));
    return MFamily(std::move(parent), std::move(members));
}

inline json pair_family_to_json(const PairFamily& fam) {
    json members = json::array();
    for (const auto& p : fam.members()) members.push_back(pairset_to_json(p));
    return json{{"carrier", pairset_to_json(fam.carrier())}, {"members", std::move(members)}};
}

inline json verdict_to_json(const Verdict& v) {
    json j{{"holds", v.holds}};
    if (v.violation) {
        j["violation"] = json{{"axiom", v.violation->axiom},
                              {"members", v.violation->members},
                              {"computed", v.violation->computed}};
    } else {
        j["violation"] = nullptr;
    }
    return j;
}

inline json spec_to_json(const IdentitySpec& s) {
    json j{{"identity", static_cast<int>(s.kind)}};
    if (s.kind == IdentityKind::Complement3) {
        j["lhs"] = lhs_name(s.lhs);
        j["ambient"] = ambient_name(s.ambient);
    }
    return j;
}

inline IdentitySpec spec_from_json(const json& j) {
    IdentitySpec s;
    int id = j.at("identity").get<int>();
    if (id < 1 || id > 3) fail(errc::bad_input, "identity must be 1, 2, or 3");
    s.kind = static_cast<IdentityKind>(id);
    if (j.contains("lhs")) {
        std::string lhs = j.at("lhs").get<std::string>();
        if (lhs == "global")
            s.lhs = LhsVariant::GlobalDelta;
        else if (lhs == "relative")
            s.lhs = LhsVariant::RelativeDelta;
        else
            fail(errc::bad_input, "lhs must be \"global\" or \"relative\"");
    }
    if (j.contains("ambient")) {
        std::string a = j.at("ambient").get<std::string>();
        if (a == "phiU")
            s.ambient = AmbientKind::PhiParent;
        else if (a == "phiFull")
            s.ambient = AmbientKind::PhiFull;
        else if (a == "grid")
            s.ambient = AmbientKind::Grid;
        else if (a == "nat")
            s.ambient = AmbientKind::Nat;
        else
            fail(errc::bad_input, "ambient must be phiU, phiFull, grid, or nat");
    }
    return s;
}

inline json report_to_json(const IdentityReport& r) {
    json j{{"spec", spec_to_json(r.spec)},
           {"universe", universe_to_json(r.parent.universe())},
           {"parent", mset_to_json(r.parent)},
           {"m1", mset_to_json(r.m1)},
           {"m2", r.m2 ? mset_to_json(*r.m2) : json(nullptr)},
           {"lhs", pairset_to_json(r.lhs)},
           {"rhs", pair_or_cofinite_to_json(r.rhs)},
           {"holds", r.holds}};
    if (r.first_difference) {
        j["first_difference"] = json::array(
            {r.parent.universe()->name(r.first_difference->first), r.first_difference->second});
    } else {
        j["first_difference"] = nullptr;
    }
    return j;
}

inline json identity_witness_to_json(const IdentityWitness& w) {
    return json{{"kind", "identity"},
                {"order_key", w.order_key},
                {"spec", spec_to_json(w.report.spec)},
                {"universe", universe_to_json(w.parent.universe())},
                {"parent", mset_to_json(w.parent)},
                {"m1", mset_to_json(w.m1)},
                {"m2", w.m2 ? mset_to_json(*w.m2) : json(nullptr)},
                {"report", report_to_json(w.report)}};
}

inline json topology_witness_to_json(const TopologyWitness& w) {
    return json{{"kind", "topology"},
                {"order_key", w.order_key},
                {"universe", universe_to_json(w.family.parent().universe())},
                {"family", family_to_json(w.family)},
                {"m_topology", verdict_to_json(w.m_verdict)},
                {"image", verdict_to_json(w.image_verdict)},
                {"image_family", pair_family_to_json(image_family(w.family))}};
}

inline json example1_to_json(const Example1Report& rep) {
    json values = json::array();
    for (const auto& v : rep.values)
        values.push_back(json{{"name", v.name},
                              {"computed", alg_value_to_json(v.computed)},
                              {"expected", alg_value_to_json(v.expected)},
                              {"match", v.match}});
    json identities = json::array();
    for (const auto& r : rep.identities) identities.push_back(report_to_json(r));
    return json{{"universe", universe_to_json(rep.universe)},
                {"U", mset_to_json(rep.space)},
                {"V", mset_to_json(rep.top)},
                {"M1", mset_to_json(rep.m1)},
                {"M2", mset_to_json(rep.m2)},
                {"values", std::move(values)},
                {"identities", std::move(identities)},
                {"all_match", rep.all_match}};
}

// Inputs for a replayed identity check: either an inline {"parent","m1","m2"}
// document or a serialized identity witness (same keys). A "spec" member, if
// present, supplies defaults for the identity flags.
struct CheckInput {
    std::optional<IdentitySpec> spec;
    Mset parent;
    Mset m1;
    std::optional<Mset> m2;
};

inline CheckInput check_input_from_json(const json& j) {
    if (!j.is_object() || !j.contains("parent") || !j.contains("m1"))
        fail(errc::bad_input, "check input needs \"parent\" and \"m1\"");
    Mset parent = mset_from_json(j.at("parent"));
    Mset m1 = mset_from_json(j.at("m1"), parent.universe());
    std::optional<Mset> m2;
    if (j.contains("m2") && !j.at("m2").is_null())
        m2 = mset_from_json(j.at("m2"), parent.universe());
    std::optional<IdentitySpec> spec;
    if (j.contains("spec")) spec = spec_from_json(j.at("spec"));
    return CheckInput{spec, std::move(parent), std::move(m1), std::move(m2)};
}

// Accepts either a bare family document or a serialized topology witness.
inline MFamily family_input_from_json(const json& j) {
    if (j.is_object() && j.contains("family")) return family_from_json(j.at("family"));
    return family_from_json(j);
}

}  // namespace mtop
