#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mtop/identity.hpp"

namespace mtop {

using AlgValue = std::variant<Mset, PairSet, CofinitePairSet>;

inline std::string alg_value_str(const AlgValue& v) {
    if (const auto* m = std::get_if<Mset>(&v)) return m->str();
    if (const auto* p = std::get_if<PairSet>(&v)) return p->str();
    return std::get<CofinitePairSet>(v).str();
}

inline bool alg_value_equal(const AlgValue& a, const AlgValue& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Mset>(a)) return std::get<Mset>(a) == std::get<Mset>(b);
    if (std::holds_alternative<PairSet>(a)) return std::get<PairSet>(a) == std::get<PairSet>(b);
    return std::get<CofinitePairSet>(a) == std::get<CofinitePairSet>(b);
}

struct Example1Value {
    std::string name;  // the defining expression, in surface syntax
    AlgValue computed;
    AlgValue expected;  // embedded fixture
    bool match = false;
};

struct Example1Report {
    UniversePtr universe;
    Mset space;  // U
    Mset top;    // V
    Mset m1;
    Mset m2;
    std::vector<Example1Value> values;
    std::vector<IdentityReport> identities;  // all are expected to fail
    bool all_match = false;
};

// The worked example over X={x,y,z}, omega=4: every derived value is
// recomputed and compared against an embedded fixture, and the three
// identities are checked (identity (3) under both complements and all four
// ambient readings).
inline Example1Report reproduce_example1() {
    UniversePtr u = make_universe({"x", "y", "z"}, 4);
    Mset U = make_mset(u, {{"x", 4}, {"y", 3}, {"z", 2}});
    Mset V = full_mset(u);
    Mset M1 = make_mset(u, {{"x", 4}, {"y", 3}});
    Mset M2 = make_mset(u, {{"x", 2}, {"y", 3}});
    Example1Report rep{u, U, V, M1, M2, {}, {}, false};

    auto mset_fix = [&](std::map<std::string, int> counts) { return make_mset(u, counts); };
    auto pair_fix = [&](std::vector<std::pair<std::string, int>> ps) {
        return PairSet::from_names(u, ps);
    };
    auto add = [&](std::string name, AlgValue computed, AlgValue expected) {
        bool match = alg_value_equal(computed, expected);
        rep.values.push_back({std::move(name), std::move(computed), std::move(expected), match});
    };

    add("M1 | M2", mset_union(M1, M2), mset_fix({{"x", 4}, {"y", 3}}));
    add("M1 & M2", mset_intersect(M1, M2), mset_fix({{"x", 2}, {"y", 3}}));
    add("~M2", complement_global(M2), mset_fix({{"x", 2}, {"y", 1}, {"z", 4}}));
    add("U \\ M2", complement_relative(M2, U), mset_fix({{"x", 2}, {"z", 2}}));
    add("phi(M1)", phi(M1), pair_fix({{"x", 4}, {"y", 3}}));
    add("phi(M2)", phi(M2), pair_fix({{"x", 2}, {"y", 3}}));
    add("phi(M1) | phi(M2)", pair_union(phi(M1), phi(M2)),
        pair_fix({{"x", 2}, {"x", 4}, {"y", 3}}));
    add("phi(M1) & phi(M2)", pair_intersect(phi(M1), phi(M2)), pair_fix({{"y", 3}}));
    add("phi(M1 | M2)", phi(mset_union(M1, M2)), pair_fix({{"x", 4}, {"y", 3}}));
    add("phi(M1 & M2)", phi(mset_intersect(M1, M2)), pair_fix({{"x", 2}, {"y", 3}}));
    add("phi(~M2)", phi(complement_global(M2)), pair_fix({{"x", 2}, {"y", 1}, {"z", 4}}));
    add("phi(U \\ M2)", phi(complement_relative(M2, U)), pair_fix({{"x", 2}, {"z", 2}}));
    add("phi(U)", phi(U), pair_fix({{"x", 4}, {"y", 3}, {"z", 2}}));
    add("phi(V)", phi(V), pair_fix({{"x", 4}, {"y", 4}, {"z", 4}}));
    add("phi(U) \\ phi(M2)", pair_difference(phi(U), phi(M2)), pair_fix({{"x", 4}, {"z", 2}}));
    add("phi(V) \\ phi(M2)", pair_difference(phi(V), phi(M2)),
        pair_fix({{"x", 4}, {"y", 4}, {"z", 4}}));
    {
        auto computed = complement_in(phi(M2), FiniteGrid{});
        add("compl(phi(M2), grid)", std::get<PairSet>(computed),
            pair_fix({{"x", 1}, {"x", 3}, {"x", 4}, {"y", 1}, {"y", 2}, {"y", 4},
                      {"z", 1}, {"z", 2}, {"z", 3}, {"z", 4}}));
    }
    {
        auto computed = complement_in(phi(M2), NatGrid{});
        add("compl(phi(M2), nat)", std::get<CofinitePairSet>(computed),
            CofinitePairSet(pair_fix({{"x", 2}, {"y", 3}})));
    }

    rep.identities.push_back(
        check_identity(IdentitySpec{IdentityKind::Union1}, M1, M2, U));
    rep.identities.push_back(
        check_identity(IdentitySpec{IdentityKind::Intersect2}, M1, M2, U));
    for (LhsVariant lhs : {LhsVariant::GlobalDelta, LhsVariant::RelativeDelta})
        for (AmbientKind amb :
             {AmbientKind::PhiParent, AmbientKind::PhiFull, AmbientKind::Grid, AmbientKind::Nat})
            rep.identities.push_back(check_identity(
                IdentitySpec{IdentityKind::Complement3, lhs, amb}, M2, std::nullopt, U));

    rep.all_match = true;
    for (const auto& v : rep.values) rep.all_match = rep.all_match && v.match;
    for (const auto& r : rep.identities) rep.all_match = rep.all_match && !r.holds;
    return rep;
}

}  // namespace mtop
