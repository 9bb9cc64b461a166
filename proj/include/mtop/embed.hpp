#pragma once

#include <variant>

#include "mtop/mset.hpp"
#include "mtop/pairset.hpp"

namespace mtop {

// The graph embedding: m maps to {(x, count) : count >= 1}. One pair per
// support element.
inline PairSet phi(const Mset& m) {
    std::vector<PairSet::Pair> ps;
    for (int i = 0; i < m.universe()->size(); ++i)
        if (m.count(i) >= 1) ps.emplace_back(i, m.count(i));
    return PairSet(m.universe(), std::move(ps));
}

// Inverse of phi on function graphs: every element in at most one pair and
// every integer within omega.
inline Mset phi_inverse(const PairSet& p) {
    const auto& u = p.universe();
    std::vector<int> counts(static_cast<std::size_t>(u->size()), 0);
    for (const auto& [e, k] : p.pairs()) {
        if (counts[static_cast<std::size_t>(e)] != 0)
            fail(errc::not_a_function, "element " + u->name(e) + " occurs in two pairs");
        if (k > u->omega())
            fail(errc::count_exceeds_omega,
                 "pair (" + u->name(e) + "," + std::to_string(k) + ") exceeds omega");
        counts[static_cast<std::size_t>(e)] = k;
    }
    return Mset(u, std::move(counts));
}

// Down-set embedding: m maps to {(x,k) : 1 <= k <= count(x)}. Unlike phi,
// this one turns mset union/intersection into plain set union/intersection.
inline PairSet psi_downset(const Mset& m) {
    std::vector<PairSet::Pair> ps;
    for (int i = 0; i < m.universe()->size(); ++i)
        for (int k = 1; k <= m.count(i); ++k) ps.emplace_back(i, k);
    return PairSet(m.universe(), std::move(ps));
}

// X x {1..omega}.
inline PairSet finite_grid(const UniversePtr& u) {
    std::vector<PairSet::Pair> ps;
    ps.reserve(static_cast<std::size_t>(u->size()) * static_cast<std::size_t>(u->omega()));
    for (int i = 0; i < u->size(); ++i)
        for (int k = 1; k <= u->omega(); ++k) ps.emplace_back(i, k);
    return PairSet(u, std::move(ps));
}

// Ambient readings for complements of pair sets: the image of a concrete
// mset, the finite grid X x {1..omega}, or all of X x N.
struct PhiOf {
    Mset m;
};
struct FiniteGrid {};
struct NatGrid {};
using AmbientSpec = std::variant<PhiOf, FiniteGrid, NatGrid>;

// Complement of a within the given ambient. Finite ambients produce a plain
// set difference (total: pairs of a outside the carrier simply do not
// contribute); the grid additionally requires a's integers to stay within
// omega, since a pair beyond the grid has no complement there. X x N yields
// the exact cofinite representation.
inline PairOrCofinite complement_in(const PairSet& a, const AmbientSpec& ambient) {
    if (const auto* ph = std::get_if<PhiOf>(&ambient)) {
        require_same_universe(a.universe(), ph->m.universe());
        return pair_difference(phi(ph->m), a);
    }
    if (std::holds_alternative<FiniteGrid>(ambient)) {
        for (const auto& [e, k] : a.pairs())
            if (k > a.universe()->omega())
                fail(errc::not_within_ambient,
                     "pair (" + a.universe()->name(e) + "," + std::to_string(k) +
                         ") lies outside X x {1..omega}");
        return pair_difference(finite_grid(a.universe()), a);
    }
    return CofinitePairSet(a);
}

}  // namespace mtop
