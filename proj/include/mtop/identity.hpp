#pragma once

#include <optional>
#include <span>
#include <string>

#include "mtop/embed.hpp"
#include "mtop/mset.hpp"
#include "mtop/pairset.hpp"

namespace mtop {

// The three identities under test: does phi turn mset union / intersection /
// complement into set union / intersection / complement?
enum class IdentityKind { Union1 = 1, Intersect2 = 2, Complement3 = 3 };

// For identity (3): which complement feeds the left-hand side.
enum class LhsVariant { GlobalDelta, RelativeDelta };

// Symbolic ambient for identity (3)'s right-hand side, resolved against the
// universe and parent at check time. The original claim does not say which
// ambient "(phi(M))^c" means, so all four readings are first-class.
enum class AmbientKind { PhiParent, PhiFull, Grid, Nat };

struct IdentitySpec {
    IdentityKind kind = IdentityKind::Union1;
    LhsVariant lhs = LhsVariant::GlobalDelta;    // identity (3) only
    AmbientKind ambient = AmbientKind::PhiFull;  // identity (3) only
};

inline const char* ambient_name(AmbientKind a) {
    switch (a) {
        case AmbientKind::PhiParent: return "phiU";
        case AmbientKind::PhiFull: return "phiFull";
        case AmbientKind::Grid: return "grid";
        case AmbientKind::Nat: return "nat";
    }
    return "?";
}

inline const char* lhs_name(LhsVariant v) {
    return v == LhsVariant::GlobalDelta ? "global" : "relative";
}

inline AmbientSpec resolve_ambient(AmbientKind kind, const Mset& parent) {
    switch (kind) {
        case AmbientKind::PhiParent: return PhiOf{parent};
        case AmbientKind::PhiFull: return PhiOf{full_mset(parent.universe())};
        case AmbientKind::Grid: return FiniteGrid{};
        case AmbientKind::Nat: return NatGrid{};
    }
    return NatGrid{};
}

struct IdentityReport {
    IdentitySpec spec;
    Mset parent;
    Mset m1;
    std::optional<Mset> m2;
    PairSet lhs;
    PairOrCofinite rhs;
    bool holds = false;
    // Least pair in the symmetric difference; absent when it holds, and also
    // absent against a cofinite rhs (which never equals a finite lhs).
    std::optional<PairSet::Pair> first_difference;
};

namespace detail {

inline IdentityReport finish_report(IdentitySpec spec, Mset parent, Mset m1,
                                    std::optional<Mset> m2, PairSet lhs, PairOrCofinite rhs) {
    IdentityReport r{std::move(spec), std::move(parent), std::move(m1),
                     std::move(m2),   std::move(lhs),    std::move(rhs)};
    if (const auto* fin = std::get_if<PairSet>(&r.rhs)) {
        r.holds = r.lhs == *fin;
        if (!r.holds) r.first_difference = first_symmetric_difference(r.lhs, *fin);
    } else {
        r.holds = false;
    }
    return r;
}

}  // namespace detail

// Runs one identity check. For (1)/(2) both operands are required and must be
// submsets of parent; for (3) a single operand is taken and must be a submset
// of parent only in the relative-complement variant.
inline IdentityReport check_identity(const IdentitySpec& spec, const Mset& m1,
                                     const std::optional<Mset>& m2, const Mset& parent) {
    require_same_universe(m1.universe(), parent.universe());
    if (spec.kind == IdentityKind::Union1 || spec.kind == IdentityKind::Intersect2) {
        if (!m2) fail(errc::missing_second_operand, "identities (1) and (2) take two msets");
        require_same_universe(m2->universe(), parent.universe());
        if (!is_submset(m1, parent) || !is_submset(*m2, parent))
            fail(errc::not_submset, "operands must be submsets of the parent");
        if (spec.kind == IdentityKind::Union1) {
            PairSet lhs = phi(mset_union(m1, *m2));
            PairOrCofinite rhs = pair_union(phi(m1), phi(*m2));
            return detail::finish_report(spec, parent, m1, m2, std::move(lhs), std::move(rhs));
        }
        PairSet lhs = phi(mset_intersect(m1, *m2));
        PairOrCofinite rhs = pair_intersect(phi(m1), phi(*m2));
        return detail::finish_report(spec, parent, m1, m2, std::move(lhs), std::move(rhs));
    }
    if (m2) fail(errc::bad_input, "identity (3) takes a single mset");
    if (spec.lhs == LhsVariant::RelativeDelta && !is_submset(m1, parent))
        fail(errc::not_submset, "the operand must be a submset of the parent");
    PairSet lhs = spec.lhs == LhsVariant::GlobalDelta ? phi(complement_global(m1))
                                                      : phi(complement_relative(m1, parent));
    PairOrCofinite rhs = complement_in(phi(m1), resolve_ambient(spec.ambient, parent));
    return detail::finish_report(spec, parent, m1, std::nullopt, std::move(lhs), std::move(rhs));
}

// n-ary fold for identities (1) and (2); the two-operand checker is the
// canonical form, this is a convenience over it.
inline IdentityReport check_identity_nary(IdentityKind kind, std::span<const Mset> ms,
                                          const Mset& parent) {
    if (kind == IdentityKind::Complement3)
        fail(errc::bad_input, "the n-ary form covers identities (1) and (2) only");
    if (ms.empty()) fail(errc::bad_input, "need at least one operand");
    for (const auto& m : ms) {
        require_same_universe(m.universe(), parent.universe());
        if (!is_submset(m, parent)) fail(errc::not_submset, "operands must be submsets of parent");
    }
    Mset folded = ms[0];
    PairSet image = phi(ms[0]);
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (kind == IdentityKind::Union1) {
            folded = mset_union(folded, ms[i]);
            image = pair_union(image, phi(ms[i]));
        } else {
            folded = mset_intersect(folded, ms[i]);
            image = pair_intersect(image, phi(ms[i]));
        }
    }
    IdentitySpec spec{kind};
    std::optional<Mset> second = ms.size() > 1 ? std::optional<Mset>(ms[1]) : std::nullopt;
    return detail::finish_report(spec, parent, ms[0], std::move(second), phi(folded),
                                 std::move(image));
}

}  // namespace mtop
