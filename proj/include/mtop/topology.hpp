#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mtop/embed.hpp"
#include "mtop/mset.hpp"
#include "mtop/pairset.hpp"

namespace mtop {

// A finite family of submsets of a parent space. Members are deduplicated
// and kept sorted so axiom checks are deterministic in member order.
class MFamily {
public:
    MFamily(Mset parent, std::vector<Mset> members)
        : parent_(std::move(parent)), members_(std::move(members)) {
        for (const auto& m : members_) {
            require_same_universe(m.universe(), parent_.universe());
            if (!is_submset(m, parent_))
                fail(errc::not_submset, "family member " + m.str() + " is not a submset of " +
                                            parent_.str());
        }
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const Mset& parent() const { return parent_; }
    const std::vector<Mset>& members() const { return members_; }

    bool contains(const Mset& m) const {
        return std::binary_search(members_.begin(), members_.end(), m);
    }

private:
    Mset parent_;
    std::vector<Mset> members_;
};

// A finite family of pair sets over a carrier. Members need not lie within
// the carrier; that is one of the axioms the checker reports on.
class PairFamily {
public:
    PairFamily(PairSet carrier, std::vector<PairSet> members)
        : carrier_(std::move(carrier)), members_(std::move(members)) {
        for (const auto& p : members_) require_same_universe(p.universe(), carrier_.universe());
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const PairSet& carrier() const { return carrier_; }
    const std::vector<PairSet>& members() const { return members_; }

    bool contains(const PairSet& p) const {
        return std::binary_search(members_.begin(), members_.end(), p);
    }

private:
    PairSet carrier_;
    std::vector<PairSet> members_;
};

struct Violation {
    std::string axiom;                 // first failing axiom in the fixed check order
    std::vector<std::string> members;  // offending member(s), canonical text
    std::string computed;              // the set that is missing or out of range
};

struct Verdict {
    bool holds = true;
    std::optional<Violation> violation;

    static Verdict ok() { return Verdict{}; }
    static Verdict fail(std::string axiom, std::vector<std::string> members,
                        std::string computed) {
        return Verdict{false, Violation{std::move(axiom), std::move(members), std::move(computed)}};
    }
};

// Check order is fixed so violation witnesses are deterministic: empty
// member, whole space member, then union closure, then intersection closure.
// Pairwise closure suffices on finite families.
inline Verdict is_m_topology(const MFamily& fam) {
    const auto& u = fam.parent().universe();
    Mset empty = Mset::empty(u);
    if (!fam.contains(empty)) return Verdict::fail("missing_empty", {}, empty.str());
    if (!fam.contains(fam.parent())) return Verdict::fail("missing_parent", {}, fam.parent().str());
    const auto& ms = fam.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            Mset un = mset_union(ms[i], ms[j]);
            if (!fam.contains(un))
                return Verdict::fail("union_not_closed", {ms[i].str(), ms[j].str()}, un.str());
        }
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            Mset in = mset_intersect(ms[i], ms[j]);
            if (!fam.contains(in))
                return Verdict::fail("intersection_not_closed", {ms[i].str(), ms[j].str()},
                                     in.str());
        }
    return Verdict::ok();
}

// Same fixed order, plus the members-within-carrier axiom that pair families
// do not enforce structurally.
inline Verdict is_point_topology(const PairFamily& fam) {
    PairSet empty(fam.carrier().universe());
    if (!fam.contains(empty)) return Verdict::fail("missing_empty", {}, empty.str());
    if (!fam.contains(fam.carrier()))
        return Verdict::fail("missing_carrier", {}, fam.carrier().str());
    const auto& ms = fam.members();
    for (const auto& m : ms)
        if (!is_pair_subset(m, fam.carrier()))
            return Verdict::fail("member_outside_carrier", {m.str()},
                                 pair_difference(m, fam.carrier()).str());
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            PairSet un = pair_union(ms[i], ms[j]);
            if (!fam.contains(un))
                return Verdict::fail("union_not_closed", {ms[i].str(), ms[j].str()}, un.str());
        }
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            PairSet in = pair_intersect(ms[i], ms[j]);
            if (!fam.contains(in))
                return Verdict::fail("intersection_not_closed", {ms[i].str(), ms[j].str()},
                                     in.str());
        }
    return Verdict::ok();
}

// Smallest family containing the subbasis plus {empty, parent}, closed under
// pairwise intersection and then pairwise union. The lattice is distributive,
// so meet-closure followed by join-closure is closed under both.
inline MFamily generate_m_topology(const std::vector<Mset>& subbasis, const Mset& parent) {
    for (const auto& s : subbasis) {
        require_same_universe(s.universe(), parent.universe());
        if (!is_submset(s, parent))
            fail(errc::not_submset, "subbasis member " + s.str() + " is not a submset of " +
                                        parent.str());
    }
    std::set<Mset> fam(subbasis.begin(), subbasis.end());
    auto close_under = [&fam](auto op) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Mset> snapshot(fam.begin(), fam.end());
            for (std::size_t i = 0; i < snapshot.size(); ++i)
                for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                    if (fam.insert(op(snapshot[i], snapshot[j])).second) grew = true;
        }
    };
    close_under([](const Mset& a, const Mset& b) { return mset_intersect(a, b); });
    close_under([](const Mset& a, const Mset& b) { return mset_union(a, b); });
    fam.insert(Mset::empty(parent.universe()));
    fam.insert(parent);
    return MFamily(parent, std::vector<Mset>(fam.begin(), fam.end()));
}

// The phi-image of a family: carrier phi(parent), members phi(m).
inline PairFamily image_family(const MFamily& fam) {
    std::vector<PairSet> members;
    members.reserve(fam.members().size());
    for (const auto& m : fam.members()) members.push_back(phi(m));
    return PairFamily(phi(fam.parent()), std::move(members));
}

}  // namespace mtop
