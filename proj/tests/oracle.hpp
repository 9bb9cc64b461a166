#pragma once

// Independent brute-force oracle used to confirm minimal counterexamples and
// degenerate-regime claims before they are frozen as fixtures. Everything
// here works on raw count vectors and std::set pair sets; nothing calls the
// library under test.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace bfo {

using Counts = std::vector<int>;              // one count per element slot
using Pairs = std::set<std::pair<int, int>>;  // (element slot, k)

inline Pairs graph_of(const Counts& m) {
    Pairs p;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
        if (m[i] > 0) p.insert({i, m[i]});
    return p;
}

inline Counts cw_max(const Counts& a, const Counts& b) {
    Counts r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline Counts cw_min(const Counts& a, const Counts& b) {
    Counts r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
    return r;
}

inline Counts cw_comp(const Counts& m, int omega) {
    Counts r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = omega - m[i];
    return r;
}

inline Pairs set_union(const Pairs& a, const Pairs& b) {
    Pairs r = a;
    r.insert(b.begin(), b.end());
    return r;
}

inline Pairs set_intersect(const Pairs& a, const Pairs& b) {
    Pairs r;
    for (const auto& p : a)
        if (b.count(p)) r.insert(p);
    return r;
}

inline Pairs set_diff(const Pairs& a, const Pairs& b) {
    Pairs r;
    for (const auto& p : a)
        if (!b.count(p)) r.insert(p);
    return r;
}

// Advances c through all vectors bounded by `bound`, lexicographic with the
// last slot fastest; false once wrapped back to all zeros.
inline bool next_below(Counts& c, const Counts& bound) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (++c[i] <= bound[i]) return true;
        c[i] = 0;
    }
    return false;
}

inline bool u1_holds(const Counts& a, const Counts& b) {
    return graph_of(cw_max(a, b)) == set_union(graph_of(a), graph_of(b));
}

inline bool i2_holds(const Counts& a, const Counts& b) {
    return graph_of(cw_min(a, b)) == set_intersect(graph_of(a), graph_of(b));
}

// Identity (3), global complement against the full-mset image.
inline bool c3_full_holds(const Counts& m, int omega) {
    Counts full(m.size(), omega);
    return graph_of(cw_comp(m, omega)) == set_diff(graph_of(full), graph_of(m));
}

struct Failure {
    int n = 0;
    int omega = 0;
    Counts parent;
    Counts m1;
    Counts m2;                 // unused for identity (3)
    std::uint64_t position = 0;  // candidates checked before this one
};

// First failing input for identity `which` (1, 2, or 3-with-full-ambient) in
// the order: (|X|, omega) lexicographic, parents ascending, operands
// ascending with the second operand fastest.
inline std::optional<Failure> first_failure(int which, int max_elems, int max_omega) {
    std::uint64_t pos = 0;
    for (int n = 1; n <= max_elems; ++n) {
        for (int omega = 1; omega <= max_omega; ++omega) {
            Counts full(static_cast<std::size_t>(n), omega);
            if (which == 3) {
                Counts m(static_cast<std::size_t>(n), 0);
                do {
                    if (!c3_full_holds(m, omega))
                        return Failure{n, omega, full, m, {}, pos};
                    ++pos;
                } while (next_below(m, full));
            } else {
                Counts parent(static_cast<std::size_t>(n), 0);
                do {
                    Counts a(static_cast<std::size_t>(n), 0);
                    do {
                        Counts b(static_cast<std::size_t>(n), 0);
                        do {
                            bool ok = which == 1 ? u1_holds(a, b) : i2_holds(a, b);
                            if (!ok) return Failure{n, omega, parent, a, b, pos};
                            ++pos;
                        } while (next_below(b, parent));
                    } while (next_below(a, parent));
                } while (next_below(parent, full));
            }
        }
    }
    return std::nullopt;
}

// Down-set embedding for the contrast check.
inline Pairs downset_of(const Counts& m) {
    Pairs p;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
        for (int k = 1; k <= m[i]; ++k) p.insert({i, k});
    return p;
}

// Independent finite-topology checks for the omega = 1 regime.
inline bool leq(const Counts& a, const Counts& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool family_is_m_topology(const std::vector<Counts>& fam, const Counts& parent) {
    auto contains = [&fam](const Counts& m) {
        for (const auto& f : fam)
            if (f == m) return true;
        return false;
    };
    if (!contains(Counts(parent.size(), 0)) || !contains(parent)) return false;
    for (const auto& a : fam)
        for (const auto& b : fam)
            if (!contains(cw_max(a, b)) || !contains(cw_min(a, b))) return false;
    return true;
}

inline bool image_is_point_topology(const std::vector<Counts>& fam, const Counts& parent) {
    std::set<Pairs> members;
    for (const auto& m : fam) members.insert(graph_of(m));
    Pairs carrier = graph_of(parent);
    if (!members.count(Pairs{}) || !members.count(carrier)) return false;
    for (const auto& m : members) {
        for (const auto& p : m)
            if (!carrier.count(p)) return false;
    }
    for (const auto& a : members)
        for (const auto& b : members)
            if (!members.count(set_union(a, b)) || !members.count(set_intersect(a, b)))
                return false;
    return true;
}

}  // namespace bfo
