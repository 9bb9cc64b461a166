#pragma once

#include <cstdint>
#include <vector>

#include "mtop/mset.hpp"

namespace mtop {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) fail(errc::budget_exceeded, "enumeration size overflows");
    return a * b;
}

// |P*(parent)| = product of (count+1) over the elements.
inline std::uint64_t submset_count(const Mset& parent) {
    std::uint64_t n = 1;
    for (int c : parent.counts()) n = checked_mul(n, static_cast<std::uint64_t>(c) + 1);
    return n;
}

// Mixed-radix position of m within P*(parent), last element fastest. This is
// exactly counts-lexicographic rank, so it agrees with Mset's operator<.
inline std::uint64_t submset_index(const Mset& parent, const Mset& m) {
    require_same_universe(parent.universe(), m.universe());
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < parent.counts().size(); ++i) {
        idx = checked_mul(idx, static_cast<std::uint64_t>(parent.counts()[i]) + 1);
        idx += static_cast<std::uint64_t>(m.counts()[i]);
    }
    return idx;
}

inline Mset submset_at(const Mset& parent, std::uint64_t index) {
    std::vector<int> counts(parent.counts().size(), 0);
    for (std::size_t i = counts.size(); i-- > 0;) {
        std::uint64_t radix = static_cast<std::uint64_t>(parent.counts()[i]) + 1;
        counts[i] = static_cast<int>(index % radix);
        index /= radix;
    }
    return Mset(parent.universe(), std::move(counts));
}

// Visits every submset of parent exactly once in mixed-radix order
// (odometer with the last element fastest). f may return void, or bool where
// false stops the walk early.
template <class F>
inline void for_each_submset(const Mset& parent, F&& f) {
    std::vector<int> counts(parent.counts().size(), 0);
    for (;;) {
        Mset m(parent.universe(), counts);
        if constexpr (std::is_same_v<decltype(f(m)), bool>) {
            if (!f(m)) return;
        } else {
            f(m);
        }
        std::size_t i = counts.size();
        while (i-- > 0) {
            if (++counts[i] <= parent.counts()[i]) break;
            counts[i] = 0;
            if (i == 0) return;
        }
    }
}

inline std::vector<Mset> enumerate_submsets(const Mset& parent) {
    std::vector<Mset> out;
    out.reserve(static_cast<std::size_t>(submset_count(parent)));
    for_each_submset(parent, [&](const Mset& m) { out.push_back(m); });
    return out;
}

// All msets over u, i.e. P*(full).
template <class F>
inline void for_each_mset(const UniversePtr& u, F&& f) {
    for_each_submset(full_mset(u), std::forward<F>(f));
}

inline std::vector<Mset> all_msets(const UniversePtr& u) {
    return enumerate_submsets(full_mset(u));
}

}  // namespace mtop
