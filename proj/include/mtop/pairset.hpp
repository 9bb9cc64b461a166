#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mtop/universe.hpp"

namespace mtop {

// A finite subset of X x N: pairs (element, k) with k >= 1, kept sorted by
// (element, k). Integers are NOT capped at omega; the ambient X x N is
// legitimate. Immutable after construction.
class PairSet {
public:
    using Pair = std::pair<int, int>;  // (element index, positive integer)

    explicit PairSet(UniversePtr u) : uni_(std::move(u)) {}

    PairSet(UniversePtr u, std::vector<Pair> pairs) : uni_(std::move(u)), pairs_(std::move(pairs)) {
        for (const auto& [e, k] : pairs_) {
            if (e < 0 || e >= uni_->size()) fail(errc::unknown_element, "pair element out of range");
            if (k < 1) fail(errc::bad_input, "pair integers must be >= 1");
        }
        std::sort(pairs_.begin(), pairs_.end());
        pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    }

    static PairSet from_names(const UniversePtr& u,
                              const std::vector<std::pair<std::string, int>>& named) {
        std::vector<Pair> ps;
        ps.reserve(named.size());
        for (const auto& [name, k] : named) ps.emplace_back(u->index_of(name), k);
        return PairSet(u, std::move(ps));
    }

    const UniversePtr& universe() const { return uni_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool is_empty() const { return pairs_.empty(); }

    bool contains(int e, int k) const {
        return std::binary_search(pairs_.begin(), pairs_.end(), Pair{e, k});
    }

    // Canonical text form, e.g. "{(x,4),(y,3)}"; "{}" when empty.
    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [e, k] : pairs_) {
            if (!first) out += ',';
            out += "(" + uni_->name(e) + "," + std::to_string(k) + ")";
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const PairSet& a, const PairSet& b) {
        return same_universe(a.uni_, b.uni_) && a.pairs_ == b.pairs_;
    }
    friend bool operator!=(const PairSet& a, const PairSet& b) { return !(a == b); }
    friend bool operator<(const PairSet& a, const PairSet& b) { return a.pairs_ < b.pairs_; }

private:
    UniversePtr uni_;
    std::vector<Pair> pairs_;
};

inline PairSet pair_union(const PairSet& a, const PairSet& b) {
    require_same_universe(a.universe(), b.universe());
    std::vector<PairSet::Pair> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.pairs().begin(), a.pairs().end(), b.pairs().begin(), b.pairs().end(),
                   std::back_inserter(out));
    return PairSet(a.universe(), std::move(out));
}

inline PairSet pair_intersect(const PairSet& a, const PairSet& b) {
    require_same_universe(a.universe(), b.universe());
    std::vector<PairSet::Pair> out;
    std::set_intersection(a.pairs().begin(), a.pairs().end(), b.pairs().begin(), b.pairs().end(),
                          std::back_inserter(out));
    return PairSet(a.universe(), std::move(out));
}

inline PairSet pair_difference(const PairSet& a, const PairSet& b) {
    require_same_universe(a.universe(), b.universe());
    std::vector<PairSet::Pair> out;
    std::set_difference(a.pairs().begin(), a.pairs().end(), b.pairs().begin(), b.pairs().end(),
                        std::back_inserter(out));
    return PairSet(a.universe(), std::move(out));
}

inline bool is_pair_subset(const PairSet& a, const PairSet& b) {
    require_same_universe(a.universe(), b.universe());
    return std::includes(b.pairs().begin(), b.pairs().end(), a.pairs().begin(), a.pairs().end());
}

// Least pair (canonical order) present in exactly one of a, b.
inline std::optional<PairSet::Pair> first_symmetric_difference(const PairSet& a, const PairSet& b) {
    auto ia = a.pairs().begin(), ea = a.pairs().end();
    auto ib = b.pairs().begin(), eb = b.pairs().end();
    while (ia != ea && ib != eb) {
        if (*ia == *ib) {
            ++ia;
            ++ib;
        } else {
            return std::min(*ia, *ib);
        }
    }
    if (ia != ea) return *ia;
    if (ib != eb) return *ib;
    return std::nullopt;
}

// (X x N) minus a finite excluded set. The excluded set is stored exactly;
// nothing is ever truncated.
class CofinitePairSet {
public:
    explicit CofinitePairSet(PairSet excluded) : excluded_(std::move(excluded)) {}

    const UniversePtr& universe() const { return excluded_.universe(); }
    const PairSet& excluded() const { return excluded_; }

    std::string str() const { return "XxN \\ " + excluded_.str(); }

    friend bool operator==(const CofinitePairSet& a, const CofinitePairSet& b) {
        return a.excluded_ == b.excluded_;
    }
    friend bool operator!=(const CofinitePairSet& a, const CofinitePairSet& b) { return !(a == b); }

private:
    PairSet excluded_;
};

// Result type for complements: finite for finite ambients, cofinite for X x N.
// A cofinite set never equals a finite one.
using PairOrCofinite = std::variant<PairSet, CofinitePairSet>;

inline bool pair_value_equal(const PairOrCofinite& a, const PairOrCofinite& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<PairSet>(a))
        return std::get<PairSet>(a) == std::get<PairSet>(b);
    return std::get<CofinitePairSet>(a) == std::get<CofinitePairSet>(b);
}

inline bool pair_value_equal(const PairSet& a, const PairOrCofinite& b) {
    return std::holds_alternative<PairSet>(b) && a == std::get<PairSet>(b);
}

inline std::string pair_value_str(const PairOrCofinite& v) {
    return std::holds_alternative<PairSet>(v) ? std::get<PairSet>(v).str()
                                              : std::get<CofinitePairSet>(v).str();
}

}  // namespace mtop
