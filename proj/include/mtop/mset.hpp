#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtop/universe.hpp"

namespace mtop {

// Bounded multiset over a universe. Counts are stored densely, one per
// element in canonical order; a zero entry means the element is absent, so
// vector equality coincides with count-map equality on the canonical form.
// Values are immutable after construction.
class Mset {
public:
    explicit Mset(UniversePtr u)
        : uni_(std::move(u)), counts_(static_cast<std::size_t>(uni_->size()), 0) {}

    Mset(UniversePtr u, std::vector<int> counts) : uni_(std::move(u)), counts_(std::move(counts)) {
        if (static_cast<int>(counts_.size()) != uni_->size())
            fail(errc::bad_input, "count vector does not match universe size");
        for (int i = 0; i < uni_->size(); ++i) {
            int c = counts_[static_cast<std::size_t>(i)];
            if (c < 0) fail(errc::bad_input, "negative count for " + uni_->name(i));
            if (c > uni_->omega())
                fail(errc::count_exceeds_omega,
                     "count " + std::to_string(c) + " for " + uni_->name(i) + " exceeds omega " +
                         std::to_string(uni_->omega()));
        }
    }

    static Mset empty(UniversePtr u) { return Mset(std::move(u)); }

    const UniversePtr& universe() const { return uni_; }
    const std::vector<int>& counts() const { return counts_; }
    int count(int i) const { return counts_[static_cast<std::size_t>(i)]; }
    int count(const std::string& name) const {
        int i = uni_->find(name);
        return i < 0 ? 0 : count(i);
    }

    bool is_empty() const {
        for (int c : counts_)
            if (c != 0) return false;
        return true;
    }

    int support_size() const {
        int n = 0;
        for (int c : counts_)
            if (c > 0) ++n;
        return n;
    }

    // Canonical text form, e.g. "{4/x,3/y}"; "{}" when empty.
    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (int i = 0; i < uni_->size(); ++i) {
            if (count(i) == 0) continue;
            if (!first) out += ',';
            out += std::to_string(count(i)) + "/" + uni_->name(i);
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const Mset& a, const Mset& b) {
        return same_universe(a.uni_, b.uni_) && a.counts_ == b.counts_;
    }
    friend bool operator!=(const Mset& a, const Mset& b) { return !(a == b); }

    // Counts-lexicographic order; the submset enumeration emits exactly this
    // order, so "smaller in enumeration" and "operator<" agree.
    friend bool operator<(const Mset& a, const Mset& b) { return a.counts_ < b.counts_; }

private:
    UniversePtr uni_;
    std::vector<int> counts_;
};

// Canonicalizing constructor: unknown keys and over-omega counts are errors,
// zero counts are dropped.
inline Mset make_mset(const UniversePtr& u, const std::map<std::string, int>& raw) {
    std::vector<int> counts(static_cast<std::size_t>(u->size()), 0);
    for (const auto& [name, c] : raw) {
        int i = u->index_of(name);
        if (c < 0) fail(errc::bad_input, "negative count for " + name);
        if (c > u->omega())
            fail(errc::count_exceeds_omega, "count " + std::to_string(c) + " for " + name +
                                                " exceeds omega " + std::to_string(u->omega()));
        counts[static_cast<std::size_t>(i)] = c;
    }
    return Mset(u, std::move(counts));
}

inline Mset full_mset(const UniversePtr& u) {
    return Mset(u, std::vector<int>(static_cast<std::size_t>(u->size()), u->omega()));
}

// Pointwise max.
inline Mset mset_union(const Mset& a, const Mset& b) {
    require_same_universe(a.universe(), b.universe());
    std::vector<int> out(a.counts());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], b.counts()[i]);
    return Mset(a.universe(), std::move(out));
}

// Pointwise min.
inline Mset mset_intersect(const Mset& a, const Mset& b) {
    require_same_universe(a.universe(), b.universe());
    std::vector<int> out(a.counts());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], b.counts()[i]);
    return Mset(a.universe(), std::move(out));
}

// Clamped pointwise subtraction a - b; total even when b is not below a.
inline Mset mset_difference(const Mset& a, const Mset& b) {
    require_same_universe(a.universe(), b.universe());
    std::vector<int> out(a.counts());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i] - b.counts()[i], 0);
    return Mset(a.universe(), std::move(out));
}

// Complement inside the whole bounded space: count omega - c at every element.
inline Mset complement_global(const Mset& m) {
    const auto& u = m.universe();
    std::vector<int> out(m.counts());
    for (int& c : out) c = u->omega() - c;
    return Mset(u, std::move(out));
}

// Complement relative to a parent: clamped parent - m.
inline Mset complement_relative(const Mset& m, const Mset& parent) {
    return mset_difference(parent, m);
}

inline bool is_submset(const Mset& a, const Mset& b) {
    require_same_universe(a.universe(), b.universe());
    for (std::size_t i = 0; i < a.counts().size(); ++i)
        if (a.counts()[i] > b.counts()[i]) return false;
    return true;
}

}  // namespace mtop
