#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <vector>

#include "mtop/enumerate.hpp"
#include "mtop/identity.hpp"
#include "mtop/topology.hpp"

namespace mtop {

enum class SearchMode { Exhaustive, Randomized };

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Bounds for the brute-force searches. The budget caps both the universe
// space (max_omega+1)^max_elements and the number of candidates enumerated
// within any single (|X|, omega) block.
struct SearchBounds {
    int max_elements = 1;
    int max_omega = 1;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;    // randomized mode only
    std::uint64_t trials = 0;  // randomized mode only
    std::uint64_t budget = kDefaultBudget;
    int jobs = 1;
};

// A failing input, replayable from its serialized form. order_key is the
// candidate's position in the global enumeration order: universes by
// (|X|, omega) lexicographic, then parent, then operands in mixed-radix
// order. Keys are relative to the bounds in effect.
struct IdentityWitness {
    std::uint64_t order_key = 0;
    Mset parent;
    Mset m1;
    std::optional<Mset> m2;
    IdentityReport report;
};

struct TopologyWitness {
    std::uint64_t order_key = 0;
    MFamily family;
    Verdict m_verdict;
    Verdict image_verdict;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) fail(errc::budget_exceeded, "enumeration size overflows");
    return a + b;
}

inline std::uint64_t ipow_checked(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// True when the check ignores the parent entirely: global-complement lhs
// against an ambient that is not the parent image. Such searches fix
// parent = full and range the operand over all msets.
inline bool parent_independent(const IdentitySpec& s) {
    return s.kind == IdentityKind::Complement3 && s.lhs == LhsVariant::GlobalDelta &&
           s.ambient != AmbientKind::PhiParent;
}

inline bool operand_over_all_msets(const IdentitySpec& s) {
    return s.kind == IdentityKind::Complement3 && s.lhs == LhsVariant::GlobalDelta;
}

// Per-element weight of a parent count: how many operand choices that digit
// contributes. (c+1)^2 for two submset operands, (c+1) for one.
enum class WeightKind { Square, Linear };

inline std::uint64_t weight(WeightKind w, int c) {
    std::uint64_t v = static_cast<std::uint64_t>(c) + 1;
    return w == WeightKind::Square ? v * v : v;
}

inline std::uint64_t weight_sum(WeightKind w, int omega) {
    std::uint64_t s = 0;
    for (int c = 0; c <= omega; ++c) s = checked_add(s, weight(w, c));
    return s;
}

// Candidate tuples contributed by one parent.
inline std::uint64_t tuples_for_parent(const IdentitySpec& spec, const Mset& parent,
                                       std::uint64_t all_msets_total) {
    if (spec.kind != IdentityKind::Complement3) {
        std::uint64_t s = submset_count(parent);
        return checked_mul(s, s);
    }
    return operand_over_all_msets(spec) ? all_msets_total : submset_count(parent);
}

// Total candidates in one (n = |X|, omega) block.
inline std::uint64_t block_total(const IdentitySpec& spec, int n, int omega) {
    std::uint64_t t = ipow_checked(static_cast<std::uint64_t>(omega) + 1, n);
    if (spec.kind != IdentityKind::Complement3)
        return ipow_checked(weight_sum(WeightKind::Square, omega), n);
    if (parent_independent(spec)) return t;
    if (operand_over_all_msets(spec)) return checked_mul(t, t);  // PhiParent ambient
    return ipow_checked(weight_sum(WeightKind::Linear, omega), n);
}

// Sum of tuples over all parents lexicographically below the given one,
// computed positionally (digit DP) so randomized samples get exact keys.
inline std::uint64_t parent_prefix(const IdentitySpec& spec, const Mset& parent,
                                   std::uint64_t all_msets_total) {
    const auto& cs = parent.counts();
    int n = static_cast<int>(cs.size());
    int omega = parent.universe()->omega();
    if (parent_independent(spec)) return 0;
    if (operand_over_all_msets(spec))  // constant tuples per parent
        return checked_mul(submset_index(full_mset(parent.universe()), parent), all_msets_total);
    WeightKind w =
        spec.kind == IdentityKind::Complement3 ? WeightKind::Linear : WeightKind::Square;
    std::uint64_t big_g = weight_sum(w, omega);
    std::uint64_t prefix = 0;
    std::uint64_t lead = 1;  // product of weights of digits before position j
    for (int j = 0; j < n; ++j) {
        std::uint64_t below = 0;
        for (int c = 0; c < cs[static_cast<std::size_t>(j)]; ++c)
            below = checked_add(below, weight(w, c));
        prefix = checked_add(prefix,
                             checked_mul(checked_mul(lead, below),
                                         ipow_checked(big_g, n - 1 - j)));
        lead = checked_mul(lead, weight(w, cs[static_cast<std::size_t>(j)]));
    }
    return prefix;
}

// Operand index within a parent's tuple space.
inline std::uint64_t tuple_index(const IdentitySpec& spec, const Mset& parent, const Mset& m1,
                                 const std::optional<Mset>& m2) {
    if (spec.kind != IdentityKind::Complement3) {
        std::uint64_t s = submset_count(parent);
        return checked_add(checked_mul(submset_index(parent, m1), s),
                           submset_index(parent, *m2));
    }
    if (operand_over_all_msets(spec)) return submset_index(full_mset(parent.universe()), m1);
    return submset_index(parent, m1);
}

// Scans one parent's operand tuples in order; returns the first failure.
inline std::optional<IdentityWitness> scan_parent(const IdentitySpec& spec, const Mset& parent,
                                                  std::uint64_t base_key) {
    std::optional<IdentityWitness> found;
    std::uint64_t t = 0;
    if (spec.kind != IdentityKind::Complement3) {
        for_each_submset(parent, [&](const Mset& a) -> bool {
            for_each_submset(parent, [&](const Mset& b) -> bool {
                IdentityReport r = check_identity(spec, a, b, parent);
                if (!r.holds) {
                    found = IdentityWitness{base_key + t, parent, a, b, std::move(r)};
                    return false;
                }
                ++t;
                return true;
            });
            return !found.has_value();
        });
        return found;
    }
    auto scan_one = [&](const Mset& a) -> bool {
        IdentityReport r = check_identity(spec, a, std::nullopt, parent);
        if (!r.holds) {
            found = IdentityWitness{base_key + t, parent, a, std::nullopt, std::move(r)};
            return false;
        }
        ++t;
        return true;
    };
    if (operand_over_all_msets(spec))
        for_each_mset(parent.universe(), scan_one);
    else
        for_each_submset(parent, scan_one);
    return found;
}

// Scans a contiguous range of parents (by mixed-radix index); first failure
// in the range is the minimum key in the range.
inline std::optional<IdentityWitness> scan_parent_range(const IdentitySpec& spec,
                                                        const UniversePtr& u, std::uint64_t from,
                                                        std::uint64_t to,
                                                        std::uint64_t block_offset) {
    Mset full = full_mset(u);
    std::uint64_t all_total = submset_count(full);
    if (from >= to) return std::nullopt;
    Mset parent = submset_at(full, from);
    std::uint64_t base = checked_add(block_offset, parent_prefix(spec, parent, all_total));
    for (std::uint64_t p = from; p < to; ++p) {
        if (p != from) parent = submset_at(full, p);
        if (auto w = scan_parent(spec, parent, base)) return w;
        base = checked_add(base, tuples_for_parent(spec, parent, all_total));
    }
    return std::nullopt;
}

inline std::optional<IdentityWitness> min_by_key(std::optional<IdentityWitness> a,
                                                 std::optional<IdentityWitness> b) {
    if (!a) return b;
    if (!b) return a;
    return a->order_key <= b->order_key ? a : b;
}

// Advances idx to the next k-combination of {0..count-1} in lexicographic
// order; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t count) {
    std::size_t k = idx.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] + (k - i) < count) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
        if (i == 0) break;
    }
    return false;
}

}  // namespace detail

// Global order key of a candidate, relative to the given bounds. Agrees with
// the position an exhaustive scan under the same bounds would assign.
inline std::uint64_t identity_order_key(const IdentitySpec& spec, const SearchBounds& bounds,
                                        const Mset& parent, const Mset& m1,
                                        const std::optional<Mset>& m2) {
    int n = parent.universe()->size();
    int omega = parent.universe()->omega();
    std::uint64_t offset = 0;
    for (int n2 = 1; n2 < n; ++n2)
        for (int o2 = 1; o2 <= bounds.max_omega; ++o2)
            offset = detail::checked_add(offset, detail::block_total(spec, n2, o2));
    for (int o2 = 1; o2 < omega; ++o2)
        offset = detail::checked_add(offset, detail::block_total(spec, n, o2));
    std::uint64_t all_total = submset_count(full_mset(parent.universe()));
    return detail::checked_add(
        offset, detail::checked_add(detail::parent_prefix(spec, parent, all_total),
                                    detail::tuple_index(spec, parent, m1, m2)));
}

// Exhaustive or randomized hunt for the least-order_key input falsifying the
// identity. Exhaustive mode scans the full order and is independent of the
// worker count: workers reduce with a minimum, never first-found.
inline std::optional<IdentityWitness> search_min_counterexample(const IdentitySpec& spec,
                                                                const SearchBounds& bounds) {
    if (bounds.max_elements < 1 || bounds.max_omega < 1)
        fail(errc::bad_input, "bounds must allow at least one element and omega >= 1");

    if (bounds.mode == SearchMode::Randomized) {
        std::mt19937_64 rng(bounds.seed);
        auto pick = [&rng](std::uint64_t n) {
            return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
        };
        std::optional<IdentityWitness> best;
        for (std::uint64_t t = 0; t < bounds.trials; ++t) {
            int n = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(bounds.max_elements)));
            int omega = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(bounds.max_omega)));
            auto u = canonical_universe(n, omega);
            Mset full = full_mset(u);
            std::uint64_t total = submset_count(full);
            Mset parent = detail::parent_independent(spec) ? full : submset_at(full, pick(total));
            Mset m1 = detail::operand_over_all_msets(spec)
                          ? submset_at(full, pick(total))
                          : submset_at(parent, pick(submset_count(parent)));
            std::optional<Mset> m2;
            if (spec.kind != IdentityKind::Complement3)
                m2 = submset_at(parent, pick(submset_count(parent)));
            IdentityReport r = check_identity(spec, m1, m2, parent);
            if (!r.holds) {
                std::uint64_t key = identity_order_key(spec, bounds, parent, m1, m2);
                IdentityWitness w{key, parent, m1, m2, std::move(r)};
                best = detail::min_by_key(std::move(best), std::move(w));
            }
        }
        return best;
    }

    std::uint64_t universe_space = detail::ipow_checked(
        static_cast<std::uint64_t>(bounds.max_omega) + 1, bounds.max_elements);
    if (universe_space > bounds.budget)
        fail(errc::budget_exceeded, "(max_omega+1)^max_elements exceeds the budget");

    std::uint64_t offset = 0;
    for (int n = 1; n <= bounds.max_elements; ++n) {
        for (int omega = 1; omega <= bounds.max_omega; ++omega) {
            std::uint64_t block = detail::block_total(spec, n, omega);
            if (block > bounds.budget)
                fail(errc::budget_exceeded, "candidate block at |X|=" + std::to_string(n) +
                                                ", omega=" + std::to_string(omega) +
                                                " exceeds the budget");
            auto u = canonical_universe(n, omega);
            std::uint64_t parents =
                detail::parent_independent(spec)
                    ? 1
                    : detail::ipow_checked(static_cast<std::uint64_t>(omega) + 1, n);
            std::optional<IdentityWitness> found;
            int jobs = std::max(bounds.jobs, 1);
            if (jobs == 1 || parents < 2 * static_cast<std::uint64_t>(jobs)) {
                if (detail::parent_independent(spec)) {
                    found = detail::scan_parent(spec, full_mset(u), offset);
                } else {
                    found = detail::scan_parent_range(spec, u, 0, parents, offset);
                }
            } else {
                std::vector<std::future<std::optional<IdentityWitness>>> futs;
                std::uint64_t chunk = (parents + jobs - 1) / static_cast<std::uint64_t>(jobs);
                for (std::uint64_t from = 0; from < parents; from += chunk) {
                    std::uint64_t to = std::min(from + chunk, parents);
                    futs.push_back(std::async(std::launch::async, [=, &spec]() {
                        return detail::scan_parent_range(spec, u, from, to, offset);
                    }));
                }
                for (auto& f : futs) found = detail::min_by_key(std::move(found), f.get());
            }
            if (found) return found;
            offset = detail::checked_add(offset, block);
        }
    }
    return std::nullopt;
}

// Hunts for an M-topology whose phi-image violates the point-topology
// axioms. Candidates are the subbasis-generated topologies, subbases of size
// 0..2 before size 3, parents and subbases in mixed-radix order. Exhaustive
// only; the order key counts candidates.
inline std::optional<TopologyWitness> search_topology_counterexample(const SearchBounds& bounds) {
    if (bounds.max_elements < 1 || bounds.max_omega < 1)
        fail(errc::bad_input, "bounds must allow at least one element and omega >= 1");
    if (bounds.mode == SearchMode::Randomized)
        fail(errc::bad_input, "the topology search runs in exhaustive mode only");
    std::uint64_t universe_space = detail::ipow_checked(
        static_cast<std::uint64_t>(bounds.max_omega) + 1, bounds.max_elements);
    if (universe_space > bounds.budget)
        fail(errc::budget_exceeded, "(max_omega+1)^max_elements exceeds the budget");

    std::uint64_t key = 0;
    for (int n = 1; n <= bounds.max_elements; ++n) {
        for (int omega = 1; omega <= bounds.max_omega; ++omega) {
            auto u = canonical_universe(n, omega);
            Mset full = full_mset(u);

            // Candidate-count guard for this block before scanning it.
            std::uint64_t block = 0;
            for_each_submset(full, [&](const Mset& parent) {
                std::uint64_t s = submset_count(parent);
                std::uint64_t c = 1 + s;
                if (s >= 2) c = detail::checked_add(c, s * (s - 1) / 2);
                if (s >= 3) c = detail::checked_add(c, s * (s - 1) * (s - 2) / 6);
                block = detail::checked_add(block, c);
            });
            if (block > bounds.budget)
                fail(errc::budget_exceeded, "candidate block at |X|=" + std::to_string(n) +
                                                ", omega=" + std::to_string(omega) +
                                                " exceeds the budget");

            std::optional<TopologyWitness> found;
            for_each_submset(full, [&](const Mset& parent) -> bool {
                std::vector<Mset> subs = enumerate_submsets(parent);
                std::size_t count = subs.size();
                std::size_t max_size = std::min<std::size_t>(3, count);
                for (std::size_t size = 0; size <= max_size && !found; ++size) {
                    std::vector<std::size_t> idx(size);
                    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
                    for (;;) {
                        std::vector<Mset> subbasis;
                        subbasis.reserve(size);
                        for (std::size_t i : idx) subbasis.push_back(subs[i]);
                        MFamily fam = generate_m_topology(subbasis, parent);
                        Verdict mv = is_m_topology(fam);
                        if (mv.holds) {
                            Verdict iv = is_point_topology(image_family(fam));
                            if (!iv.holds) {
                                found = TopologyWitness{key, fam, mv, iv};
                                break;
                            }
                        }
                        ++key;
                        if (!detail::next_combination(idx, count)) break;
                    }
                }
                return !found.has_value();
            });
            if (found) return found;
        }
    }
    return std::nullopt;
}

}  // namespace mtop
