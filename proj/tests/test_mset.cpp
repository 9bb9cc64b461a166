#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mtop/enumerate.hpp"
#include "mtop/mset.hpp"

using namespace mtop;

namespace {

UniversePtr xyz4() { return make_universe({"x", "y", "z"}, 4); }

Mset rand_mset(const UniversePtr& u, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, u->omega());
    std::vector<int> counts(static_cast<std::size_t>(u->size()));
    for (auto& c : counts) c = d(rng);
    return Mset(u, std::move(counts));
}

}  // namespace

TEST_CASE("universe canonicalizes and validates") {
    auto u = make_universe({"z", "x", "y"}, 4);
    REQUIRE(u->elements() == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(u->omega() == 4);
    REQUIRE(u->index_of("y") == 1);
    REQUIRE(u->find("w") == -1);
    REQUIRE_THROWS_AS(make_universe({}, 1), error);
    REQUIRE_THROWS_AS(make_universe({"x", "x"}, 1), error);
    REQUIRE_THROWS_AS(make_universe({"x"}, 0), error);
}

TEST_CASE("make_mset canonicalizes") {
    auto u = xyz4();
    Mset m = make_mset(u, {{"x", 4}, {"y", 3}, {"z", 0}});
    REQUIRE(m.str() == "{4/x,3/y}");
    REQUIRE(m.count("z") == 0);
    REQUIRE(m.support_size() == 2);

    REQUIRE(make_mset(u, {}).is_empty());
    REQUIRE(make_mset(u, {}).str() == "{}");

    auto small = make_universe({"x"}, 2);
    REQUIRE_THROWS_MATCHES(make_mset(small, {{"x", 3}}), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::count_exceeds_omega;
                           }));
    REQUIRE_THROWS_MATCHES(make_mset(u, {{"w", 1}}), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::unknown_element;
                           }));
}

TEST_CASE("union and intersection on the worked example") {
    auto u = xyz4();
    Mset m1 = make_mset(u, {{"x", 4}, {"y", 3}});
    Mset m2 = make_mset(u, {{"x", 2}, {"y", 3}});
    REQUIRE(mset_union(m1, m2) == make_mset(u, {{"x", 4}, {"y", 3}}));
    REQUIRE(mset_intersect(m1, m2) == make_mset(u, {{"x", 2}, {"y", 3}}));

    Mset empty = Mset::empty(u);
    REQUIRE(mset_union(m1, empty) == m1);
    REQUIRE(mset_intersect(m1, empty) == empty);

    auto u2 = make_universe({"x"}, 2);
    REQUIRE(mset_union(make_mset(u2, {{"x", 1}}), make_mset(u2, {{"x", 2}})) ==
            make_mset(u2, {{"x", 2}}));
    REQUIRE(mset_intersect(make_mset(u2, {{"x", 1}}), make_mset(u2, {{"x", 2}})) ==
            make_mset(u2, {{"x", 1}}));

    auto other = make_universe({"a", "b"}, 4);
    REQUIRE_THROWS_AS(mset_union(m1, Mset::empty(other)), error);
}

TEST_CASE("global complement") {
    auto u = xyz4();
    Mset m2 = make_mset(u, {{"x", 2}, {"y", 3}});
    REQUIRE(complement_global(m2) == make_mset(u, {{"x", 2}, {"y", 1}, {"z", 4}}));
    REQUIRE(complement_global(Mset::empty(u)) == full_mset(u));
    REQUIRE(complement_global(complement_global(m2)) == m2);
}

TEST_CASE("relative complement") {
    auto u = xyz4();
    Mset U = make_mset(u, {{"x", 4}, {"y", 3}, {"z", 2}});
    Mset m2 = make_mset(u, {{"x", 2}, {"y", 3}});
    REQUIRE(complement_relative(m2, U) == make_mset(u, {{"x", 2}, {"z", 2}}));
    REQUIRE(complement_relative(Mset::empty(u), U) == U);
    REQUIRE(complement_relative(U, U) == Mset::empty(u));
    // total even when m is not below the parent
    REQUIRE(complement_relative(full_mset(u), U) == Mset::empty(u));
}

TEST_CASE("submset order") {
    auto u = xyz4();
    Mset U = make_mset(u, {{"x", 4}, {"y", 3}, {"z", 2}});
    Mset m1 = make_mset(u, {{"x", 4}, {"y", 3}});
    Mset m2 = make_mset(u, {{"x", 2}, {"y", 3}});
    REQUIRE(is_submset(m2, U));
    REQUIRE(is_submset(Mset::empty(u), m1));
    REQUIRE_FALSE(is_submset(m1, m2));
}

TEST_CASE("full mset") {
    REQUIRE(full_mset(xyz4()).str() == "{4/x,4/y,4/z}");
    auto u1 = make_universe({"x"}, 1);
    REQUIRE(full_mset(u1).str() == "{1/x}");
    REQUIRE(complement_global(full_mset(u1)) == Mset::empty(u1));
}

TEST_CASE("submset enumeration: count, order, uniqueness") {
    auto u = xyz4();
    Mset U = make_mset(u, {{"x", 4}, {"y", 3}, {"z", 2}});
    REQUIRE(submset_count(U) == 60);
    auto subs = enumerate_submsets(U);
    REQUIRE(subs.size() == 60);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        REQUIRE(is_submset(subs[i], U));
        REQUIRE(submset_index(U, subs[i]) == i);
        REQUIRE(submset_at(U, i) == subs[i]);
        if (i > 0) REQUIRE(subs[i - 1] < subs[i]);  // strictly increasing: no duplicates
    }

    REQUIRE(enumerate_submsets(Mset::empty(u)).size() == 1);

    auto u1 = make_universe({"x"}, 2);
    auto chain = enumerate_submsets(make_mset(u1, {{"x", 1}}));
    REQUIRE(chain.size() == 2);
    REQUIRE(chain[0].is_empty());
    REQUIRE(chain[1] == make_mset(u1, {{"x", 1}}));
}

TEST_CASE("enumeration runs the last element fastest") {
    auto u = make_universe({"x", "y"}, 2);
    Mset parent = make_mset(u, {{"x", 1}, {"y", 2}});
    auto subs = enumerate_submsets(parent);
    std::vector<std::string> got;
    for (const auto& m : subs) got.push_back(m.str());
    REQUIRE(got == std::vector<std::string>{"{}", "{1/y}", "{2/y}", "{1/x}", "{1/x,1/y}",
                                            "{1/x,2/y}"});
}

TEST_CASE("lattice laws, exhaustively at desk scale") {
    for (int n = 1; n <= 2; ++n) {
        for (int omega = 1; omega <= 3; ++omega) {
            auto u = canonical_universe(n, omega);
            auto all = all_msets(u);
            Mset top = full_mset(u);
            Mset bot = Mset::empty(u);
            for (const auto& a : all) {
                REQUIRE(mset_union(a, bot) == a);
                REQUIRE(mset_intersect(a, top) == a);
                REQUIRE(mset_union(a, a) == a);
                REQUIRE(mset_intersect(a, a) == a);
                REQUIRE(complement_global(complement_global(a)) == a);
                for (const auto& b : all) {
                    REQUIRE(mset_union(a, b) == mset_union(b, a));
                    REQUIRE(mset_intersect(a, b) == mset_intersect(b, a));
                    REQUIRE(mset_intersect(a, mset_union(a, b)) == a);
                    REQUIRE(mset_union(a, mset_intersect(a, b)) == a);
                    // De Morgan, both directions
                    REQUIRE(complement_global(mset_union(a, b)) ==
                            mset_intersect(complement_global(a), complement_global(b)));
                    REQUIRE(complement_global(mset_intersect(a, b)) ==
                            mset_union(complement_global(a), complement_global(b)));
                    for (const auto& c : all) {
                        REQUIRE(mset_union(mset_union(a, b), c) ==
                                mset_union(a, mset_union(b, c)));
                        REQUIRE(mset_intersect(mset_intersect(a, b), c) ==
                                mset_intersect(a, mset_intersect(b, c)));
                    }
                }
            }
        }
    }
}

TEST_CASE("count-sum law for the relative complement") {
    for (int n = 1; n <= 2; ++n) {
        for (int omega = 1; omega <= 3; ++omega) {
            auto u = canonical_universe(n, omega);
            for (const auto& parent : all_msets(u)) {
                for (const auto& a : enumerate_submsets(parent)) {
                    Mset rest = complement_relative(a, parent);
                    for (int i = 0; i < u->size(); ++i)
                        REQUIRE(a.count(i) + rest.count(i) == parent.count(i));
                }
            }
        }
    }
}

TEST_CASE("lattice laws, randomized at |X|=5, omega=8") {
    auto u = canonical_universe(5, 8);
    std::mt19937_64 rng(20240817);
    for (int t = 0; t < 2000; ++t) {
        Mset a = rand_mset(u, rng), b = rand_mset(u, rng), c = rand_mset(u, rng);
        REQUIRE(mset_union(a, b) == mset_union(b, a));
        REQUIRE(mset_intersect(a, b) == mset_intersect(b, a));
        REQUIRE(mset_union(mset_union(a, b), c) == mset_union(a, mset_union(b, c)));
        REQUIRE(mset_intersect(mset_intersect(a, b), c) == mset_intersect(a, mset_intersect(b, c)));
        REQUIRE(mset_intersect(a, mset_union(a, b)) == a);
        REQUIRE(complement_global(complement_global(a)) == a);
        REQUIRE(complement_global(mset_union(a, b)) ==
                mset_intersect(complement_global(a), complement_global(b)));
    }
}
