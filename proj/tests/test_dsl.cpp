#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mtop/enumerate.hpp"
#include "mtop/eval.hpp"
#include "mtop/fmt.hpp"

using namespace mtop;
using namespace mtop::dsl;

namespace {

Env example1_env() {
    Env env;
    env.set_elements({"x", "y", "z"});
    env.set_omega(4);
    return env;
}

Value eval_line(const std::string& src, Env& env) {
    auto stmts = parse(src);
    std::optional<Value> last;
    for (const auto& s : stmts) {
        auto v = eval_stmt(s, env);
        if (v) last = v;
    }
    REQUIRE(last.has_value());
    return *last;
}

}  // namespace

TEST_CASE("parser shapes") {
    auto e = parse_expression("{4/x,3/y} | {2/x,3/y}");
    const auto* bin = std::get_if<Binary>(&e->node);
    REQUIRE(bin);
    REQUIRE(bin->op == '|');
    REQUIRE(std::holds_alternative<MsetLit>(bin->lhs->node));
    REQUIRE(std::holds_alternative<MsetLit>(bin->rhs->node));

    auto e2 = parse_expression("~a & b");
    const auto* amp = std::get_if<Binary>(&e2->node);
    REQUIRE(amp);
    REQUIRE(amp->op == '&');
    REQUIRE(std::holds_alternative<Unary>(amp->lhs->node));
    REQUIRE(std::holds_alternative<Name>(amp->rhs->node));
}

TEST_CASE("precedence and associativity") {
    REQUIRE(format(*parse_expression("a | b & c")) == "a | b & c");
    REQUIRE(format(*parse_expression("(a | b) & c")) == "(a | b) & c");
    REQUIRE(format(*parse_expression("a \\ b | c")) == "a \\ b | c");
    REQUIRE(format(*parse_expression("a \\ (b | c)")) == "a \\ (b | c)");
    REQUIRE(format(*parse_expression("a | b | c")) == "a | b | c");
    REQUIRE(format(*parse_expression("a | (b | c)")) == "a | (b | c)");
    REQUIRE(format(*parse_expression("~(a | b)")) == "~(a | b)");
    REQUIRE(format(*parse_expression("~a")) == "~a");
}

TEST_CASE("syntax errors carry position and expectations") {
    try {
        parse("{4/x 3/y}");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        REQUIRE(e.span().line == 1);
        REQUIRE(e.span().col == 6);
        bool mentions_comma = false;
        for (const auto& x : e.expected())
            if (x.find(',') != std::string::npos) mentions_comma = true;
        REQUIRE(mentions_comma);
    }
    REQUIRE_THROWS_AS(parse("#bogus 1"), SyntaxError);
    REQUIRE_THROWS_AS(parse("a |"), SyntaxError);
    REQUIRE_THROWS_AS(parse("{(x,1) (y,2)}"), SyntaxError);
    REQUIRE_THROWS_AS(parse("a b"), SyntaxError);

    // identical sources produce identical diagnostics
    std::string msg1, msg2;
    try {
        parse("{4/x 3/y}");
    } catch (const SyntaxError& e) {
        msg1 = e.what();
    }
    try {
        parse("{4/x 3/y}");
    } catch (const SyntaxError& e) {
        msg2 = e.what();
    }
    REQUIRE(msg1 == msg2);
    REQUIRE_FALSE(msg1.empty());
}

TEST_CASE("eval reproduces the worked example's values") {
    Env env = example1_env();
    Value v = eval_line("phi({4/x,3/y} | {2/x,3/y})", env);
    REQUIRE(v.pairset() == PairSet::from_names(env.uni, {{"x", 4}, {"y", 3}}));

    Value v2 = eval_line("phi({4/x,3/y}) | phi({2/x,3/y})", env);
    REQUIRE(v2.pairset() == PairSet::from_names(env.uni, {{"x", 4}, {"x", 2}, {"y", 3}}));

    Value v3 = eval_line("~{2/x,3/y}", env);
    REQUIRE(v3.mset() == make_mset(env.uni, {{"x", 2}, {"y", 1}, {"z", 4}}));

    Value v4 = eval_line("{4/x,3/y,2/z} \\ {2/x,3/y}", env);
    REQUIRE(v4.mset() == make_mset(env.uni, {{"x", 2}, {"z", 2}}));

    Value v5 = eval_line("compl(phi({2/x,3/y}), nat)", env);
    REQUIRE(v5.kind() == Kind::CofiniteV);

    Value v6 = eval_line("compl(phi({2/x,3/y}), grid)", env);
    REQUIRE(v6.pairset().size() == 10);

    Value v7 = eval_line("inv(phi({4/x,3/y}))", env);
    REQUIRE(v7.mset() == make_mset(env.uni, {{"x", 4}, {"y", 3}}));

    Value v8 = eval_line("psi({2/x})", env);
    REQUIRE(v8.pairset() == PairSet::from_names(env.uni, {{"x", 1}, {"x", 2}}));
}

TEST_CASE("check calls return reports") {
    Env env = example1_env();
    Value r1 = eval_line("check1({4/x,3/y}, {2/x,3/y}, {4/x,3/y,2/z})", env);
    REQUIRE(r1.kind() == Kind::ReportV);
    REQUIRE_FALSE(r1.report().holds);

    Value r3 = eval_line("check3({2/x,3/y}, {4/x,3/y,2/z}, {4/x,3/y,2/z})", env);
    REQUIRE_FALSE(r3.report().holds);
    REQUIRE(r3.report().spec.ambient == AmbientKind::PhiParent);

    Value r3g = eval_line("check3({2/x,3/y}, {4/x,3/y,2/z}, grid)", env);
    REQUIRE(r3g.report().spec.ambient == AmbientKind::Grid);

    Value r3rel = eval_line("check3({2/x,3/y}, {4/x,3/y,2/z}, nat, relative)", env);
    REQUIRE(r3rel.report().spec.lhs == LhsVariant::RelativeDelta);
    REQUIRE_FALSE(r3rel.report().holds);
}

TEST_CASE("kind errors and unbound names") {
    Env env = example1_env();
    REQUIRE_THROWS_MATCHES(eval_line("{1/x} & {(x,1)}", env), EvalError,
                           Catch::Matchers::Predicate<EvalError>([](const EvalError& e) {
                               return e.code() == errc::type_error;
                           }));
    REQUIRE_THROWS_MATCHES(eval_line("nope | {1/x}", env), EvalError,
                           Catch::Matchers::Predicate<EvalError>([](const EvalError& e) {
                               return e.code() == errc::unbound_identifier;
                           }));
    REQUIRE_THROWS_MATCHES(eval_line("~phi({1/x})", env), EvalError,
                           Catch::Matchers::Predicate<EvalError>([](const EvalError& e) {
                               return e.code() == errc::type_error;
                           }));

    Env bare;
    REQUIRE_THROWS_MATCHES(eval_line("{1/x}", bare), EvalError,
                           Catch::Matchers::Predicate<EvalError>([](const EvalError& e) {
                               return e.code() == errc::no_universe;
                           }));
}

TEST_CASE("the empty literal adapts to its context") {
    Env env = example1_env();
    REQUIRE(eval_line("{} | {1/x}", env).mset() == make_mset(env.uni, {{"x", 1}}));
    REQUIRE(eval_line("{(x,1)} | {}", env).pairset() ==
            PairSet::from_names(env.uni, {{"x", 1}}));
    REQUIRE(eval_line("phi({})", env).pairset().is_empty());
    Value standalone = resolve_empty(eval_line("{}", env), env, Span{});
    REQUIRE(standalone.kind() == Kind::MsetV);
    REQUIRE(standalone.mset().is_empty());
    REQUIRE(eval_line("~{}", env).mset() == full_mset(env.uni));
}

TEST_CASE("directives rebuild the universe and drop bindings") {
    Env env;
    auto run = [&](const std::string& s) {
        for (const auto& st : parse(s)) eval_stmt(st, env);
    };
    run("#elements x,y");
    REQUIRE_FALSE(env.uni);
    run("#omega 2");
    REQUIRE(env.uni);
    run("a = {1/x}");
    REQUIRE(env.bindings.count("a") == 1);
    run("#omega 3");
    REQUIRE(env.bindings.empty());
    REQUIRE(env.uni->omega() == 3);
    Env bad;
    REQUIRE_THROWS_AS(eval_line("#omega 0", bad), EvalError);
}

TEST_CASE("assignment binds and evaluation uses bindings") {
    Env env = example1_env();
    auto stmts = parse("M1 = {4/x,3/y}\nM2 = {2/x,3/y}\nM1 & M2");
    std::optional<Value> last;
    for (const auto& s : stmts) {
        auto v = eval_stmt(s, env);
        if (v) last = v;
    }
    REQUIRE(last.has_value());
    REQUIRE(last->mset() == make_mset(env.uni, {{"x", 2}, {"y", 3}}));
}

TEST_CASE("comments and blank lines are ignored") {
    Env env = example1_env();
    Value v = eval_line("-- leading comment\n\n{1/x} -- trailing\n", env);
    REQUIRE(v.mset() == make_mset(env.uni, {{"x", 1}}));
}

TEST_CASE("format of statements is stable under reparsing") {
    std::string src = "#elements x,y,z\n#omega 4\nM1 = {4/x,3/y}\nphi(M1) | phi(M1 & M1)\n";
    auto stmts = parse(src);
    std::string once;
    for (const auto& s : stmts) once += format(s) + "\n";
    auto again = parse(once);
    std::string twice;
    for (const auto& s : again) twice += format(s) + "\n";
    REQUIRE(once == twice);
}

TEST_CASE("canonical value text parses back to the value") {
    auto u = make_universe({"x", "y", "z"}, 4);
    Env env = example1_env();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(0, 4);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> counts = {d(rng), d(rng), d(rng)};
        Mset m(u, counts);
        Value back = eval_line(m.str(), env);
        REQUIRE(back.kind() == (m.is_empty() ? Kind::Empty : Kind::MsetV));
        if (!m.is_empty()) REQUIRE(back.mset() == m);

        PairSet p = phi(m);
        Value pback = eval_line(p.str(), env);
        if (!p.is_empty()) REQUIRE(pback.pairset() == p);
    }
}

namespace {

// Random expression generator that tracks the expected value through direct
// module calls, for the differential check.
struct DiffGen {
    UniversePtr u;
    std::mt19937_64 rng;

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    std::pair<std::string, Mset> mset_expr(int depth) {
        if (depth == 0 || pick(3) == 0) {
            std::vector<int> counts(static_cast<std::size_t>(u->size()));
            for (auto& c : counts) c = pick(u->omega() + 1);
            Mset m(u, counts);
            return {m.str(), m};
        }
        switch (pick(4)) {
            case 0: {
                auto [s, m] = mset_expr(depth - 1);
                return {"~(" + s + ")", complement_global(m)};
            }
            case 1: {
                auto [sa, a] = mset_expr(depth - 1);
                auto [sb, b] = mset_expr(depth - 1);
                return {"(" + sa + " | " + sb + ")", mset_union(a, b)};
            }
            case 2: {
                auto [sa, a] = mset_expr(depth - 1);
                auto [sb, b] = mset_expr(depth - 1);
                return {"(" + sa + " & " + sb + ")", mset_intersect(a, b)};
            }
            default: {
                auto [sa, a] = mset_expr(depth - 1);
                auto [sb, b] = mset_expr(depth - 1);
                return {"(" + sa + " \\ " + sb + ")", mset_difference(a, b)};
            }
        }
    }

    std::pair<std::string, PairSet> pair_expr(int depth) {
        if (depth == 0 || pick(3) == 0) {
            auto [s, m] = mset_expr(depth);
            return pick(2) == 0 ? std::pair{"phi(" + s + ")", phi(m)}
                                : std::pair{"psi(" + s + ")", psi_downset(m)};
        }
        auto [sa, a] = pair_expr(depth - 1);
        auto [sb, b] = pair_expr(depth - 1);
        switch (pick(3)) {
            case 0: return {"(" + sa + " | " + sb + ")", pair_union(a, b)};
            case 1: return {"(" + sa + " & " + sb + ")", pair_intersect(a, b)};
            default: return {"(" + sa + " \\ " + sb + ")", pair_difference(a, b)};
        }
    }
};

}  // namespace

TEST_CASE("operator evaluation agrees with direct module calls") {
    Env env;
    env.set_elements({"x", "y", "z"});
    env.set_omega(3);
    DiffGen gen{env.uni, std::mt19937_64(2024)};
    for (int t = 0; t < 300; ++t) {
        auto [src, expected] = gen.mset_expr(3);
        Env fresh = env;
        Value got = eval_line(src, fresh);
        REQUIRE(detail::to_mset(got, env.uni, Span{}) == expected);

        auto [psrc, pexpected] = gen.pair_expr(2);
        Value pgot = eval_line(psrc, fresh);
        REQUIRE(detail::to_pairset(pgot, env.uni, Span{}) == pexpected);
    }
}
