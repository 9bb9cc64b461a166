#pragma once

#include <map>
#include <optional>

#include "mtop/dsl.hpp"
#include "mtop/identity.hpp"
#include "mtop/topology.hpp"

namespace mtop::dsl {

enum class Kind { Empty, MsetV, PairV, CofiniteV, ReportV, VerdictV };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Empty: return "empty";
        case Kind::MsetV: return "MSET";
        case Kind::PairV: return "PAIRSET";
        case Kind::CofiniteV: return "COFINITE";
        case Kind::ReportV: return "REPORT";
        case Kind::VerdictV: return "VERDICT";
    }
    return "?";
}

// Runtime value. The empty literal `{}` stays kind-polymorphic until an
// operation or a known-kind operand pins it down; left standalone it
// defaults to the empty mset.
struct Value {
    std::variant<std::monostate, Mset, PairSet, CofinitePairSet, IdentityReport, Verdict> v;

    Kind kind() const { return static_cast<Kind>(v.index()); }
    bool is(Kind k) const { return kind() == k; }

    const Mset& mset() const { return std::get<Mset>(v); }
    const PairSet& pairset() const { return std::get<PairSet>(v); }
    const CofinitePairSet& cofinite() const { return std::get<CofinitePairSet>(v); }
    const IdentityReport& report() const { return std::get<IdentityReport>(v); }
    const Verdict& verdict() const { return std::get<Verdict>(v); }
};

// Evaluation environment: the current universe (from directives) and the
// bindings. Changing either directive invalidates stored counts, so both
// reset the bindings.
struct Env {
    std::optional<std::vector<std::string>> elements;
    std::optional<int> omega;
    UniversePtr uni;
    std::map<std::string, Value> bindings;

    void set_elements(std::vector<std::string> names) {
        elements = std::move(names);
        rebuild();
    }
    void set_omega(int w) {
        omega = w;
        rebuild();
    }
    void rebuild() {
        bindings.clear();
        uni = (elements && omega) ? make_universe(*elements, *omega) : nullptr;
    }

    UniversePtr require_universe(Span sp) const {
        if (!uni)
            throw EvalError(errc::no_universe, sp,
                            "no universe: set #elements and #omega first");
        return uni;
    }
};

namespace detail {

inline Mset to_mset(const Value& val, const UniversePtr& u, Span sp) {
    if (val.is(Kind::MsetV)) return val.mset();
    if (val.is(Kind::Empty)) return Mset::empty(u);
    throw EvalError(errc::type_error, sp,
                    std::string("expected an mset, got ") + kind_name(val.kind()));
}

inline PairSet to_pairset(const Value& val, const UniversePtr& u, Span sp) {
    if (val.is(Kind::PairV)) return val.pairset();
    if (val.is(Kind::Empty)) return PairSet(u);
    throw EvalError(errc::type_error, sp,
                    std::string("expected a pair set, got ") + kind_name(val.kind()));
}

}  // namespace detail

inline Value eval_expr(const Expr& e, Env& env);

namespace detail {

// Ambient argument of compl/check3: the bare names grid/nat/full are
// reserved readings, anything else must evaluate to an mset.
inline AmbientSpec ambient_arg(const Expr& arg, Env& env) {
    if (const auto* n = std::get_if<Name>(&arg.node)) {
        if (n->id == "grid") return FiniteGrid{};
        if (n->id == "nat") return NatGrid{};
        if (n->id == "full") return PhiOf{full_mset(env.require_universe(arg.span))};
    }
    Value v = eval_expr(arg, env);
    return PhiOf{to_mset(v, env.require_universe(arg.span), arg.span)};
}

inline AmbientKind ambient_kind_arg(const Expr& arg, Env& env, const Mset& parent) {
    if (const auto* n = std::get_if<Name>(&arg.node)) {
        if (n->id == "grid") return AmbientKind::Grid;
        if (n->id == "nat") return AmbientKind::Nat;
        if (n->id == "full") return AmbientKind::PhiFull;
    }
    Value v = eval_expr(arg, env);
    Mset m = to_mset(v, env.require_universe(arg.span), arg.span);
    if (m == parent) return AmbientKind::PhiParent;
    if (m == full_mset(m.universe())) return AmbientKind::PhiFull;
    throw EvalError(errc::type_error, arg.span,
                    "ambient must be grid, nat, the parent, or the full mset");
}

inline void need_args(const Call& c, Span sp, std::size_t lo, std::size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi) {
        std::string arity = lo == hi ? std::to_string(lo)
                                     : std::to_string(lo) + ".." + std::to_string(hi);
        throw EvalError(errc::type_error, sp,
                        c.name + " takes " + arity + " argument(s), got " +
                            std::to_string(c.args.size()));
    }
}

inline Value eval_call(const Call& c, Span sp, Env& env) {
    auto mset_arg = [&](std::size_t i) {
        Value v = eval_expr(*c.args[i], env);
        return to_mset(v, env.require_universe(c.args[i]->span), c.args[i]->span);
    };
    auto pair_arg = [&](std::size_t i) {
        Value v = eval_expr(*c.args[i], env);
        return to_pairset(v, env.require_universe(c.args[i]->span), c.args[i]->span);
    };
    if (c.name == "phi") {
        need_args(c, sp, 1, 1);
        return Value{phi(mset_arg(0))};
    }
    if (c.name == "psi") {
        need_args(c, sp, 1, 1);
        return Value{psi_downset(mset_arg(0))};
    }
    if (c.name == "inv") {
        need_args(c, sp, 1, 1);
        return Value{phi_inverse(pair_arg(0))};
    }
    if (c.name == "compl") {
        need_args(c, sp, 2, 2);
        PairSet p = pair_arg(0);
        AmbientSpec amb = ambient_arg(*c.args[1], env);
        PairOrCofinite r = complement_in(p, amb);
        if (auto* fin = std::get_if<PairSet>(&r)) return Value{std::move(*fin)};
        return Value{std::get<CofinitePairSet>(std::move(r))};
    }
    if (c.name == "check1" || c.name == "check2") {
        need_args(c, sp, 3, 3);
        IdentitySpec spec{c.name == "check1" ? IdentityKind::Union1 : IdentityKind::Intersect2};
        Mset m1 = mset_arg(0), m2 = mset_arg(1), parent = mset_arg(2);
        return Value{check_identity(spec, m1, m2, parent)};
    }
    if (c.name == "check3") {
        need_args(c, sp, 2, 4);
        Mset m = mset_arg(0), parent = mset_arg(1);
        IdentitySpec spec{IdentityKind::Complement3, LhsVariant::GlobalDelta,
                          AmbientKind::PhiFull};
        if (c.args.size() >= 3) spec.ambient = ambient_kind_arg(*c.args[2], env, parent);
        if (c.args.size() == 4) {
            const auto* n = std::get_if<Name>(&c.args[3]->node);
            if (n && n->id == "relative")
                spec.lhs = LhsVariant::RelativeDelta;
            else if (n && n->id == "global")
                spec.lhs = LhsVariant::GlobalDelta;
            else
                throw EvalError(errc::type_error, c.args[3]->span,
                                "the complement variant must be global or relative");
        }
        return Value{check_identity(spec, m, std::nullopt, parent)};
    }
    throw EvalError(errc::unbound_identifier, sp, "unknown function: " + c.name);
}

}  // namespace detail

inline Value eval_expr(const Expr& e, Env& env) {
    struct V {
        Env& env;
        Span sp;

        Value operator()(const MsetLit& lit) const {
            auto u = env.require_universe(sp);
            std::map<std::string, int> raw;
            for (const auto& [count, name] : lit.items) {
                if (count > u->omega())
                    throw EvalError(errc::count_exceeds_omega, sp,
                                    "count " + std::to_string(count) + " for " + name +
                                        " exceeds omega " + std::to_string(u->omega()));
                auto [it, fresh] = raw.emplace(name, static_cast<int>(count));
                if (!fresh)
                    throw EvalError(errc::bad_input, sp,
                                    "element " + name + " appears twice in the literal");
            }
            return Value{make_mset(u, raw)};
        }
        Value operator()(const PairLit& lit) const {
            auto u = env.require_universe(sp);
            std::vector<std::pair<std::string, int>> named;
            for (const auto& [name, k] : lit.items) {
                if (k < 1)
                    throw EvalError(errc::bad_input, sp, "pair integers must be >= 1");
                named.emplace_back(name, static_cast<int>(k));
            }
            return Value{PairSet::from_names(u, named)};
        }
        Value operator()(const EmptyLit&) const { return Value{std::monostate{}}; }
        Value operator()(const Name& n) const {
            auto it = env.bindings.find(n.id);
            if (it == env.bindings.end())
                throw EvalError(errc::unbound_identifier, sp, "unbound identifier: " + n.id);
            return it->second;
        }
        Value operator()(const Unary& u) const {
            Value child = eval_expr(*u.child, env);
            auto uni = env.require_universe(sp);
            return Value{complement_global(detail::to_mset(child, uni, u.child->span))};
        }
        Value operator()(const Binary& b) const {
            Value lhs = eval_expr(*b.lhs, env);
            Value rhs = eval_expr(*b.rhs, env);
            Kind lk = lhs.kind(), rk = rhs.kind();
            // resolve the polymorphic empty literal against the other side
            Kind k = lk;
            if (lk == Kind::Empty) k = rk == Kind::Empty ? Kind::MsetV : rk;
            if (k == Kind::MsetV && (rk == Kind::MsetV || rk == Kind::Empty) &&
                (lk == Kind::MsetV || lk == Kind::Empty)) {
                auto uni = env.require_universe(sp);
                Mset a = detail::to_mset(lhs, uni, b.lhs->span);
                Mset c = detail::to_mset(rhs, uni, b.rhs->span);
                switch (b.op) {
                    case '|': return Value{mset_union(a, c)};
                    case '&': return Value{mset_intersect(a, c)};
                    default: return Value{mset_difference(a, c)};
                }
            }
            if (k == Kind::PairV && (rk == Kind::PairV || rk == Kind::Empty) &&
                (lk == Kind::PairV || lk == Kind::Empty)) {
                auto uni = env.require_universe(sp);
                PairSet a = detail::to_pairset(lhs, uni, b.lhs->span);
                PairSet c = detail::to_pairset(rhs, uni, b.rhs->span);
                switch (b.op) {
                    case '|': return Value{pair_union(a, c)};
                    case '&': return Value{pair_intersect(a, c)};
                    default: return Value{pair_difference(a, c)};
                }
            }
            throw EvalError(errc::type_error, sp,
                            std::string("operator '") + b.op + "' needs two msets or two pair sets, got " +
                                kind_name(lk) + " and " + kind_name(rk));
        }
        Value operator()(const Call& c) const { return detail::eval_call(c, sp, env); }
    };
    try {
        return std::visit(V{env, e.span}, e.node);
    } catch (const EvalError&) {
        throw;
    } catch (const error& err) {
        // surface module errors with the source location attached
        throw EvalError(err.code(), e.span, err.what());
    }
}

// Pins a still-polymorphic empty literal down to the empty mset, the default
// reading for a standalone `{}`.
inline Value resolve_empty(Value v, const Env& env, Span sp) {
    if (v.is(Kind::Empty)) return Value{Mset::empty(env.require_universe(sp))};
    return v;
}

// Directives and assignments yield no value; expression statements do.
inline std::optional<Value> eval_stmt(const Stmt& s, Env& env) {
    struct V {
        Env& env;
        Span sp;

        std::optional<Value> operator()(const DirectiveElements& d) const {
            env.set_elements(d.names);
            return std::nullopt;
        }
        std::optional<Value> operator()(const DirectiveOmega& d) const {
            if (d.omega < 1) throw EvalError(errc::bad_input, sp, "omega must be >= 1");
            env.set_omega(static_cast<int>(d.omega));
            return std::nullopt;
        }
        std::optional<Value> operator()(const Assign& a) const {
            env.bindings[a.name] = eval_expr(*a.value, env);
            return std::nullopt;
        }
        std::optional<Value> operator()(const ExprStmt& e) const {
            return eval_expr(*e.value, env);
        }
    };
    try {
        return std::visit(V{env, s.span}, s.node);
    } catch (const EvalError&) {
        throw;
    } catch (const error& err) {
        throw EvalError(err.code(), s.span, err.what());
    }
}

}  // namespace mtop::dsl
