#pragma once

#include <string>

#include "mtop/eval.hpp"
#include "mtop/example1.hpp"
#include "mtop/identity.hpp"
#include "mtop/search.hpp"
#include "mtop/topology.hpp"

// Human-readable rendering. The canonical str() forms are pure ASCII; the
// unicode flag swaps in the usual glyphs for display only.
namespace mtop {

inline std::string format_mset(const Mset& m, bool unicode) {
    if (unicode && m.is_empty()) return "∅";
    return m.str();
}

inline std::string format_pairset(const PairSet& p, bool unicode) {
    if (unicode && p.is_empty()) return "∅";
    return p.str();
}

inline std::string format_cofinite(const CofinitePairSet& c, bool unicode) {
    if (unicode) return "X×ℕ ∖ " + format_pairset(c.excluded(), unicode);
    return c.str();
}

inline std::string format_pair_or_cofinite(const PairOrCofinite& v, bool unicode) {
    if (const auto* p = std::get_if<PairSet>(&v)) return format_pairset(*p, unicode);
    return format_cofinite(std::get<CofinitePairSet>(v), unicode);
}

inline std::string format_alg_value(const AlgValue& v, bool unicode) {
    if (const auto* m = std::get_if<Mset>(&v)) return format_mset(*m, unicode);
    if (const auto* p = std::get_if<PairSet>(&v)) return format_pairset(*p, unicode);
    return format_cofinite(std::get<CofinitePairSet>(v), unicode);
}

inline std::string identity_label(const IdentitySpec& s, bool unicode) {
    switch (s.kind) {
        case IdentityKind::Union1:
            return unicode ? "(1) φ(M⊔N) = φ(M)∪φ(N)"
                           : "(1) phi(M | N) = phi(M) | phi(N)";
        case IdentityKind::Intersect2:
            return unicode ? "(2) φ(M⊓N) = φ(M)∩φ(N)"
                           : "(2) phi(M & N) = phi(M) & phi(N)";
        case IdentityKind::Complement3: {
            std::string lhs = s.lhs == LhsVariant::GlobalDelta
                                  ? (unicode ? "φ(M^Δ)" : "phi(~M)")
                                  : (unicode ? "φ((M^Δ)_U)" : "phi(U \\ M)");
            std::string amb = ambient_name(s.ambient);
            return "(3) " + lhs + (unicode ? " = φ(M)^c  [ambient " : " = compl(phi(M))  [ambient ") +
                   amb + "]";
        }
    }
    return "?";
}

inline std::string format_report(const IdentityReport& r, bool unicode) {
    std::string out = "identity " + identity_label(r.spec, unicode) + ": ";
    out += r.holds ? "holds" : "FAILS";
    out += "\n  parent = " + format_mset(r.parent, unicode);
    out += "\n  M      = " + format_mset(r.m1, unicode);
    if (r.m2) out += "\n  N      = " + format_mset(*r.m2, unicode);
    out += "\n  lhs    = " + format_pairset(r.lhs, unicode);
    out += "\n  rhs    = " + format_pair_or_cofinite(r.rhs, unicode);
    if (r.first_difference) {
        out += "\n  first difference: (" + r.parent.universe()->name(r.first_difference->first) +
               "," + std::to_string(r.first_difference->second) + ")";
    }
    return out;
}

inline std::string format_verdict(const Verdict& v, bool unicode) {
    (void)unicode;
    if (v.holds) return "holds";
    std::string out = "FAILS: " + v.violation->axiom;
    if (!v.violation->members.empty()) {
        out += "  members:";
        for (const auto& m : v.violation->members) out += " " + m;
    }
    if (!v.violation->computed.empty()) out += "  computed: " + v.violation->computed;
    return out;
}

inline std::string format_value(const dsl::Value& v, bool unicode) {
    switch (v.kind()) {
        case dsl::Kind::Empty: return unicode ? "∅" : "{}";
        case dsl::Kind::MsetV: return format_mset(v.mset(), unicode);
        case dsl::Kind::PairV: return format_pairset(v.pairset(), unicode);
        case dsl::Kind::CofiniteV: return format_cofinite(v.cofinite(), unicode);
        case dsl::Kind::ReportV: return format_report(v.report(), unicode);
        case dsl::Kind::VerdictV: return format_verdict(v.verdict(), unicode);
    }
    return "?";
}

inline std::string format_identity_witness(const IdentityWitness& w, bool unicode) {
    std::string out = "counterexample found (order key " + std::to_string(w.order_key) + ")\n";
    out += "  universe: X={";
    const auto& u = w.parent.universe();
    for (int i = 0; i < u->size(); ++i) out += (i ? "," : "") + u->name(i);
    out += "}, omega=" + std::to_string(u->omega()) + "\n";
    out += format_report(w.report, unicode);
    return out;
}

inline std::string format_topology_witness(const TopologyWitness& w, bool unicode) {
    std::string out = "counterexample found (order key " + std::to_string(w.order_key) + ")\n";
    out += "  parent: " + format_mset(w.family.parent(), unicode) + "\n  family:";
    for (const auto& m : w.family.members()) out += " " + format_mset(m, unicode);
    out += "\n  M-topology verdict: " + format_verdict(w.m_verdict, unicode);
    out += "\n  image family:";
    PairFamily img = image_family(w.family);
    for (const auto& p : img.members()) out += " " + format_pairset(p, unicode);
    out += "\n  carrier: " + format_pairset(img.carrier(), unicode);
    out += "\n  image verdict: " + format_verdict(w.image_verdict, unicode);
    return out;
}

inline std::string format_example1(const Example1Report& rep, bool unicode) {
    std::string out = "Worked example over X={x,y,z}, omega=4\n";
    out += "  U  = " + format_mset(rep.space, unicode) + "\n";
    out += "  V  = " + format_mset(rep.top, unicode) + "\n";
    out += "  M1 = " + format_mset(rep.m1, unicode) + "\n";
    out += "  M2 = " + format_mset(rep.m2, unicode) + "\n\n";
    std::size_t width = 0;
    for (const auto& v : rep.values) width = std::max(width, v.name.size());
    for (const auto& v : rep.values) {
        out += "  " + v.name + std::string(width - v.name.size(), ' ') + " = ";
        out += format_alg_value(v.computed, unicode);
        out += v.match ? "  [ok]" : "  [MISMATCH, expected " + format_alg_value(v.expected, unicode) + "]";
        out += "\n";
    }
    out += "\n";
    int failing = 0;
    for (const auto& r : rep.identities) {
        out += "  " + identity_label(r.spec, unicode) + ": ";
        out += r.holds ? "holds [unexpected]" : "fails [as expected]";
        if (r.first_difference) {
            out += "  first difference: (" +
                   r.parent.universe()->name(r.first_difference->first) + "," +
                   std::to_string(r.first_difference->second) + ")";
        }
        out += "\n";
        if (!r.holds) ++failing;
    }
    out += "\n";
    out += rep.all_match
               ? "All values match the expected fixtures; all " + std::to_string(failing) +
                     " identity checks fail, as they should.\n"
               : "MISMATCH against the expected fixtures.\n";
    return out;
}

}  // namespace mtop
