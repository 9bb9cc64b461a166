#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mtop/mtop.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBudget = 2;
constexpr int kExitWitness = 10;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct Options {
    std::string format = "text";
    bool unicode = false;
    bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) mtop::fail(mtop::errc::bad_input, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mtop::json read_json_file(const std::string& path) {
    try {
        return mtop::json::parse(read_file(path));
    } catch (const mtop::json::parse_error& e) {
        mtop::fail(mtop::errc::bad_input, path + ": " + e.what());
    }
}

mtop::json value_to_json(const mtop::dsl::Value& v) {
    using mtop::dsl::Kind;
    switch (v.kind()) {
        case Kind::MsetV: return mtop::mset_to_json(v.mset());
        case Kind::PairV: return mtop::pairset_to_json(v.pairset());
        case Kind::CofiniteV: return mtop::cofinite_to_json(v.cofinite());
        case Kind::ReportV: return mtop::report_to_json(v.report());
        case Kind::VerdictV: return mtop::verdict_to_json(v.verdict());
        case Kind::Empty: break;  // resolved before printing
    }
    return nullptr;
}

int run_example1(const Options& opt) {
    mtop::Example1Report rep = mtop::reproduce_example1();
    if (opt.json())
        std::cout << mtop::example1_to_json(rep).dump(2) << "\n";
    else
        std::cout << mtop::format_example1(rep, opt.unicode);
    return rep.all_match ? kExitOk : 1;
}

int run_script(const std::string& source, const Options& opt) {
    auto stmts = mtop::dsl::parse(source);
    mtop::dsl::Env env;
    mtop::json results = mtop::json::array();
    for (const auto& stmt : stmts) {
        auto value = mtop::dsl::eval_stmt(stmt, env);
        if (!value) continue;
        mtop::dsl::Value v = mtop::dsl::resolve_empty(*value, env, stmt.span);
        if (opt.json())
            results.push_back(
                mtop::json{{"stmt", mtop::dsl::format(stmt)}, {"value", value_to_json(v)}});
        else
            std::cout << mtop::format_value(v, opt.unicode) << "\n";
    }
    if (opt.json()) std::cout << results.dump(2) << "\n";
    return kExitOk;
}

int run_eval(const std::string& path, const Options& opt) {
    return run_script(read_file(path), opt);
}

void repl_env_dump(const mtop::dsl::Env& env, const Options& opt) {
    if (env.uni) {
        std::cout << "universe: X={";
        for (int i = 0; i < env.uni->size(); ++i)
            std::cout << (i ? "," : "") << env.uni->name(i);
        std::cout << "}, omega=" << env.uni->omega() << "\n";
    } else {
        std::cout << "universe: unset (use #elements and #omega)\n";
    }
    for (const auto& [name, value] : env.bindings)
        std::cout << name << " = " << mtop::format_value(value, opt.unicode) << "\n";
}

int run_repl(const Options& opt) {
    mtop::dsl::Env env;
    std::string line;
    auto run_line = [&](const std::string& text) {
        try {
            for (const auto& stmt : mtop::dsl::parse(text)) {
                auto value = mtop::dsl::eval_stmt(stmt, env);
                if (value) {
                    mtop::dsl::Value v = mtop::dsl::resolve_empty(*value, env, stmt.span);
                    std::cout << mtop::format_value(v, opt.unicode) << "\n";
                }
            }
        } catch (const mtop::error& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    };
    for (;;) {
        std::cout << "mtop> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line.rfind(":quit", 0) == 0) break;
        if (line.rfind(":env", 0) == 0) {
            repl_env_dump(env, opt);
            continue;
        }
        if (line.rfind(":load ", 0) == 0) {
            std::string path = line.substr(6);
            try {
                run_line(read_file(path));
            } catch (const mtop::error& e) {
                std::cout << "error: " << e.what() << "\n";
            }
            continue;
        }
        if (!line.empty() && line[0] == ':') {
            std::cout << "unknown command; available: :env, :load <file>, :quit\n";
            continue;
        }
        run_line(line);
    }
    return kExitOk;
}

int run_check(const mtop::IdentitySpec& spec, bool spec_from_flags, const std::string& data_path,
              const Options& opt) {
    mtop::CheckInput input = mtop::check_input_from_json(read_json_file(data_path));
    mtop::IdentitySpec effective = spec;
    if (!spec_from_flags && input.spec) effective = *input.spec;
    mtop::IdentityReport rep =
        mtop::check_identity(effective, input.m1, input.m2, input.parent);
    if (opt.json())
        std::cout << mtop::report_to_json(rep).dump(2) << "\n";
    else
        std::cout << mtop::format_report(rep, opt.unicode) << "\n";
    return kExitOk;
}

int run_search_identity(const mtop::IdentitySpec& spec, const mtop::SearchBounds& bounds,
                        const Options& opt) {
    auto witness = mtop::search_min_counterexample(spec, bounds);
    if (opt.json()) {
        mtop::json j{{"witness", witness ? mtop::identity_witness_to_json(*witness)
                                         : mtop::json(nullptr)}};
        std::cout << j.dump(2) << "\n";
    } else if (witness) {
        std::cout << mtop::format_identity_witness(*witness, opt.unicode) << "\n";
    } else {
        std::cout << "no counterexample within bounds\n";
    }
    return witness ? kExitWitness : kExitOk;
}

int run_search_topology(const mtop::SearchBounds& bounds, const Options& opt) {
    auto witness = mtop::search_topology_counterexample(bounds);
    if (opt.json()) {
        mtop::json j{{"witness", witness ? mtop::topology_witness_to_json(*witness)
                                         : mtop::json(nullptr)}};
        std::cout << j.dump(2) << "\n";
    } else if (witness) {
        std::cout << mtop::format_topology_witness(*witness, opt.unicode) << "\n";
    } else {
        std::cout << "no counterexample within bounds\n";
    }
    return witness ? kExitWitness : kExitOk;
}

int run_check_topology(const std::string& path, const Options& opt) {
    mtop::MFamily fam = mtop::family_input_from_json(read_json_file(path));
    mtop::Verdict mv = mtop::is_m_topology(fam);
    mtop::PairFamily img = mtop::image_family(fam);
    mtop::Verdict iv = mtop::is_point_topology(img);
    if (opt.json()) {
        mtop::json j{{"family", mtop::family_to_json(fam)},
                     {"m_topology", mtop::verdict_to_json(mv)},
                     {"image_family", mtop::pair_family_to_json(img)},
                     {"image", mtop::verdict_to_json(iv)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "M-topology: " << mtop::format_verdict(mv, opt.unicode) << "\n";
        std::cout << "image:      " << mtop::format_verdict(iv, opt.unicode) << "\n";
    }
    return kExitOk;
}

int run_enumerate(const std::string& path, const Options& opt) {
    mtop::Mset parent = mtop::mset_from_json(read_json_file(path));
    mtop::for_each_submset(parent, [&](const mtop::Mset& m) {
        if (opt.json())
            std::cout << mtop::mset_to_json(m).dump() << "\n";
        else
            std::cout << mtop::format_mset(m, opt.unicode) << "\n";
    });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded multiset algebra workbench: embedding identity checks,\n"
                 "topology axiom verdicts, and minimal counterexample search"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--unicode", opt.unicode, "use unicode glyphs in text output");

    auto* cmd_example1 =
        app.add_subcommand("example1", "reproduce the worked example and its fixtures");

    std::string eval_path;
    auto* cmd_eval = app.add_subcommand("eval", "run a script file");
    cmd_eval->add_option("file", eval_path, "script file")->required();

    auto* cmd_repl = app.add_subcommand("repl", "interactive prompt");

    int check_identity_n = 0;
    std::string check_lhs = "global", check_ambient = "phiFull", check_data;
    auto* cmd_check = app.add_subcommand("check", "replay an identity check on given data");
    auto* check_id_opt =
        cmd_check->add_option("--identity", check_identity_n, "identity to check (1, 2 or 3)")
            ->check(CLI::Range(1, 3));
    auto* check_lhs_opt = cmd_check->add_option("--lhs", check_lhs, "complement variant for (3)")
                              ->check(CLI::IsMember({"global", "relative"}));
    auto* check_amb_opt =
        cmd_check->add_option("--ambient", check_ambient, "ambient for (3)")
            ->check(CLI::IsMember({"phiU", "phiFull", "grid", "nat"}));
    cmd_check->add_option("--data", check_data, "JSON file with parent, m1 and optional m2")
        ->required();

    int search_identity_n = 0;
    bool search_topology = false;
    std::string search_lhs = "global", search_ambient = "phiFull";
    int max_elems = 1, max_omega = 1, jobs = 1;
    bool exhaustive = false;
    std::uint64_t seed = 0, trials = 0, budget = mtop::kDefaultBudget;
    bool seed_given = false;
    auto* cmd_search =
        app.add_subcommand("search", "hunt for the minimal counterexample within bounds");
    auto* search_id_opt =
        cmd_search->add_option("--identity", search_identity_n, "identity to refute (1, 2 or 3)")
            ->check(CLI::Range(1, 3));
    cmd_search->add_flag("--topology", search_topology,
                         "search for an M-topology whose image is not a topology");
    cmd_search->add_option("--lhs", search_lhs, "complement variant for (3)")
        ->check(CLI::IsMember({"global", "relative"}));
    cmd_search->add_option("--ambient", search_ambient, "ambient for (3)")
        ->check(CLI::IsMember({"phiU", "phiFull", "grid", "nat"}));
    cmd_search->add_option("--max-elems", max_elems, "largest |X| to try")->required();
    cmd_search->add_option("--max-omega", max_omega, "largest omega to try")->required();
    cmd_search->add_flag("--exhaustive", exhaustive, "scan the full enumeration order");
    auto* seed_opt = cmd_search->add_option("--seed", seed, "randomized mode seed");
    cmd_search->add_option("--trials", trials, "randomized mode sample count");
    cmd_search->add_option("--budget", budget, "candidate budget per block")
        ->capture_default_str();
    cmd_search->add_option("--jobs", jobs, "parallel workers for the exhaustive scan");

    std::string topo_path;
    auto* cmd_check_topo =
        app.add_subcommand("check-topology", "verdicts for a family and its image");
    cmd_check_topo->add_option("file", topo_path, "family or witness JSON")->required();

    std::string enum_path;
    auto* cmd_enum = app.add_subcommand("enumerate", "stream all submsets of a parent");
    cmd_enum->add_option("file", enum_path, "parent mset JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    auto spec_from_flags = [](int n, const std::string& lhs, const std::string& ambient) {
        mtop::IdentitySpec s;
        s.kind = static_cast<mtop::IdentityKind>(n);
        s.lhs = lhs == "relative" ? mtop::LhsVariant::RelativeDelta : mtop::LhsVariant::GlobalDelta;
        s.ambient = ambient == "phiU"                  ? mtop::AmbientKind::PhiParent
                    : ambient == "grid"                ? mtop::AmbientKind::Grid
                    : ambient == "nat"                 ? mtop::AmbientKind::Nat
                                                       : mtop::AmbientKind::PhiFull;
        return s;
    };

    try {
        if (cmd_example1->parsed()) return run_example1(opt);
        if (cmd_eval->parsed()) return run_eval(eval_path, opt);
        if (cmd_repl->parsed()) return run_repl(opt);
        if (cmd_check->parsed()) {
            bool flags_given = check_id_opt->count() > 0;
            mtop::IdentitySpec spec = spec_from_flags(
                check_identity_n == 0 ? 1 : check_identity_n, check_lhs, check_ambient);
            (void)check_lhs_opt;
            (void)check_amb_opt;
            return run_check(spec, flags_given, check_data, opt);
        }
        if (cmd_search->parsed()) {
            if (search_topology == (search_id_opt->count() > 0)) {
                std::cerr << "search needs exactly one of --identity or --topology\n";
                return kExitUsage;
            }
            seed_given = seed_opt->count() > 0;
            mtop::SearchBounds bounds;
            bounds.max_elements = max_elems;
            bounds.max_omega = max_omega;
            bounds.budget = budget;
            bounds.jobs = jobs;
            bool randomized = !exhaustive && (seed_given || trials > 0);
            bounds.mode = randomized ? mtop::SearchMode::Randomized : mtop::SearchMode::Exhaustive;
            if (randomized) {
                bounds.trials = trials == 0 ? 10000 : trials;
                if (seed_given) {
                    bounds.seed = seed;
                } else if (const char* env_seed = std::getenv("MTOP_SEED")) {
                    bounds.seed = std::strtoull(env_seed, nullptr, 10);
                }
            }
            if (search_topology) return run_search_topology(bounds, opt);
            return run_search_identity(
                spec_from_flags(search_identity_n, search_lhs, search_ambient), bounds, opt);
        }
        if (cmd_check_topo->parsed()) return run_check_topology(topo_path, opt);
        if (cmd_enum->parsed()) return run_enumerate(enum_path, opt);
    } catch (const mtop::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == mtop::errc::budget_exceeded ? kExitBudget : kExitData;
    }
    return kExitOk;
}
