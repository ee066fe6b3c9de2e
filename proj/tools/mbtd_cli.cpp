#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbtd/harness.hpp"

namespace {

using nlohmann::json;
using namespace mbtd;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // verification/property failure
constexpr int kExitUsage = 2;     // usage or parse error
constexpr int kExitResource = 3;  // solve cap or budget breached

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw ParseError("cannot open input file " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

GameVariant parse_variant(const std::string& s) {
    if (s == "mbd")
        return GameVariant::MBD;
    if (s == "mbtd")
        return GameVariant::MBTD;
    throw CLI::ValidationError("--game must be mbd or mbtd");
}

Role parse_role(const std::string& s, const char* flag) {
    if (s == "dominator")
        return Role::Dominator;
    if (s == "staller")
        return Role::Staller;
    throw CLI::ValidationError(std::string(flag) + " must be dominator or staller");
}

int default_budget_secs() {
    if (const char* env = std::getenv("MBTD_BUDGET_SECS"))
        return std::atoi(env);
    return 120;
}

struct CommonFlags {
    int threads = 1;
    int budget_secs = default_budget_secs();
    bool json_out = false;

    void attach(CLI::App* cmd, bool with_json = true) {
        cmd->add_option("--threads", threads, "Worker threads for root-move splitting");
        cmd->add_option("--budget-secs", budget_secs,
                        "Per-instance wall-clock budget (0 = unlimited)");
        if (with_json)
            cmd->add_flag("--json", json_out, "Emit a JSON report");
    }

    SolverOptions solver() const {
        SolverOptions opts;
        opts.threads = threads;
        if (budget_secs > 0)
            opts.budget = std::chrono::seconds(budget_secs);
        return opts;
    }
};

LabeledGraph make_family(const std::string& family, int k, int l, int n) {
    std::string f;
    for (char c : family)
        if (c != '_' && c != '-')
            f.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto need = [&](int value, const char* flag) {
        if (value < 0)
            throw ParameterError(std::string("family ") + family + " requires " + flag);
        return value;
    };
    if (f == "gl")
        return gen_Gl(need(l, "--l"));
    if (f == "glprime")
        return gen_Gl_prime(need(l, "--l"));
    if (f == "gldoubleprime")
        return gen_Gl_double_prime(need(l, "--l"));
    if (f == "gkn")
        return gen_Gkn(need(k, "--k"), need(n, "--n"));
    if (f == "hkn")
        return gen_Hkn(need(k, "--k"), need(n, "--n"));
    if (f == "g2l")
        return gen_G2l(need(l, "--l"));
    if (f == "gkl")
        return gen_Gkl(need(k, "--k"), need(l, "--l"));
    if (f == "h2l")
        return gen_H2l(need(l, "--l"));
    if (f == "hkl")
        return gen_Hkl(need(k, "--k"), need(l, "--l"));
    if (f == "fkl")
        return gen_Fkl(need(k, "--k"), need(l, "--l"));
    if (f == "path")
        return {gen_basic(BasicFamily::Path, need(n, "--n")), {}};
    if (f == "cycle")
        return {gen_basic(BasicFamily::Cycle, need(n, "--n")), {}};
    if (f == "complete")
        return {gen_basic(BasicFamily::Complete, need(n, "--n")), {}};
    if (f == "completeminusedge")
        return {gen_basic(BasicFamily::CompleteMinusEdge, need(n, "--n")), {}};
    throw ParameterError("unknown family \"" + family + "\"");
}

void print_verify_summary(const harness::VerificationReport& report, std::ostream& out) {
    for (const auto& r : report.instances)
        out << (r.pass ? "[pass] " : "[FAIL] ") << r.graph << " " << r.invariant
            << ": expected " << r.expected.to_string() << ", got " << r.computed.to_string()
            << " (nodes=" << r.nodes << ", ms=" << r.millis << ")\n";
    out << "theorem " << report.theorem << ": " << (report.pass ? "PASS" : "FAIL") << " ("
        << report.instances.size() << " checks)\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact solver for Maker-Breaker (total) domination games"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Compute one game invariant on a graph");
    std::string input = "-", game = "mbtd", scored = "dominator", start = "dominator";
    int solve_cap = 16;
    CommonFlags solve_flags;
    solve_cmd->add_option("--input", input, "Edge-list file, or - for stdin");
    solve_cmd->add_option("--game", game, "mbd or mbtd");
    solve_cmd->add_option("--scored", scored, "dominator or staller");
    solve_cmd->add_option("--start", start, "dominator or staller");
    solve_cmd->add_option("--solve-cap", solve_cap, "Refuse graphs above this order");
    solve_flags.attach(solve_cmd, /*with_json=*/false);

    // outcome
    auto* outcome_cmd = app.add_subcommand("outcome", "Classify the game outcome (D/S/N)");
    std::string o_input = "-", o_game = "mbtd";
    int o_cap = 16;
    CommonFlags outcome_flags;
    outcome_cmd->add_option("--input", o_input, "Edge-list file, or - for stdin");
    outcome_cmd->add_option("--game", o_game, "mbd or mbtd");
    outcome_cmd->add_option("--solve-cap", o_cap, "Refuse graphs above this order");
    outcome_flags.attach(outcome_cmd, /*with_json=*/false);

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Generate a named graph family");
    std::string family;
    int c_k = -1, c_l = -1, c_n = -1;
    construct_cmd->add_option("--family", family, "Family name (Gl, GlPrime, ..., Fkl, Cycle)")
        ->required();
    construct_cmd->add_option("--k", c_k, "Parameter k");
    construct_cmd->add_option("--l", c_l, "Parameter l");
    construct_cmd->add_option("--n", c_n, "Parameter n");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Reproduce a theorem's value grid");
    std::string theorem;
    harness::VerifyOptions verify_opts;
    CommonFlags verify_flags;
    verify_cmd->add_option("--theorem", theorem, "2.1, 2.2, 3.1, 3.2 or 3.3")->required();
    verify_cmd->add_option("--max-k", verify_opts.max_k, "Upper bound for the k grid");
    verify_cmd->add_option("--max-l", verify_opts.max_l, "Upper bound for the l grid");
    verify_cmd->add_flag("--stretch", verify_opts.stretch, "Include the large flagged instances");
    verify_flags.attach(verify_cmd);

    // props
    auto* props_cmd = app.add_subcommand("props", "Run the invariant property suite");
    harness::PropsOptions props_opts;
    CommonFlags props_flags;
    props_cmd->add_option("--cap", props_opts.cap, "Exhaustive order cap (<= 6)");
    props_cmd->add_option("--samples", props_opts.samples, "Random connected graphs (n = 7, 8)");
    props_cmd->add_option("--seed", props_opts.seed, "RNG seed");
    props_flags.attach(props_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (solve_cmd->parsed()) {
        Graph g = Graph::from_edge_list(read_input(input));
        if (g.order() > solve_cap) {
            std::cerr << "order " << g.order() << " exceeds solve cap " << solve_cap << "\n";
            return kExitResource;
        }
        SolveSpec spec{parse_variant(game), parse_role(scored, "--scored"),
                       parse_role(start, "--start")};
        SolveResult result = solve_value(g, spec, solve_flags.solver());
        std::cout << harness::solve_json(spec, result).dump() << "\n";
        return kExitOk;
    }

    if (outcome_cmd->parsed()) {
        Graph g = Graph::from_edge_list(read_input(o_input));
        if (g.order() > o_cap) {
            std::cerr << "order " << g.order() << " exceeds solve cap " << o_cap << "\n";
            return kExitResource;
        }
        Outcome o = outcome(g, parse_variant(o_game), outcome_flags.solver());
        std::cout << json{{"outcome", to_string(o)}}.dump() << "\n";
        return kExitOk;
    }

    if (construct_cmd->parsed()) {
        LabeledGraph lg = make_family(family, c_k, c_l, c_n);
        std::cout << "# family=" << family;
        if (c_k >= 0)
            std::cout << " k=" << c_k;
        if (c_l >= 0)
            std::cout << " l=" << c_l;
        if (c_n >= 0)
            std::cout << " n=" << c_n;
        std::cout << "\n";
        for (const auto& [label, index] : lg.landmarks)
            std::cout << "# " << label << "=" << index << "\n";
        std::cout << lg.graph.to_edge_list();
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        verify_opts.solver = verify_flags.solver();
        harness::VerificationReport report = harness::verify_theorem(theorem, verify_opts);
        if (verify_flags.json_out) {
            std::cout << report.to_json().dump(2) << "\n";
            print_verify_summary(report, std::cerr);
        } else {
            print_verify_summary(report, std::cout);
        }
        return report.pass ? kExitOk : kExitFailure;
    }

    if (props_cmd->parsed()) {
        props_opts.solver = props_flags.solver();
        harness::PropsReport report = harness::run_props(props_opts);
        if (props_flags.json_out) {
            std::cout << report.to_json().dump(2) << "\n";
        } else {
            for (const auto& [name, count] : report.check_counts)
                std::cout << name << ": " << count << " checks\n";
            for (const auto& c : report.counterexamples)
                std::cout << "COUNTEREXAMPLE " << c.property << " (" << c.detail << ")\n"
                          << c.edge_list;
            std::cout << "props: " << (report.pass ? "PASS" : "FAIL") << " ("
                      << report.graphs_checked << " graphs)\n";
        }
        return report.pass ? kExitOk : kExitFailure;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const harness::UnknownTheorem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
