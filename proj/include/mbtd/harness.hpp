#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbtd/constructions.hpp"
#include "mbtd/domination.hpp"
#include "mbtd/solver.hpp"

namespace mbtd::harness {

struct UnknownTheorem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InstanceResult {
    std::string graph;      // family instance, e.g. "G_l(2)"
    std::string invariant;  // e.g. "gamma_MBT"
    GameValue expected;
    GameValue computed;
    bool pass = false;
    std::uint64_t nodes = 0;
    double millis = 0.0;
    std::string edge_list;  // replay data
};

struct VerificationReport {
    std::string theorem;
    std::vector<InstanceResult> instances;
    bool pass = false;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    int max_k = 0;  // 0 = theorem default
    int max_l = 0;
    bool stretch = false;  // include the flagged large instances
    SolverOptions solver;
};

// id is one of "2.1", "2.2", "3.1", "3.2", "3.3"; expected values come from
// the theorem formulas evaluated on the parameter grid.
VerificationReport verify_theorem(const std::string& id, const VerifyOptions& opts = {});

struct PropsOptions {
    int cap = 5;          // exhaustive connected graphs up to this order (max 6)
    int samples = 200;    // random connected graphs, orders 7 and 8
    std::uint64_t seed = 42;
    int oracle_cap = 6;   // oracle-equivalence portion limited to this order
    SolverOptions solver;
};

struct Counterexample {
    std::string property;
    std::string edge_list;
    std::string detail;
};

struct PropsReport {
    PropsOptions options;
    int graphs_checked = 0;
    std::vector<std::pair<std::string, int>> check_counts;
    std::vector<Counterexample> counterexamples;
    bool pass = false;
    nlohmann::json to_json() const;
};

PropsReport run_props(const PropsOptions& opts = {});

// All connected graphs of the given order up to isomorphism (canonical
// representative = lexicographically smallest edge mask). Practical for
// n <= 6 only and refused above that.
std::vector<Graph> connected_graphs_up_to_iso(int n);

Graph random_connected_graph(int n, std::mt19937_64& rng);

nlohmann::json value_json(GameValue v);
nlohmann::json moves_json(VertexSet s);
nlohmann::json solve_json(SolveSpec spec, const SolveResult& result);

}  // namespace mbtd::harness
