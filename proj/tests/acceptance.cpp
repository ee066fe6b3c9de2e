// Acceptance gate: twelve checks spanning anchors, the five theorem grids,
// oracle equivalence, the property suite and thread determinism. Prints one
// pass/fail line per criterion and exits nonzero on any failure.
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "mbtd/constructions.hpp"
#include "mbtd/domination.hpp"
#include "mbtd/harness.hpp"
#include "mbtd/solver.hpp"

using namespace mbtd;

namespace {

constexpr SolveSpec kMBT{GameVariant::MBTD, Role::Dominator, Role::Dominator};
constexpr SolveSpec kMBTp{GameVariant::MBTD, Role::Dominator, Role::Staller};
constexpr SolveSpec kMB{GameVariant::MBD, Role::Dominator, Role::Dominator};
constexpr SolveSpec kMBp{GameVariant::MBD, Role::Dominator, Role::Staller};

constexpr SolveSpec kAllSpecs[] = {
    kMBT, kMBTp, kMB, kMBp,
    {GameVariant::MBD, Role::Staller, Role::Dominator},
    {GameVariant::MBD, Role::Staller, Role::Staller},
};

class Gate {
public:
    explicit Gate(bool stretch) : stretch_(stretch) {}

    void criterion(int id, const std::string& label) {
        flush();
        id_ = id;
        label_ = label;
        ok_ = true;
    }

    // Game value against the expected move count; the instance is recorded
    // for the determinism re-run.
    void game(const Graph& g, SolveSpec spec, std::uint32_t expected) {
        instances_.emplace_back(g, spec);
        GameValue got = solve_value(g, spec).value;
        expect(got == GameValue::finite(expected),
               g.name() + ": expected " + std::to_string(expected) + ", got " + got.to_string());
    }

    void domination(const Graph& g, bool total, std::uint32_t expected) {
        GameValue got = total ? total_domination_number(g) : domination_number(g);
        expect(got == GameValue::finite(expected),
               g.name() + ": expected " + std::to_string(expected) + ", got " + got.to_string());
    }

    void expect(bool pass, const std::string& detail) {
        if (!pass) {
            ok_ = false;
            details_.push_back(detail);
        }
    }

    bool stretch() const { return stretch_; }
    const std::vector<std::pair<Graph, SolveSpec>>& instances() const { return instances_; }

    int finish() {
        flush();
        std::cout << (failures_ == 0 ? "acceptance: PASS" : "acceptance: FAIL") << " ("
                  << failures_ << " failing criteria)\n";
        return failures_ == 0 ? 0 : 1;
    }

private:
    void flush() {
        if (id_ == 0)
            return;
        std::cout << "criterion " << id_ << ": " << (ok_ ? "PASS" : "FAIL") << " - " << label_
                  << "\n";
        for (const auto& d : details_)
            std::cout << "    " << d << "\n";
        if (!ok_)
            ++failures_;
        details_.clear();
        id_ = 0;
    }

    bool stretch_;
    int id_ = 0;
    std::string label_;
    bool ok_ = true;
    int failures_ = 0;
    std::vector<std::string> details_;
    std::vector<std::pair<Graph, SolveSpec>> instances_;
};

std::string instance_fingerprint(const Graph& g, SolveSpec spec, const SolverOptions& opts) {
    SolveResult r = solve_value(g, spec, opts);
    nlohmann::json j{{"value", harness::value_json(r.value)},
                     {"optimal_first_moves", harness::moves_json(r.optimal_first_moves)}};
    return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
    bool stretch = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--stretch") == 0)
            stretch = true;
    Gate gate(stretch);

    gate.criterion(1, "C_4 anchor: all four Dominator invariants are 2, outcome D");
    {
        Graph c4 = gen_basic(BasicFamily::Cycle, 4);
        gate.game(c4, kMB, 2);
        gate.game(c4, kMBp, 2);
        gate.game(c4, kMBT, 2);
        gate.game(c4, kMBTp, 2);
        gate.expect(outcome(c4, GameVariant::MBTD) == Outcome::D, "C_4 outcome is not D");
    }

    gate.criterion(2, "even D-game sharpness: gamma_MBT = gamma_t = 2l on G_l, l <= 3");
    for (int l = 1; l <= 3; ++l) {
        Graph g = gen_Gl(l).graph;
        gate.domination(g, true, 2 * l);
        gate.game(g, kMBT, 2 * l);
    }

    gate.criterion(3, "odd D-game sharpness: gamma_MBT = gamma_t = 2l+1 on G_l', l <= 2");
    for (int l = 1; l <= 2; ++l) {
        Graph g = gen_Gl_prime(l).graph;
        gate.domination(g, true, 2 * l + 1);
        gate.game(g, kMBT, 2 * l + 1);
    }

    gate.criterion(4, "S-game sharpness: gamma_MBT' = 2l on G_l and 2l+1 on G_l''");
    for (int l = 1; l <= 3; ++l)
        gate.game(gen_Gl(l).graph, kMBTp, 2 * l);
    for (int l = 1; l <= 2; ++l)
        gate.game(gen_Gl_double_prime(l).graph, kMBTp, 2 * l + 1);

    gate.criterion(5, "gamma = gamma_t = gamma_MB = gamma_MBT = k on G_{k,4}, k in {2,3}");
    for (int k = 2; k <= 3; ++k) {
        Graph g = gen_Gkn(k, 4).graph;
        gate.domination(g, false, k);
        gate.domination(g, true, k);
        gate.game(g, kMB, k);
        gate.game(g, kMBT, k);
    }

    gate.criterion(6, "gamma = gamma_t = gamma_MB' = gamma_MBT' = k on H_{k,4} with a k-pairing");
    {
        std::vector<int> ks = {2};
        if (gate.stretch())
            ks.push_back(3);
        for (int k : ks) {
            Graph h = gen_Hkn(k, 4).graph;
            gate.domination(h, false, k);
            gate.domination(h, true, k);
            gate.game(h, kMBp, k);
            gate.game(h, kMBTp, k);
            auto p = find_pairing_total_dominating_set(h, k);
            gate.expect(p.has_value() && is_pairing_total_dominating_set(h, *p),
                        h.name() + ": no total dominating pairing of size " + std::to_string(k));
        }
    }

    gate.criterion(7, "gamma_MB = 2, gamma_MBT = l on G_{2,l}; both 3 on G_{3,3}");
    for (int l = 3; l <= 4; ++l) {
        Graph g = gen_G2l(l).graph;
        gate.game(g, kMB, 2);
        gate.game(g, kMBT, l);
    }
    {
        Graph g = gen_Gkl(3, 3).graph;
        gate.game(g, kMB, 3);
        gate.game(g, kMBT, 3);
    }

    gate.criterion(8, "gamma_MB' = 2, gamma_MBT' = l on H_{2,l}; both 3 on H_{3,3}");
    for (int l = 3; l <= 4; ++l) {
        Graph h = gen_H2l(l).graph;
        gate.game(h, kMBp, 2);
        gate.game(h, kMBTp, l);
    }
    if (gate.stretch()) {
        Graph h = gen_Hkl(3, 3).graph;
        gate.game(h, kMBp, 3);
        gate.game(h, kMBTp, 3);
    }

    gate.criterion(9, "gamma_MBT = k, gamma_MBT' = l on F_{k,l}, (k,l) in {(2,2),(2,3),(3,3)}");
    for (auto [k, l] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        Graph f = gen_Fkl(k, l).graph;
        gate.game(f, kMBT, k);
        gate.game(f, kMBTp, l);
    }

    gate.criterion(10, "solver matches the unmemoized recursion on every small graph");
    {
        int mismatches = 0, checks = 0;
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : harness::connected_graphs_up_to_iso(n))
                for (SolveSpec spec : kAllSpecs) {
                    ++checks;
                    if (solve_value(g, spec).value != naive_value(g, spec))
                        ++mismatches;
                }
        std::mt19937_64 rng(42);
        for (int i = 0; i < 200; ++i) {
            Graph g = harness::random_connected_graph(7, rng);
            for (SolveSpec spec : kAllSpecs) {
                ++checks;
                if (solve_value(g, spec).value != naive_value(g, spec))
                    ++mismatches;
            }
        }
        gate.expect(mismatches == 0, std::to_string(mismatches) + " of " +
                                         std::to_string(checks) + " oracle checks disagree");
    }

    gate.criterion(11, "property suite at cap 6 finds no counterexamples");
    {
        harness::PropsOptions opts;
        opts.cap = 6;
        harness::PropsReport report = harness::run_props(opts);
        gate.expect(report.pass, std::to_string(report.counterexamples.size()) +
                                     " counterexamples over " +
                                     std::to_string(report.graphs_checked) + " graphs");
    }

    gate.criterion(12, "4-thread solves reproduce single-threaded values and move sets");
    {
        SolverOptions four;
        four.threads = 4;
        for (const auto& [g, spec] : gate.instances()) {
            std::string one = instance_fingerprint(g, spec, {});
            std::string par = instance_fingerprint(g, spec, four);
            gate.expect(one == par, g.name() + ": " + one + " != " + par);
        }
    }

    return gate.finish();
}
