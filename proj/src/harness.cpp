#include "mbtd/harness.hpp"

#include <algorithm>
#include <numeric>

namespace mbtd::harness {

using nlohmann::json;

nlohmann::json value_json(GameValue v) {
    if (v.is_finite())
        return v.moves();
    return "infinity";
}

nlohmann::json moves_json(VertexSet s) {
    json arr = json::array();
    for (int v : s)
        arr.push_back(v);
    return arr;
}

nlohmann::json solve_json(SolveSpec spec, const SolveResult& result) {
    return json{{"game", to_string(spec.variant)},
                {"scored", to_string(spec.scored)},
                {"start", to_string(spec.starter)},
                {"value", value_json(result.value)},
                {"optimal_first_moves", moves_json(result.optimal_first_moves)},
                {"nodes", result.stats.nodes},
                {"millis", result.stats.millis}};
}

nlohmann::json VerificationReport::to_json() const {
    json inst = json::array();
    for (const auto& r : instances)
        inst.push_back(json{{"graph", r.graph},
                            {"invariant", r.invariant},
                            {"expected", value_json(r.expected)},
                            {"computed", value_json(r.computed)},
                            {"pass", r.pass},
                            {"nodes", r.nodes},
                            {"millis", r.millis},
                            {"edge_list", r.edge_list}});
    return json{{"theorem", theorem}, {"instances", inst}, {"pass", pass}};
}

namespace {

// The six named invariants as solve specs.
const std::vector<std::pair<std::string, SolveSpec>> kSpecByName = {
    {"gamma_MB", {GameVariant::MBD, Role::Dominator, Role::Dominator}},
    {"gamma_MB'", {GameVariant::MBD, Role::Dominator, Role::Staller}},
    {"gamma_SMB", {GameVariant::MBD, Role::Staller, Role::Dominator}},
    {"gamma_SMB'", {GameVariant::MBD, Role::Staller, Role::Staller}},
    {"gamma_MBT", {GameVariant::MBTD, Role::Dominator, Role::Dominator}},
    {"gamma_MBT'", {GameVariant::MBTD, Role::Dominator, Role::Staller}},
};

SolveSpec spec_for(const std::string& name) {
    for (const auto& [n, s] : kSpecByName)
        if (n == name)
            return s;
    throw std::invalid_argument("unknown invariant " + name);
}

class GridRunner {
public:
    GridRunner(VerificationReport& report, const SolverOptions& solver)
        : report_(report), solver_(solver) {}

    void expect_game(const Graph& g, const std::string& invariant, int expected) {
        SolveResult r = solve_value(g, spec_for(invariant), solver_);
        push(g, invariant, GameValue::finite(static_cast<std::uint32_t>(expected)), r.value,
             r.stats);
    }

    void expect_domination(const Graph& g, const std::string& invariant, int expected) {
        GameValue computed = invariant == "gamma" ? domination_number(g)
                                                  : total_domination_number(g);
        push(g, invariant, GameValue::finite(static_cast<std::uint32_t>(expected)), computed, {});
    }

    void expect_pairing(const Graph& g, int k) {
        auto p = find_pairing_total_dominating_set(g, k);
        // Encode existence as value k vs infinity so the report stays uniform.
        push(g, "pairing_size_" + std::to_string(k),
             GameValue::finite(static_cast<std::uint32_t>(k)),
             p ? GameValue::finite(static_cast<std::uint32_t>(k)) : GameValue::infinity(), {});
    }

private:
    void push(const Graph& g, const std::string& invariant, GameValue expected,
              GameValue computed, SearchStats stats) {
        report_.instances.push_back(InstanceResult{g.name(), invariant, expected, computed,
                                                   expected == computed, stats.nodes,
                                                   stats.millis, g.to_edge_list()});
    }

    VerificationReport& report_;
    const SolverOptions& solver_;
};

int effective(int user, int fallback) { return user > 0 ? user : fallback; }

}  // namespace

VerificationReport verify_theorem(const std::string& id, const VerifyOptions& opts) {
    VerificationReport report;
    report.theorem = id;
    GridRunner run(report, opts.solver);

    if (id == "2.1") {
        int max_l = effective(opts.max_l, 3);
        for (int l = 1; l <= std::min(3, max_l); ++l) {
            Graph g = gen_Gl(l).graph;
            run.expect_domination(g, "gamma_t", 2 * l);
            run.expect_game(g, "gamma_MBT", 2 * l);
            run.expect_game(g, "gamma_MBT'", 2 * l);
        }
        for (int l = 1; l <= std::min(2, max_l); ++l) {
            Graph gp = gen_Gl_prime(l).graph;
            run.expect_domination(gp, "gamma_t", 2 * l + 1);
            run.expect_game(gp, "gamma_MBT", 2 * l + 1);
            run.expect_game(gen_Gl_double_prime(l).graph, "gamma_MBT'", 2 * l + 1);
        }
    } else if (id == "2.2") {
        int max_k = effective(opts.max_k, 3);
        for (int k = 2; k <= std::min(3, max_k); ++k) {
            Graph g = gen_Gkn(k, 4).graph;
            run.expect_domination(g, "gamma", k);
            run.expect_domination(g, "gamma_t", k);
            run.expect_game(g, "gamma_MB", k);
            run.expect_game(g, "gamma_MBT", k);
        }
        for (int k = 2; k <= (opts.stretch ? 3 : 2); ++k) {
            Graph h = gen_Hkn(k, 4).graph;
            run.expect_domination(h, "gamma", k);
            run.expect_domination(h, "gamma_t", k);
            run.expect_game(h, "gamma_MB'", k);
            run.expect_game(h, "gamma_MBT'", k);
            run.expect_pairing(h, k);
        }
    } else if (id == "3.1") {
        int max_l = effective(opts.max_l, 4);
        for (int l = 3; l <= std::min(4, max_l); ++l) {
            Graph g = gen_G2l(l).graph;
            run.expect_game(g, "gamma_MB", 2);
            run.expect_game(g, "gamma_MBT", l);
        }
        if (effective(opts.max_k, 3) >= 3) {
            Graph g = gen_Gkl(3, 3).graph;
            run.expect_game(g, "gamma_MB", 3);
            run.expect_game(g, "gamma_MBT", 3);
        }
    } else if (id == "3.2") {
        int max_l = effective(opts.max_l, 4);
        for (int l = 3; l <= std::min(4, max_l); ++l) {
            Graph h = gen_H2l(l).graph;
            run.expect_game(h, "gamma_MB'", 2);
            run.expect_game(h, "gamma_MBT'", l);
        }
        if (opts.stretch) {
            Graph h = gen_Hkl(3, 3).graph;
            run.expect_game(h, "gamma_MB'", 3);
            run.expect_game(h, "gamma_MBT'", 3);
        }
    } else if (id == "3.3") {
        for (auto [k, l] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
            if (k > effective(opts.max_k, 3) || l > effective(opts.max_l, 3))
                continue;
            Graph f = gen_Fkl(k, l).graph;
            run.expect_game(f, "gamma_MBT", k);
            run.expect_game(f, "gamma_MBT'", l);
        }
    } else {
        throw UnknownTheorem("unknown theorem id \"" + id +
                             "\" (expected 2.1, 2.2, 3.1, 3.2 or 3.3)");
    }

    report.pass = std::all_of(report.instances.begin(), report.instances.end(),
                              [](const InstanceResult& r) { return r.pass; });
    return report;
}

// ---------------------------------------------------------------------------
// Graph enumeration

namespace {

int pair_index(int a, int b, int n) {
    // a < b; edges enumerated row by row.
    int idx = 0;
    for (int i = 0; i < a; ++i)
        idx += n - 1 - i;
    return idx + (b - a - 1);
}

bool mask_connected(std::uint64_t mask, int n) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    int e = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++e)
            if ((mask >> e) & 1) {
                adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
            }
    std::uint64_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1)
                next |= adj[static_cast<std::size_t>(v)];
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (std::uint64_t{1} << n) - 1;
}

std::uint64_t relabel_mask(std::uint64_t mask, const std::vector<int>& perm, int n) {
    std::uint64_t out = 0;
    int e = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++e)
            if ((mask >> e) & 1) {
                int pa = perm[static_cast<std::size_t>(a)];
                int pb = perm[static_cast<std::size_t>(b)];
                out |= std::uint64_t{1} << pair_index(std::min(pa, pb), std::max(pa, pb), n);
            }
    return out;
}

Graph mask_to_graph(std::uint64_t mask, int n) {
    std::vector<std::pair<int, int>> edges;
    int e = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++e)
            if ((mask >> e) & 1)
                edges.emplace_back(a, b);
    return Graph(n, edges);
}

}  // namespace

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("exhaustive enumeration supported for 1 <= n <= 6");
    int bits = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        if (!mask_connected(mask, n))
            continue;
        bool canonical = true;
        for (const auto& p : perms)
            if (relabel_mask(mask, p, n) < mask) {
                canonical = false;
                break;
            }
        if (canonical)
            out.push_back(mask_to_graph(mask, n));
    }
    return out;
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
    int bits = n * (n - 1) / 2;
    for (;;) {
        std::uint64_t mask = rng() & ((std::uint64_t{1} << bits) - 1);
        if (mask_connected(mask, n))
            return mask_to_graph(mask, n);
    }
}

// ---------------------------------------------------------------------------
// Property suite

namespace {

struct PropsContext {
    PropsReport& report;
    std::map<std::string, int> counts;
    std::mt19937_64 rng;

    void check(const std::string& property, bool ok, const Graph& g, const std::string& detail) {
        ++counts[property];
        if (!ok)
            report.counterexamples.push_back(Counterexample{property, g.to_edge_list(), detail});
    }
};

void check_graph_properties(PropsContext& ctx, const Graph& g, const PropsOptions& opts) {
    int n = g.order();
    GameValue gamma = domination_number(g);
    GameValue gamma_t = total_domination_number(g);
    std::map<std::string, GameValue> v;
    for (const auto& [name, spec] : kSpecByName)
        v[name] = solve_value(g, spec, opts.solver).value;

    ctx.check("chain_eq1",
              max(gamma_t, v["gamma_MB"]) <= v["gamma_MBT"] &&
                  v["gamma_MBT"] <= v["gamma_MBT'"],
              g,
              "gamma_t=" + gamma_t.to_string() + " gamma_MB=" + v["gamma_MB"].to_string() +
                  " gamma_MBT=" + v["gamma_MBT"].to_string() + " gamma_MBT'=" +
                  v["gamma_MBT'"].to_string());
    ctx.check("mbd_chain", gamma <= v["gamma_MB"] && v["gamma_MB"] <= v["gamma_MB'"], g,
              "gamma=" + gamma.to_string() + " gamma_MB=" + v["gamma_MB"].to_string() +
                  " gamma_MB'=" + v["gamma_MB'"].to_string());
    ctx.check("thm21_ceiling",
              !v["gamma_MBT"].is_finite() ||
                  v["gamma_MBT"].moves() <= static_cast<std::uint32_t>((n + 1) / 2),
              g, "gamma_MBT=" + v["gamma_MBT"].to_string());
    ctx.check("thm21_floor",
              !v["gamma_MBT'"].is_finite() ||
                  v["gamma_MBT'"].moves() <= static_cast<std::uint32_t>(n / 2),
              g, "gamma_MBT'=" + v["gamma_MBT'"].to_string());
    ctx.check("value_floor", !v["gamma_MBT"].is_finite() || v["gamma_MBT"] >= gamma_t, g,
              "gamma_MBT=" + v["gamma_MBT"].to_string() + " gamma_t=" + gamma_t.to_string());

    bool outcome_ok = true;
    std::string outcome_detail;
    try {
        Outcome o = outcome(g, GameVariant::MBTD, opts.solver);
        bool d_fin = v["gamma_MBT"].is_finite();
        bool s_fin = v["gamma_MBT'"].is_finite();
        outcome_ok = (o == Outcome::D && d_fin && s_fin) ||
                     (o == Outcome::S && !d_fin && !s_fin) ||
                     (o == Outcome::N && d_fin && !s_fin);
        outcome_detail = std::string("outcome=") + to_string(o);
    } catch (const std::logic_error& e) {
        outcome_ok = false;
        outcome_detail = e.what();
    }
    ctx.check("outcome_consistency", outcome_ok, g, outcome_detail);

    if (n <= opts.oracle_cap) {
        for (const auto& [name, spec] : kSpecByName) {
            GameValue oracle = naive_value(g, spec, opts.oracle_cap);
            ctx.check("oracle_equivalence", oracle == v[name], g,
                      name + ": solver=" + v[name].to_string() +
                          " oracle=" + oracle.to_string());
        }
    }

    // Edge-addition monotonicity of gamma_MBT on one random non-edge.
    std::vector<std::pair<int, int>> non_edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b))
                non_edges.emplace_back(a, b);
    if (!non_edges.empty()) {
        auto [a, b] = non_edges[ctx.rng() % non_edges.size()];
        GameValue augmented =
            solve_value(g.with_edge(a, b),
                        {GameVariant::MBTD, Role::Dominator, Role::Dominator}, opts.solver)
                .value;
        ctx.check("edge_monotonicity", augmented <= v["gamma_MBT"], g,
                  "added " + std::to_string(a) + "-" + std::to_string(b) + ": " +
                      augmented.to_string() + " vs " + v["gamma_MBT"].to_string());
    }

    for (int k = 1; 2 * k <= n; ++k)
        if (find_pairing_total_dominating_set(g, k))
            ctx.check("pairing_bound",
                      v["gamma_MBT'"].is_finite() &&
                          v["gamma_MBT'"].moves() <= static_cast<std::uint32_t>(k),
                      g,
                      "pairing of size " + std::to_string(k) + " but gamma_MBT'=" +
                          v["gamma_MBT'"].to_string());
}

}  // namespace

PropsReport run_props(const PropsOptions& opts) {
    PropsReport report;
    report.options = opts;
    PropsContext ctx{report, {}, std::mt19937_64(opts.seed)};

    for (int n = 1; n <= std::min(opts.cap, 6); ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            check_graph_properties(ctx, g, opts);
            ++report.graphs_checked;
        }
    for (int i = 0; i < opts.samples; ++i) {
        Graph g = random_connected_graph(7 + (i % 2), ctx.rng);
        check_graph_properties(ctx, g, opts);
        ++report.graphs_checked;
    }

    report.check_counts.assign(ctx.counts.begin(), ctx.counts.end());
    report.pass = report.counterexamples.empty();
    return report;
}

nlohmann::json PropsReport::to_json() const {
    json checks = json::object();
    for (const auto& [name, count] : check_counts)
        checks[name] = count;
    json cex = json::array();
    for (const auto& c : counterexamples)
        cex.push_back(json{{"property", c.property}, {"edge_list", c.edge_list},
                           {"detail", c.detail}});
    return json{{"cap", options.cap},     {"samples", options.samples},
                {"seed", options.seed},   {"graphs_checked", graphs_checked},
                {"checks", checks},       {"counterexamples", cex},
                {"pass", pass}};
}

}  // namespace mbtd::harness
