#include <limits>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbtd/constructions.hpp"
#include "mbtd/domination.hpp"
#include "mbtd/harness.hpp"
#include "mbtd/solver.hpp"

namespace py = pybind11;
using namespace mbtd;

namespace {

GameVariant variant_from(const std::string& s) {
    if (s == "mbd")
        return GameVariant::MBD;
    if (s == "mbtd")
        return GameVariant::MBTD;
    throw std::invalid_argument("game must be 'mbd' or 'mbtd'");
}

Role role_from(const std::string& s) {
    if (s == "dominator")
        return Role::Dominator;
    if (s == "staller")
        return Role::Staller;
    throw std::invalid_argument("role must be 'dominator' or 'staller'");
}

py::object value_to_py(GameValue v) {
    if (v.is_finite())
        return py::int_(v.moves());
    return py::cast(std::numeric_limits<double>::infinity());
}

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for (int v : s)
        out.push_back(v);
    return out;
}

SolverOptions make_options(int threads) {
    SolverOptions opts;
    opts.threads = threads;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_mbtd, m) {
    m.doc() = "Exact solver for Maker-Breaker (total) domination games";

    py::class_<Graph>(m, "Graph")
        .def(py::init(&Graph::from_edge_list), py::arg("edge_list"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("name", &Graph::name)
        .def("edges", &Graph::edges)
        .def("open_neighborhood",
             [](const Graph& g, int v) { return set_to_list(g.open_neighborhood(v)); })
        .def("closed_neighborhood",
             [](const Graph& g, int v) { return set_to_list(g.closed_neighborhood(v)); })
        .def("is_connected", &Graph::is_connected)
        .def("to_edge_list", &Graph::to_edge_list)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def(
        "solve",
        [](const Graph& g, const std::string& game, const std::string& scored,
           const std::string& start, int threads) {
            SolveSpec spec{variant_from(game), role_from(scored), role_from(start)};
            SolveResult r = solve_value(g, spec, make_options(threads));
            py::dict out;
            out["value"] = value_to_py(r.value);
            out["optimal_first_moves"] = set_to_list(r.optimal_first_moves);
            out["nodes"] = r.stats.nodes;
            out["millis"] = r.stats.millis;
            return out;
        },
        py::arg("graph"), py::arg("game") = "mbtd", py::arg("scored") = "dominator",
        py::arg("start") = "dominator", py::arg("threads") = 1);

    m.def(
        "outcome",
        [](const Graph& g, const std::string& game) {
            return std::string(to_string(outcome(g, variant_from(game))));
        },
        py::arg("graph"), py::arg("game") = "mbtd");

    m.def(
        "naive_value",
        [](const Graph& g, const std::string& game, const std::string& scored,
           const std::string& start, int max_order) {
            SolveSpec spec{variant_from(game), role_from(scored), role_from(start)};
            return value_to_py(naive_value(g, spec, max_order));
        },
        py::arg("graph"), py::arg("game") = "mbtd", py::arg("scored") = "dominator",
        py::arg("start") = "dominator", py::arg("max_order") = 8);

    m.def(
        "best_line",
        [](const Graph& g, const std::string& game, const std::string& scored,
           const std::string& start) {
            SolveSpec spec{variant_from(game), role_from(scored), role_from(start)};
            return best_line(g, spec);
        },
        py::arg("graph"), py::arg("game") = "mbtd", py::arg("scored") = "dominator",
        py::arg("start") = "dominator");

    m.def("domination_number", [](const Graph& g) { return value_to_py(domination_number(g)); });
    m.def("total_domination_number",
          [](const Graph& g) { return value_to_py(total_domination_number(g)); });
    m.def(
        "find_pairing_total_dominating_set",
        [](const Graph& g, int k) -> py::object {
            auto p = find_pairing_total_dominating_set(g, k);
            if (!p)
                return py::none();
            return py::cast(p->pairs);
        },
        py::arg("graph"), py::arg("k"));

    m.def(
        "construct",
        [](const std::string& family, int k, int l, int n) {
            py::dict out;
            if (family == "Gl")
                return py::make_tuple(gen_Gl(l).graph, gen_Gl(l).landmarks);
            if (family == "GlPrime")
                return py::make_tuple(gen_Gl_prime(l).graph, gen_Gl_prime(l).landmarks);
            if (family == "GlDoublePrime")
                return py::make_tuple(gen_Gl_double_prime(l).graph,
                                      gen_Gl_double_prime(l).landmarks);
            if (family == "Gkn")
                return py::make_tuple(gen_Gkn(k, n).graph, gen_Gkn(k, n).landmarks);
            if (family == "Hkn")
                return py::make_tuple(gen_Hkn(k, n).graph, gen_Hkn(k, n).landmarks);
            if (family == "G2l")
                return py::make_tuple(gen_G2l(l).graph, gen_G2l(l).landmarks);
            if (family == "Gkl")
                return py::make_tuple(gen_Gkl(k, l).graph, gen_Gkl(k, l).landmarks);
            if (family == "H2l")
                return py::make_tuple(gen_H2l(l).graph, gen_H2l(l).landmarks);
            if (family == "Hkl")
                return py::make_tuple(gen_Hkl(k, l).graph, gen_Hkl(k, l).landmarks);
            if (family == "Fkl")
                return py::make_tuple(gen_Fkl(k, l).graph, gen_Fkl(k, l).landmarks);
            throw std::invalid_argument("unknown family " + family);
        },
        py::arg("family"), py::arg("k") = 0, py::arg("l") = 0, py::arg("n") = 0);

    m.def(
        "cycle", [](int n) { return gen_basic(BasicFamily::Cycle, n); }, py::arg("n"));
    m.def(
        "path", [](int n) { return gen_basic(BasicFamily::Path, n); }, py::arg("n"));
    m.def(
        "complete", [](int n) { return gen_basic(BasicFamily::Complete, n); }, py::arg("n"));
}
