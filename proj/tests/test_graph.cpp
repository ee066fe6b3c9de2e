#include <doctest.h>

#include "mbtd/graph.hpp"

using namespace mbtd;

TEST_CASE("edge list parsing accepts comments and round-trips bit-exactly") {
    const std::string text =
        "# a square\n"
        "4\n"
        "0 1\n"
        "1 2\n"
        "2 3\n"
        "0 3\n";
    Graph g = Graph::from_edge_list(text);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    // Serialization is canonical: header then sorted "u v" lines, LF only.
    CHECK(g.to_edge_list() == "4\n0 1\n0 3\n1 2\n2 3\n");
    CHECK(Graph::from_edge_list(g.to_edge_list()).same_edges(g));
}

TEST_CASE("parse errors carry the offending line number") {
    auto message = [](const std::string& text) {
        try {
            Graph::from_edge_list(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("").find("header") != std::string::npos);
    CHECK(message("2\n0 0\n").find("line 2") != std::string::npos);           // loop
    CHECK(message("2\n0 1\n0 1\n").find("line 3") != std::string::npos);      // duplicate
    CHECK(message("2\n0 1\n1 0\n").find("line 3") != std::string::npos);      // reversed dup
    CHECK(message("2\n0 2\n").find("line 2") != std::string::npos);           // out of range
    CHECK(message("2\nx y\n").find("line 2") != std::string::npos);           // garbage
    CHECK(message("99\n").find("order") != std::string::npos);                // over the limit
}

TEST_CASE("constructor validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("neighborhoods") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.open_neighborhood(1) == VertexSet::of_bits(0b101));
    CHECK(p3.closed_neighborhood(1) == VertexSet::of_bits(0b111));
    CHECK(p3.open_neighborhood(0) == VertexSet::single(1));
    CHECK(p3.degree(1) == 2);
    CHECK_THROWS_AS(p3.open_neighborhood(3), std::out_of_range);
}

TEST_CASE("connectivity") {
    CHECK(Graph(1, {}).is_connected());
    CHECK(Graph(3, {{0, 1}, {1, 2}}).is_connected());
    CHECK_FALSE(Graph(3, {{0, 1}}).is_connected());
    CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("with_edge adds exactly one edge") {
    Graph g(3, {{0, 1}});
    Graph h = g.with_edge(1, 2);
    CHECK(h.adjacent(1, 2));
    CHECK(h.edge_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.with_edge(0, 1), std::invalid_argument);
}
