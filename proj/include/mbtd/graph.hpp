#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbtd/vertex_set.hpp"

namespace mbtd {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple graph on vertices 0..n-1. Adjacency is stored as one
// VertexSet per vertex; N(v) never contains v.
class Graph {
public:
    // Edges must be distinct, symmetric-free (one entry per unordered pair),
    // loop-free and within range; violations throw std::invalid_argument.
    Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name = "");

    // Parses the textual edge-list format: optional '#' comment lines, a
    // header line with the order n, then one "u v" line per edge.
    static Graph from_edge_list(const std::string& text);

    std::string to_edge_list() const;

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    VertexSet open_neighborhood(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexSet closed_neighborhood(int v) const { return open_neighborhood(v).with(v); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    int degree(int v) const { return open_neighborhood(v).size(); }

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;

    // Graph with one extra edge; u-v must not already be present.
    Graph with_edge(int u, int v) const;

    Graph renamed(std::string name) const;

    bool same_edges(const Graph& o) const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(n_) + ")");
    }

    int n_;
    std::vector<VertexSet> adj_;
    std::string name_;
};

}  // namespace mbtd
