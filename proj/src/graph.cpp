#include "mbtd/graph.hpp"

#include <charconv>
#include <queue>

namespace mbtd {
namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

bool parse_int(std::string_view token, int& out) {
    if (token.empty())
        return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name)
    : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0)), name_(std::move(name)) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxVertices));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (adj_[static_cast<std::size_t>(u)].contains(v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        adj_[static_cast<std::size_t>(u)] = adj_[static_cast<std::size_t>(u)].with(v);
        adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].with(u);
    }
}

Graph Graph::from_edge_list(const std::string& text) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> seen;

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (line.empty() && pos > text.size())
            break;  // trailing newline
        if (!line.empty() && line.front() == '#')
            continue;

        if (n < 0) {
            if (!parse_int(line, n) || n < 1)
                parse_fail(line_no, "expected positive graph order, got \"" +
                                        std::string(line) + "\"");
            if (n > kMaxVertices)
                parse_fail(line_no, "order " + std::to_string(n) + " exceeds limit " +
                                        std::to_string(kMaxVertices));
            seen.assign(static_cast<std::size_t>(n), VertexSet());
            continue;
        }

        std::size_t space = line.find(' ');
        int u = 0, v = 0;
        if (space == std::string_view::npos || !parse_int(line.substr(0, space), u) ||
            !parse_int(line.substr(space + 1), v))
            parse_fail(line_no, "malformed edge line \"" + std::string(line) + "\"");
        if (u < 0 || u >= n)
            parse_fail(line_no, "vertex " + std::to_string(u) + " out of range (n=" +
                                    std::to_string(n) + ")");
        if (v < 0 || v >= n)
            parse_fail(line_no, "vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(n) + ")");
        if (u == v)
            parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
        if (seen[static_cast<std::size_t>(u)].contains(v))
            parse_fail(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(u)].with(v);
        seen[static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(v)].with(u);
        edges.emplace_back(u, v);
    }

    if (n < 0)
        throw ParseError("missing graph order header");
    return Graph(n, edges);
}

std::string Graph::to_edge_list() const {
    std::string out = std::to_string(n_);
    out.push_back('\n');
    for (auto [u, v] : edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& nb : adj_)
        total += nb.size();
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    VertexSet reached = VertexSet::single(0);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            next = next | adj_[static_cast<std::size_t>(v)];
        frontier = next - reached;
        reached = reached | next;
    }
    return reached == VertexSet::full(n_);
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto es = edges();
    es.emplace_back(u, v);
    return Graph(n_, es, name_);
}

Graph Graph::renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

bool Graph::same_edges(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
}

}  // namespace mbtd
