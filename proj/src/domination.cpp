#include "mbtd/domination.hpp"

#include <algorithm>

namespace mbtd {
namespace {

VertexSet requirement(const Graph& g, int v, bool total) {
    return total ? g.open_neighborhood(v) : g.closed_neighborhood(v);
}

// First vertex whose requirement set misses d, or -1 if d dominates.
int first_uncovered(const Graph& g, VertexSet d, bool total) {
    for (int v = 0; v < g.order(); ++v)
        if (!requirement(g, v, total).intersects(d))
            return v;
    return -1;
}

// Can d be extended to a (total) dominating set with `budget` more vertices?
// Branches on the requirement set of the first uncovered vertex.
bool can_cover(const Graph& g, VertexSet d, int budget, bool total) {
    int v = first_uncovered(g, d, total);
    if (v < 0)
        return true;
    if (budget == 0)
        return false;
    for (int u : requirement(g, v, total))
        if (can_cover(g, d.with(u), budget - 1, total))
            return true;
    return false;
}

GameValue min_cover(const Graph& g, bool total) {
    for (int k = 0; k <= g.order(); ++k)
        if (can_cover(g, VertexSet(), k, total))
            return GameValue::finite(static_cast<std::uint32_t>(k));
    return GameValue::infinity();
}

}  // namespace

bool is_dominating_set(const Graph& g, VertexSet d) {
    return first_uncovered(g, d, /*total=*/false) < 0;
}

bool is_total_dominating_set(const Graph& g, VertexSet d) {
    return first_uncovered(g, d, /*total=*/true) < 0;
}

GameValue domination_number(const Graph& g) { return min_cover(g, /*total=*/false); }

GameValue total_domination_number(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.open_neighborhood(v).empty())
            return GameValue::infinity();
    return min_cover(g, /*total=*/true);
}

bool is_pairing_total_dominating_set(const Graph& g, const Pairing& p) {
    VertexSet used;
    for (auto [u, v] : p.pairs) {
        VertexSet pair_set = VertexSet::single(u) | VertexSet::single(v);
        if (u == v || u >= g.order() || v >= g.order() || u < 0 || v < 0)
            throw std::invalid_argument("pairing contains an invalid pair");
        if (used.intersects(pair_set))
            throw std::invalid_argument("pairing vertices are not distinct");
        used = used | pair_set;
    }
    std::size_t k = p.pairs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        VertexSet selection;
        for (std::size_t i = 0; i < k; ++i) {
            int x = (mask >> i) & 1 ? p.pairs[i].second : p.pairs[i].first;
            selection = selection.with(x);
        }
        if (!is_total_dominating_set(g, selection))
            return false;
    }
    return true;
}

namespace {

// Partial pairings are extended with pairs lexicographically above the last
// one, so each pair set is visited once.
bool extend_pairing(const Graph& g, Pairing& acc, VertexSet used, std::pair<int, int> last,
                    int remaining) {
    if (remaining == 0)
        return is_pairing_total_dominating_set(g, acc);
    for (int u = last.first; u < g.order(); ++u) {
        if (used.contains(u))
            continue;
        int v_start = (u == last.first) ? last.second + 1 : u + 1;
        for (int v = std::max(v_start, u + 1); v < g.order(); ++v) {
            if (used.contains(v))
                continue;
            acc.pairs.emplace_back(u, v);
            if (extend_pairing(g, acc, used.with(u).with(v), {u, v}, remaining - 1))
                return true;
            acc.pairs.pop_back();
        }
    }
    return false;
}

}  // namespace

std::optional<Pairing> find_pairing_total_dominating_set(const Graph& g, int k) {
    if (k < 0 || 2 * k > g.order())
        return std::nullopt;
    Pairing p;
    if (extend_pairing(g, p, VertexSet(), {0, 0}, k))
        return p;
    return std::nullopt;
}

}  // namespace mbtd
