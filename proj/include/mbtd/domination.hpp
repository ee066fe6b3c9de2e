#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mbtd/game_value.hpp"
#include "mbtd/graph.hpp"

namespace mbtd {

// Disjoint vertex pairs {(u_1,v_1),...,(u_k,v_k)}; candidate pairing total
// dominating set.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;
};

bool is_dominating_set(const Graph& g, VertexSet d);
bool is_total_dominating_set(const Graph& g, VertexSet d);

// Exact gamma(G); always finite.
GameValue domination_number(const Graph& g);

// Exact gamma_t(G); infinite iff G has an isolated vertex.
GameValue total_domination_number(const Graph& g);

// Every selection of one vertex per pair must be a total dominating set;
// checked over all 2^k selections. Overlapping pairs throw
// std::invalid_argument.
bool is_pairing_total_dominating_set(const Graph& g, const Pairing& p);

// Exhaustive backtracking over canonical (min,max) pairs in lexicographic
// order; returns the first pairing of exactly k pairs, if any.
std::optional<Pairing> find_pairing_total_dominating_set(const Graph& g, int k);

}  // namespace mbtd
