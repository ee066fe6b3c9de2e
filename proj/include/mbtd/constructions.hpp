#pragma once

#include <map>
#include <string>

#include "mbtd/graph.hpp"

namespace mbtd {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Generator output: the graph plus the indices of the named special vertices
// ("u", "v", "w", "x", "x1".."x6", "y"), so proofs' named moves stay
// addressable. Triangle and C4 blocks are laid out contiguously from index 0;
// helpers below give the per-block labeling.
struct LabeledGraph {
    Graph graph;
    std::map<std::string, int> landmarks;
};

// Path P_l with a C4 attached at every path vertex. Copy i (1-based)
// occupies indices 4(i-1)..4(i-1)+3; index 4(i-1)+1 is the spine vertex.
LabeledGraph gen_Gl(int l);

// Same spine, but copy 1 is a 6-vertex gadget (indices 0..5, spine at 1,
// landmark "x" at 3); C4 copies follow at 6+4(i-2).
LabeledGraph gen_Gl_prime(int l);

// Same spine, but copy 1 is a 7-vertex gadget: x1..x6 at indices 0..5, the
// unnamed seventh vertex "y" at 6; the spine attaches at x5.
LabeledGraph gen_Gl_double_prime(int l);

// K_n (indices 0..n-1) plus k-1 copies of K_n-e (copy i at indices
// i*n..i*n+n-1, missing edge between its first two vertices) plus a hub u at
// index k*n joined to all of K_n and to both missing-edge endpoints.
LabeledGraph gen_Gkn(int k, int n);

// As gen_Gkn but with twin hubs u (k*n) and v (k*n+1), not adjacent.
LabeledGraph gen_Hkn(int k, int n);

// Triangle families: triangle i (1-based) occupies indices 3(i-1)..3(i-1)+2,
// hubs come last.
LabeledGraph gen_G2l(int l);            // l >= 3; hubs u, v adjacent
LabeledGraph gen_Gkl(int k, int l);     // 3 <= k <= l; hubs u, v non-adjacent
LabeledGraph gen_H2l(int l);            // l >= 3; hubs u, v, w
LabeledGraph gen_Hkl(int k, int l);     // 3 <= k <= l; hubs u, v, w; u-v edge
LabeledGraph gen_Fkl(int k, int l);     // 2 <= k <= l; hubs u, v non-adjacent

enum class BasicFamily { Path, Cycle, Complete, CompleteMinusEdge };

// Standard graphs with canonical labeling 0..n-1; K_n-e misses edge {0,1}.
Graph gen_basic(BasicFamily family, int n);

// Vertex v_{i,j} of the i-th triangle (both 1-based).
inline int triangle_vertex(int i, int j) { return 3 * (i - 1) + (j - 1); }

}  // namespace mbtd
