#include "mbtd/constructions.hpp"

namespace mbtd {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, const std::string& what) {
    if (!ok)
        throw ParameterError(what);
}

void add_c4(EdgeList& edges, int base) {
    edges.emplace_back(base + 0, base + 1);
    edges.emplace_back(base + 1, base + 3);
    edges.emplace_back(base + 3, base + 2);
    edges.emplace_back(base + 2, base + 0);
}

void add_triangle(EdgeList& edges, int i) {
    edges.emplace_back(triangle_vertex(i, 1), triangle_vertex(i, 2));
    edges.emplace_back(triangle_vertex(i, 1), triangle_vertex(i, 3));
    edges.emplace_back(triangle_vertex(i, 2), triangle_vertex(i, 3));
}

void add_clique(EdgeList& edges, int base, int n, bool minus_edge) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (minus_edge && a == 0 && b == 1)
                continue;
            edges.emplace_back(base + a, base + b);
        }
}

std::string param_name(const std::string& stem, int a, int b = -1) {
    std::string s = stem + "(" + std::to_string(a);
    if (b >= 0)
        s += "," + std::to_string(b);
    return s + ")";
}

}  // namespace

LabeledGraph gen_Gl(int l) {
    require(l >= 1, "G_l requires l >= 1");
    EdgeList edges;
    for (int i = 1; i <= l; ++i)
        add_c4(edges, 4 * (i - 1));
    for (int i = 1; i < l; ++i)
        edges.emplace_back(4 * (i - 1) + 1, 4 * i + 1);
    return {Graph(4 * l, edges, param_name("G_l", l)), {}};
}

LabeledGraph gen_Gl_prime(int l) {
    require(l >= 1, "G_l' requires l >= 1");
    // Gadget a..f = 0..5; "x" is d.
    EdgeList edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 5}, {4, 5}};
    for (int i = 2; i <= l; ++i)
        add_c4(edges, 6 + 4 * (i - 2));
    if (l >= 2)
        edges.emplace_back(1, 6 + 1);
    for (int i = 2; i < l; ++i)
        edges.emplace_back(6 + 4 * (i - 2) + 1, 6 + 4 * (i - 1) + 1);
    return {Graph(4 * l + 2, edges, param_name("G_l'", l)), {{"x", 3}}};
}

LabeledGraph gen_Gl_double_prime(int l) {
    require(l >= 1, "G_l'' requires l >= 1");
    // Gadget x1..x6 = 0..5, y = 6; spine attaches at x5.
    EdgeList edges = {{1, 4}, {1, 2}, {1, 5}, {4, 0}, {2, 0}, {5, 0},
                      {1, 3}, {0, 6}, {3, 6}, {2, 6}, {2, 3}};
    for (int i = 2; i <= l; ++i)
        add_c4(edges, 7 + 4 * (i - 2));
    if (l >= 2)
        edges.emplace_back(4, 7 + 1);
    for (int i = 2; i < l; ++i)
        edges.emplace_back(7 + 4 * (i - 2) + 1, 7 + 4 * (i - 1) + 1);
    return {Graph(4 * l + 3, edges, param_name("G_l''", l)),
            {{"x1", 0}, {"x2", 1}, {"x3", 2}, {"x4", 3}, {"x5", 4}, {"x6", 5}, {"y", 6}}};
}

namespace {

LabeledGraph gen_kn_family(int k, int n, bool twin_hub, const std::string& stem) {
    require(k >= 2, stem + " requires k >= 2");
    require(n >= 4, stem + " requires n >= 4");
    EdgeList edges;
    add_clique(edges, 0, n, /*minus_edge=*/false);
    for (int i = 1; i < k; ++i)
        add_clique(edges, i * n, n, /*minus_edge=*/true);
    int u = k * n;
    std::map<std::string, int> landmarks = {{"u", u}};
    int hubs = 1;
    if (twin_hub) {
        landmarks["v"] = u + 1;
        hubs = 2;
    }
    for (int h = 0; h < hubs; ++h) {
        for (int j = 0; j < n; ++j)
            edges.emplace_back(u + h, j);
        for (int i = 1; i < k; ++i) {
            edges.emplace_back(u + h, i * n);      // missing-edge endpoints
            edges.emplace_back(u + h, i * n + 1);
        }
    }
    return {Graph(k * n + hubs, edges, param_name(stem, k, n)), std::move(landmarks)};
}

}  // namespace

LabeledGraph gen_Gkn(int k, int n) { return gen_kn_family(k, n, false, "G_{k,n}"); }

LabeledGraph gen_Hkn(int k, int n) { return gen_kn_family(k, n, true, "H_{k,n}"); }

LabeledGraph gen_G2l(int l) {
    require(l >= 3, "G_{2,l} requires l >= 3");
    int t = l - 1;
    int u = 3 * t, v = 3 * t + 1;
    EdgeList edges;
    for (int i = 1; i <= t; ++i)
        add_triangle(edges, i);
    edges.emplace_back(u, v);
    edges.emplace_back(u, triangle_vertex(1, 1));
    edges.emplace_back(v, triangle_vertex(1, 1));
    for (int i = 2; i <= t; ++i) {
        for (int j = 1; j <= 3; ++j)
            edges.emplace_back(u, triangle_vertex(i, j));
        edges.emplace_back(v, triangle_vertex(i, 1));
        edges.emplace_back(v, triangle_vertex(i, 2));
    }
    return {Graph(3 * t + 2, edges, param_name("G_{2,l}", 2, l)), {{"u", u}, {"v", v}}};
}

LabeledGraph gen_Gkl(int k, int l) {
    require(k >= 3 && k <= l, "G_{k,l} requires 3 <= k <= l");
    int t = k + l - 2;
    int u = 3 * t, v = 3 * t + 1;
    EdgeList edges;
    for (int i = 1; i <= t; ++i)
        add_triangle(edges, i);
    for (int i = 1; i <= t; ++i) {
        if (i <= k - 1) {
            edges.emplace_back(u, triangle_vertex(i, 1));
            for (int j = 1; j <= 3; ++j)
                edges.emplace_back(v, triangle_vertex(i, j));
        } else {
            for (int j = 1; j <= 3; ++j)
                edges.emplace_back(u, triangle_vertex(i, j));
            edges.emplace_back(v, triangle_vertex(i, 1));
            edges.emplace_back(v, triangle_vertex(i, 2));
        }
    }
    return {Graph(3 * t + 2, edges, param_name("G_{k,l}", k, l)), {{"u", u}, {"v", v}}};
}

LabeledGraph gen_H2l(int l) {
    require(l >= 3, "H_{2,l} requires l >= 3");
    int t = l - 1;
    int u = 3 * t, v = 3 * t + 1, w = 3 * t + 2;
    EdgeList edges;
    for (int i = 1; i <= t; ++i)
        add_triangle(edges, i);
    edges.emplace_back(u, v);
    edges.emplace_back(u, w);
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= 3; ++j) {
            edges.emplace_back(v, triangle_vertex(i, j));
            if (i >= 2 || j == 1)
                edges.emplace_back(u, triangle_vertex(i, j));
            if ((i >= 2 && j <= 2) || (i == 1 && j == 1))
                edges.emplace_back(w, triangle_vertex(i, j));
        }
    return {Graph(3 * t + 3, edges, param_name("H_{2,l}", 2, l)),
            {{"u", u}, {"v", v}, {"w", w}}};
}

LabeledGraph gen_Hkl(int k, int l) {
    require(k >= 3 && k <= l, "H_{k,l} requires 3 <= k <= l");
    int t = k + l - 2;
    int u = 3 * t, v = 3 * t + 1, w = 3 * t + 2;
    EdgeList edges;
    for (int i = 1; i <= t; ++i)
        add_triangle(edges, i);
    edges.emplace_back(u, v);
    for (int i = 1; i <= t; ++i) {
        edges.emplace_back(u, triangle_vertex(i, 1));
        edges.emplace_back(v, triangle_vertex(i, 1));
        edges.emplace_back(v, triangle_vertex(i, 2));
        edges.emplace_back(w, triangle_vertex(i, 1));
        edges.emplace_back(w, triangle_vertex(i, 2));
        if (i >= k) {
            edges.emplace_back(u, triangle_vertex(i, 2));
            edges.emplace_back(u, triangle_vertex(i, 3));
            edges.emplace_back(v, triangle_vertex(i, 3));
        } else {
            edges.emplace_back(w, triangle_vertex(i, 3));
        }
    }
    return {Graph(3 * t + 3, edges, param_name("H_{k,l}", k, l)),
            {{"u", u}, {"v", v}, {"w", w}}};
}

LabeledGraph gen_Fkl(int k, int l) {
    require(k >= 2 && k <= l, "F_{k,l} requires 2 <= k <= l");
    int t = k + l - 2;
    int u = 3 * t, v = 3 * t + 1;
    EdgeList edges;
    for (int i = 1; i <= t; ++i)
        add_triangle(edges, i);
    for (int i = 1; i <= t; ++i) {
        edges.emplace_back(u, triangle_vertex(i, 1));
        edges.emplace_back(u, triangle_vertex(i, 2));
        edges.emplace_back(v, triangle_vertex(i, 1));
        edges.emplace_back(v, triangle_vertex(i, 2));
        if (i >= k)
            edges.emplace_back(u, triangle_vertex(i, 3));
        else
            edges.emplace_back(v, triangle_vertex(i, 3));
    }
    return {Graph(3 * t + 2, edges, param_name("F_{k,l}", k, l)), {{"u", u}, {"v", v}}};
}

Graph gen_basic(BasicFamily family, int n) {
    EdgeList edges;
    switch (family) {
        case BasicFamily::Path:
            require(n >= 1, "path requires n >= 1");
            for (int i = 0; i + 1 < n; ++i)
                edges.emplace_back(i, i + 1);
            return Graph(n, edges, param_name("P", n));
        case BasicFamily::Cycle:
            require(n >= 3, "cycle requires n >= 3");
            for (int i = 0; i < n; ++i)
                edges.emplace_back(i, (i + 1) % n);
            return Graph(n, edges, param_name("C", n));
        case BasicFamily::Complete:
            require(n >= 1, "complete graph requires n >= 1");
            add_clique(edges, 0, n, false);
            return Graph(n, edges, param_name("K", n));
        case BasicFamily::CompleteMinusEdge:
            require(n >= 2, "K_n-e requires n >= 2");
            add_clique(edges, 0, n, true);
            return Graph(n, edges, param_name("K-e", n));
    }
    throw ParameterError("unknown basic family");
}

}  // namespace mbtd
