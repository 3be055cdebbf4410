#pragma once

// Immutable simple undirected graphs on vertices 0..n-1, plus the
// constructors and structural queries used throughout the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
public:
    /// Edgeless graph on `n` vertices. A graph always has at least one vertex.
    explicit Graph(int n = 1) : adjacency_(check_order(n)) {}

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    static Graph from_edges(int n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            g.check_pair(u, v);
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        g.normalize();
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }

    /// Sorted neighbor list of `v`.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nu = neighbors(u);
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u) {
            for (Vertex v : adjacency_[u]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    /// Labeled equality (same vertex count and identical edge sets).
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static std::size_t check_order(int n) {
        if (n < 1) throw std::invalid_argument("graph order must be at least 1, got " + std::to_string(n));
        return static_cast<std::size_t>(n);
    }

    void check_pair(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || u >= order() || v >= order()) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for order " + std::to_string(order()));
        }
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) + " is not allowed");
    }

    void normalize() {
        std::size_t total = 0;
        for (auto& nbrs : adjacency_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            total += nbrs.size();
        }
        edge_count_ = total / 2;
    }

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }
inline std::size_t edge_count(const Graph& g) { return g.edge_count(); }

inline int min_degree(const Graph& g) {
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

inline int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> seq(g.order());
    for (Vertex v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
    return seq;
}

// ---------------------------------------------------------------- builders

inline Graph empty_graph(int m) {
    if (m < 1) throw std::invalid_argument("empty_graph needs at least one vertex");
    return Graph(m);
}

/// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs both parts non-empty");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a) * b);
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(a + b, edges);
}

inline Graph path(int m) {
    if (m < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(m, edges);
}

inline Graph cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
    return Graph::from_edges(m, edges);
}

inline Graph complete_graph(int m) {
    if (m < 1) throw std::invalid_argument("complete_graph needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(m, edges);
}

/// Disjoint union; vertices of `h` are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return Graph::from_edges(g.order() + h.order(), edges);
}

/// First vertex of copy `i` in corona(g1, g2).
inline Vertex corona_copy_start(const Graph& g1, const Graph& g2, int i) {
    return g1.order() + i * g2.order();
}

/// g1 ∘ g2. Vertices of g1 keep ids 0..n1-1; copy i of g2 occupies the
/// contiguous block starting at n1 + i*n2 and is fully joined to vertex i.
inline Graph corona(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    auto edges = g1.edges();
    const auto inner = g2.edges();
    for (Vertex i = 0; i < n1; ++i) {
        const Vertex base = corona_copy_start(g1, g2, i);
        for (Vertex w = 0; w < n2; ++w) edges.emplace_back(i, base + w);
        for (auto [u, v] : inner) edges.emplace_back(base + u, base + v);
    }
    return Graph::from_edges(n1 * (1 + n2), edges);
}

/// Returns g plus `extra`. Existing edges are kept; re-adding is a no-op.
inline Graph with_edges(const Graph& g, std::span<const Edge> extra) {
    auto edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph::from_edges(g.order(), edges);
}

inline Graph with_edges(const Graph& g, std::initializer_list<Edge> extra) {
    return with_edges(g, std::span<const Edge>(extra.begin(), extra.size()));
}

struct InducedSubgraph {
    Graph graph;
    /// original_ids[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> original_ids;
};

/// Subgraph induced by `vertices` (deduplicated, renumbered in increasing
/// order of the original ids).
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw std::invalid_argument("induced_subgraph needs a non-empty vertex set");
    if (ids.front() < 0 || ids.back() >= g.order()) throw std::invalid_argument("induced_subgraph vertex out of range");

    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (Vertex w : g.neighbors(ids[i])) {
            if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[w]);
        }
    }
    return {Graph::from_edges(static_cast<int>(ids.size()), edges), std::move(ids)};
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.order(), edges);
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), edges);
}

// ---------------------------------------------------------------- queries

inline bool is_triangle_free(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& nu = g.neighbors(u);
        for (Vertex v : nu) {
            if (v <= u) continue;
            // common neighbor of u and v closes a triangle
            const auto& nv = g.neighbors(v);
            auto a = nu.begin();
            auto b = nv.begin();
            while (a != nu.end() && b != nv.end()) {
                if (*a == *b) return false;
                if (*a < *b) ++a; else ++b;
            }
        }
    }
    return true;
}

/// BFS 2-coloring. Returns colors (0/1) or an empty vector if an odd cycle exists.
inline std::vector<int> two_coloring(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<Vertex> todo;
        todo.push(s);
        while (!todo.empty()) {
            Vertex u = todo.front();
            todo.pop();
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    todo.push(w);
                } else if (color[w] == color[u]) {
                    return {};
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return !two_coloring(g).empty(); }

}  // namespace sbn
