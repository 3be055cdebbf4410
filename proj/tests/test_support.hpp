#pragma once

// Test-only generators and oracles. Nothing here calls the code paths it is
// used to check: isomorphism by trying every permutation, optima by
// enumerating labelings through the plain validity predicates.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sbn/families.hpp"
#include "sbn/graph.hpp"
#include "sbn/sign_assignment.hpp"

namespace sbn::testing {

inline Graph random_graph(std::mt19937& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Labeled graph number `code` on n vertices (bit k ↔ k-th pair in (0,1),(0,2),...).
inline Graph labeled_graph(int n, std::uint32_t code) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

inline bool naive_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Maximum weight over all valid labelings, enumerated through is_valid().
inline int naive_optimum(const Graph& g, Mode mode) {
    const int n = g.order();
    int best = -n;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> labels(n);
        for (int v = 0; v < n; ++v) labels[v] = ((mask >> v) & 1) ? 1 : -1;
        SignAssignment f(labels);
        if (is_valid(g, f, mode)) best = std::max(best, weight(f));
    }
    return best;
}

/// All valid labelings of g for `mode`.
inline std::vector<SignAssignment> all_valid(const Graph& g, Mode mode) {
    std::vector<SignAssignment> out;
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> labels(n);
        for (int v = 0; v < n; ++v) labels[v] = ((mask >> v) & 1) ? 1 : -1;
        SignAssignment f(labels);
        if (is_valid(g, f, mode)) out.push_back(std::move(f));
    }
    return out;
}

/// Random extra pendant edges that keep a family member legal: only
/// cross-copy pairs, pendant degree within the limit, no triangle.
inline std::vector<Edge> random_legal_extra(std::mt19937& rng, Family family, int p, int attempts) {
    const int core = 2 * p;
    const int size = pendants_per_core(family, p);
    const int n = core + core * size;
    const int limit = pendant_degree_limit(family);
    std::uniform_int_distribution<int> pick(core, n - 1);
    std::vector<Edge> extra;
    std::vector<int> deg(n, 0);
    for (int k = 0; k < attempts; ++k) {
        int u = pick(rng), v = pick(rng);
        if (u == v || (u - core) / size == (v - core) / size) continue;
        if (deg[u] >= limit || deg[v] >= limit) continue;
        if (std::find(extra.begin(), extra.end(), Edge{std::min(u, v), std::max(u, v)}) != extra.end()) continue;
        auto trial = extra;
        trial.emplace_back(std::min(u, v), std::max(u, v));
        auto g = with_edges(corona(complete_bipartite(p, p), empty_graph(size)), trial);
        if (!is_triangle_free(g)) continue;
        extra = std::move(trial);
        ++deg[u];
        ++deg[v];
    }
    return extra;
}

}  // namespace sbn::testing
