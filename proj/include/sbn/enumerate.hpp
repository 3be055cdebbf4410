#pragma once

// Exhaustive generation of small graphs up to isomorphism, by adding one
// vertex at a time to every class of the previous order and deduplicating
// with canonical codes.

#include <istream>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isomorphism.hpp"

namespace sbn {

inline constexpr int enumeration_cap = 9;

struct CorpusFilter {
    int n = 1;
    bool require_triangle_free = false;
    int min_degree = 0;
    bool require_bipartite = false;
};

inline bool passes(const CorpusFilter& filter, const Graph& g) {
    return g.order() == filter.n && (!filter.require_triangle_free || is_triangle_free(g)) &&
           min_degree(g) >= filter.min_degree && (!filter.require_bipartite || is_bipartite(g));
}

namespace detail {

// All classes of the given order closed under the hereditary conditions
// (triangle-free, bipartite); min-degree is applied by the caller.
inline std::vector<Graph> hereditary_classes(int n, bool triangle_free, bool bipartite) {
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::set<CanonicalCode> seen;
        std::vector<Graph> next;
        for (const Graph& h : level) {
            const auto edges = h.edges();
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
                if (triangle_free) {
                    bool independent = true;
                    for (auto [u, v] : edges) {
                        if (((mask >> u) & 1) && ((mask >> v) & 1)) {
                            independent = false;
                            break;
                        }
                    }
                    if (!independent) continue;
                }
                auto extended = edges;
                for (Vertex u = 0; u < k; ++u) {
                    if ((mask >> u) & 1) extended.emplace_back(u, k);
                }
                Graph g = Graph::from_edges(k + 1, extended);
                if (bipartite && !is_bipartite(g)) continue;
                auto form = canonical_form(g);
                if (seen.insert(form.code).second) next.push_back(std::move(form.graph));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace detail

/// One canonical representative per isomorphism class passing `filter`,
/// ordered by canonical code (descending, i.e. denser graphs first).
inline std::vector<Graph> enumerate_graphs(const CorpusFilter& filter) {
    if (filter.n < 1) throw std::invalid_argument("enumerate_graphs: n must be >= 1");
    if (filter.n > enumeration_cap) {
        throw cap_exceeded("enumerate_graphs (supply larger corpora as graph6 via ingest_graph6)", filter.n,
                           enumeration_cap);
    }
    auto classes = detail::hereditary_classes(filter.n, filter.require_triangle_free, filter.require_bipartite);
    std::vector<std::pair<CanonicalCode, Graph>> keyed;
    for (auto& g : classes) {
        if (passes(filter, g)) keyed.emplace_back(canonical_code(g), std::move(g));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [code, g] : keyed) out.push_back(std::move(g));
    return out;
}

/// Every order 1..max_n, concatenated in increasing order.
inline std::vector<Graph> enumerate_graphs_up_to(int max_n, CorpusFilter filter) {
    if (max_n > enumeration_cap) {
        throw cap_exceeded("enumerate_graphs (supply larger corpora as graph6 via ingest_graph6)", max_n, enumeration_cap);
    }
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        filter.n = n;
        for (auto& g : enumerate_graphs(filter)) out.push_back(std::move(g));
    }
    return out;
}

/// Decodes graph6 lines; with a filter, keeps only passing graphs (the
/// filter's `n` is ignored when `any_order` is set).
inline std::vector<Graph> ingest_graph6(std::istream& in, const CorpusFilter* filter = nullptr, bool any_order = true) {
    std::vector<Graph> out;
    for (auto& item : read_graph6_stream(in)) {
        if (filter) {
            CorpusFilter f = *filter;
            if (any_order) f.n = item.graph.order();
            if (!passes(f, item.graph)) continue;
        }
        out.push_back(std::move(item.graph));
    }
    return out;
}

}  // namespace sbn
