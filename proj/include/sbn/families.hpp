#pragma once

// The extremal families Λ (equality for the β_s bound) and Ω (equality for
// the β_D bound), their recognizers, and the bipartite family on which the
// earlier β_D bound fails.
//
// Vertex numbering of a family member with parameter p follows corona():
// the K_{p,p} core is 0..2p-1 (parts 0..p-1 and p..2p-1), then copy i of
// the pendant set occupies a contiguous block attached to core vertex i.

#include <algorithm>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "sign_assignment.hpp"

namespace sbn {

enum class Family { lambda, omega };

inline std::string_view to_string(Family f) { return f == Family::lambda ? "lambda" : "omega"; }

/// Pendants per core vertex: p+2 for Λ, p+1 for Ω.
inline int pendants_per_core(Family family, int p) { return family == Family::lambda ? p + 2 : p + 1; }

/// Max degree allowed inside the pendant-induced subgraph.
inline int pendant_degree_limit(Family family) { return family == Family::lambda ? 1 : 2; }

/// 2p² + 6p (Λ) or 2p² + 4p (Ω).
inline int family_order(Family family, int p) { return 2 * p * (1 + pendants_per_core(family, p)); }

struct FamilyParams {
    Family family = Family::lambda;
    int p = 1;
    std::vector<Edge> extra_edges;
};

namespace detail {

inline Graph family_base(Family family, int p) {
    return corona(complete_bipartite(p, p), empty_graph(pendants_per_core(family, p)));
}

inline std::string edge_str(Edge e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

}  // namespace detail

/// Builds the family member described by `params`. Throws std::invalid_argument
/// when p < 1, an extra edge touches a core vertex, the pendant subgraph
/// exceeds its degree limit, or the result contains a triangle.
inline Graph family_member(const FamilyParams& params) {
    if (params.p < 1) throw std::invalid_argument("family parameter p must be >= 1");
    const Graph base = detail::family_base(params.family, params.p);
    const int core = 2 * params.p;
    for (auto e : params.extra_edges) {
        if (e.first < core || e.second < core || e.first >= base.order() || e.second >= base.order() ||
            e.first == e.second) {
            throw std::invalid_argument("extra edge " + detail::edge_str(e) + " must join two distinct pendant vertices in " +
                                        std::to_string(core) + ".." + std::to_string(base.order() - 1));
        }
    }
    Graph g = with_edges(base, params.extra_edges);
    const int limit = pendant_degree_limit(params.family);
    for (Vertex v = core; v < g.order(); ++v) {
        // one neighbor is the core vertex
        if (g.degree(v) - 1 > limit) {
            throw std::invalid_argument("pendant vertex " + std::to_string(v) + " has " + std::to_string(g.degree(v) - 1) +
                                        " pendant neighbors, limit is " + std::to_string(limit));
        }
    }
    if (!is_triangle_free(g)) throw std::invalid_argument("extra edges create a triangle");
    return g;
}

inline Graph lambda_member(int p, std::vector<Edge> extra = {}) {
    return family_member({Family::lambda, p, std::move(extra)});
}

inline Graph omega_member(int p, std::vector<Edge> extra = {}) {
    return family_member({Family::omega, p, std::move(extra)});
}

/// P₂ ∘ K̄₃, the Λ member with p = 1 and no extra edges.
inline Graph bistar() { return corona(path(2), empty_graph(3)); }

/// −1 on the K_{p,p} core (vertices 0..2p-1), +1 elsewhere.
inline SignAssignment core_negative_assignment(int n, int p) {
    std::vector<int> labels(n, 1);
    for (int v = 0; v < 2 * p && v < n; ++v) labels[v] = -1;
    return SignAssignment(std::move(labels));
}

// ---------------------------------------------------------------- recognition

struct MembershipVerdict {
    bool is_member = false;
    int p = 0;                  // pinned by the order; 0 if no p fits
    std::vector<Vertex> core;   // K_{p,p} core when is_member
    int min_degree = 0;
    std::string reason;         // first violated condition when !is_member
};

namespace detail {

// Checks conditions (a)-(e) for a candidate core. Returns an empty string on success.
inline std::string check_core(const Graph& g, Family family, int p, const std::vector<Vertex>& core) {
    std::vector<bool> in_core(g.order(), false);
    for (Vertex v : core) in_core[v] = true;

    const auto sub = induced_subgraph(g, core);
    const auto colors = two_coloring(sub.graph);
    if (colors.empty()) return "core is not bipartite";
    const auto left = std::count(colors.begin(), colors.end(), 0);
    if (left != p || static_cast<int>(sub.graph.edge_count()) != p * p) return "core does not induce K_{p,p}";

    const int pendants = pendants_per_core(family, p);
    const int limit = pendant_degree_limit(family);
    for (Vertex v = 0; v < g.order(); ++v) {
        int inside = 0;
        for (Vertex w : g.neighbors(v)) inside += in_core[w] ? 1 : 0;
        if (in_core[v]) {
            if (g.degree(v) - inside != pendants) {
                return "core vertex " + std::to_string(v) + " has " + std::to_string(g.degree(v) - inside) +
                       " outside neighbors, expected " + std::to_string(pendants);
            }
        } else {
            if (inside != 1) {
                return "vertex " + std::to_string(v) + " has " + std::to_string(inside) + " core neighbors, expected 1";
            }
            if (g.degree(v) - 1 > limit) {
                return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v) - 1) +
                       " outside the core, limit " + std::to_string(limit);
            }
        }
    }
    if (!is_triangle_free(g)) return "graph contains a triangle";
    return {};
}

}  // namespace detail

/// Decides membership in Λ or Ω. The order pins p; the core is then forced
/// to be the vertices of degree above the pendant maximum, except for Ω with
/// p = 1 (order 6) where every edge is tried as the core.
inline MembershipVerdict recognize_family(const Graph& g, Family family) {
    MembershipVerdict verdict;
    verdict.min_degree = min_degree(g);

    const int n = g.order();
    int p = 1;
    while (family_order(family, p) < n) ++p;
    if (family_order(family, p) != n) {
        verdict.reason = "order " + std::to_string(n) + " is not 2p^2+" + (family == Family::lambda ? "6" : "4") + "p";
        return verdict;
    }
    verdict.p = p;

    std::vector<std::vector<Vertex>> candidates;
    // Pendant degree ≤ 1 + limit; core degree = p + pendants ≥ limit + 2 in every case but Ω, p = 1.
    const int pendant_max = 1 + pendant_degree_limit(family);
    if (family == Family::omega && p == 1) {
        for (auto [u, v] : g.edges()) candidates.push_back({u, v});
    } else {
        std::vector<Vertex> core;
        for (Vertex v = 0; v < n; ++v) {
            if (g.degree(v) > pendant_max) core.push_back(v);
        }
        if (static_cast<int>(core.size()) != 2 * p) {
            verdict.reason = std::to_string(core.size()) + " vertices of degree > " + std::to_string(pendant_max) +
                             ", expected a core of " + std::to_string(2 * p);
            return verdict;
        }
        candidates.push_back(std::move(core));
    }

    for (const auto& core : candidates) {
        auto why = detail::check_core(g, family, p, core);
        if (why.empty()) {
            verdict.is_member = true;
            verdict.core = core;
            verdict.reason.clear();
            return verdict;
        }
        if (verdict.reason.empty()) verdict.reason = std::move(why);
    }
    if (verdict.reason.empty()) verdict.reason = "no candidate core";
    return verdict;
}

inline MembershipVerdict is_lambda_member(const Graph& g) { return recognize_family(g, Family::lambda); }
inline MembershipVerdict is_omega_member(const Graph& g) { return recognize_family(g, Family::omega); }

// ---------------------------------------------------------------- earlier-bound counterexample

struct Counterexample {
    Graph graph;
    SignAssignment assignment;
};

/// K_{p,p} ∘ K̄_{p+1} with two new leaves hung on every pendant vertex.
/// Numbering: core 0..2p-1, pendants 2p..2p+2p(p+1)-1 in corona order,
/// then the two leaves of pendant k at consecutive ids. The assignment is
/// −1 on the core and +1 elsewhere.
inline Counterexample counterexample_t12(int p) {
    if (p < 1) throw std::invalid_argument("counterexample_t12 needs p >= 1");
    const Graph base = corona(complete_bipartite(p, p), empty_graph(p + 1));
    const int core = 2 * p;
    const int pendants = base.order() - core;
    auto edges = base.edges();
    int next = base.order();
    for (int k = 0; k < pendants; ++k) {
        edges.emplace_back(core + k, next++);
        edges.emplace_back(core + k, next++);
    }
    Graph g = Graph::from_edges(next, edges);
    return {g, core_negative_assignment(g.order(), p)};
}

// ---------------------------------------------------------------- text form

/// Parses "lambda p=2 extra=(4,10),(5,11)" (also "omega ..."); the extra
/// clause is optional, whitespace inside it is ignored.
inline FamilyParams parse_family_params(std::string_view text) {
    static const std::regex grammar(R"(^\s*(lambda|omega)\s+p\s*=\s*(\d+)(?:\s+extra\s*=\s*(.*?))?\s*$)");
    static const std::regex pair(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, grammar)) {
        throw input_error("family params: expected '<lambda|omega> p=<int> [extra=(u,v),...]', got '" + s + "'");
    }
    FamilyParams params;
    params.family = m[1] == "lambda" ? Family::lambda : Family::omega;
    params.p = std::stoi(m[2]);
    if (m[3].matched) {
        std::string list = m[3];
        std::string rest;
        auto begin = std::sregex_iterator(list.begin(), list.end(), pair);
        std::size_t consumed = 0;
        for (auto it = begin; it != std::sregex_iterator(); ++it) {
            const auto& pm = *it;
            auto gap = list.substr(consumed, pm.position() - consumed);
            if (gap.find_first_not_of(" ,") != std::string::npos || (consumed > 0 && gap.find(',') == std::string::npos)) {
                throw input_error("family params: malformed edge list '" + list + "'");
            }
            params.extra_edges.emplace_back(std::stoi(pm[1]), std::stoi(pm[2]));
            consumed = pm.position() + pm.length();
        }
        if (params.extra_edges.empty() || list.substr(consumed).find_first_not_of(' ') != std::string::npos) {
            throw input_error("family params: malformed edge list '" + list + "'");
        }
    }
    return params;
}

/// Parses a bare edge list "(4,10),(5,11)".
inline std::vector<Edge> parse_edge_pairs(std::string_view text) {
    std::string probe = "lambda p=1 extra=" + std::string(text);
    return parse_family_params(probe).extra_edges;
}

inline std::string format_family_params(const FamilyParams& params) {
    std::string out = std::string(to_string(params.family)) + " p=" + std::to_string(params.p);
    if (!params.extra_edges.empty()) {
        out += " extra=";
        for (std::size_t i = 0; i < params.extra_edges.size(); ++i) {
            if (i) out += ',';
            out += detail::edge_str(params.extra_edges[i]);
        }
    }
    return out;
}

}  // namespace sbn
