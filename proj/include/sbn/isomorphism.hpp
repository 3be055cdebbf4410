#pragma once

// Small-order isomorphism: a pruned permutation search for pairwise tests and
// a refinement-plus-individualization canonical form for deduplication.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace sbn {

inline constexpr int default_isomorphism_cap = 16;

namespace detail {

// (degree, sorted neighbor degrees), invariant under isomorphism.
inline std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        sig[v].push_back(g.degree(v));
        std::vector<int> nd;
        for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), map_(a.order(), -1), used_(b.order(), false) {
        const auto sa = vertex_signatures(a);
        const auto sb = vertex_signatures(b);
        std::map<std::vector<int>, std::vector<Vertex>> classes;
        for (Vertex v = 0; v < b.order(); ++v) classes[sb[v]].push_back(v);
        candidates_.resize(a.order());
        for (Vertex v = 0; v < a.order(); ++v) {
            auto it = classes.find(sa[v]);
            if (it != classes.end()) candidates_[v] = it->second;
        }
        // Rare signatures first; ties broken toward vertices adjacent to earlier picks.
        order_.resize(a.order());
        std::vector<bool> placed(a.order(), false);
        for (int k = 0; k < a.order(); ++k) {
            Vertex best = -1;
            int best_links = -1;
            for (Vertex v = 0; v < a.order(); ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (Vertex w : a.neighbors(v)) links += placed[w] ? 1 : 0;
                if (best == -1 || candidates_[v].size() < candidates_[best].size() ||
                    (candidates_[v].size() == candidates_[best].size() && links > best_links)) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            order_[k] = best;
        }
    }

    bool run() { return extend(0); }

    const std::vector<Vertex>& mapping() const { return map_; }

private:
    bool extend(int depth) {
        if (depth == a_.order()) return true;
        const Vertex v = order_[depth];
        for (Vertex image : candidates_[v]) {
            if (used_[image] || !consistent(depth, v, image)) continue;
            map_[v] = image;
            used_[image] = true;
            if (extend(depth + 1)) return true;
            used_[image] = false;
            map_[v] = -1;
        }
        return false;
    }

    bool consistent(int depth, Vertex v, Vertex image) const {
        for (int k = 0; k < depth; ++k) {
            const Vertex u = order_[k];
            if (a_.has_edge(u, v) != b_.has_edge(map_[u], image)) return false;
        }
        return true;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    std::vector<std::vector<Vertex>> candidates_;
    std::vector<Vertex> order_;
};

}  // namespace detail

/// Exact isomorphism test by backtracking over signature-compatible images.
/// Rejects orders above `cap`.
inline bool are_isomorphic(const Graph& a, const Graph& b, int cap = default_isomorphism_cap) {
    if (a.order() > cap) throw cap_exceeded("are_isomorphic", a.order(), cap);
    if (b.order() > cap) throw cap_exceeded("are_isomorphic", b.order(), cap);
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    auto da = degree_sequence(a);
    auto db = degree_sequence(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    detail::IsomorphismSearch search(a, b);
    return search.run();
}

// ---------------------------------------------------------------- canonical form

inline constexpr int canonical_form_cap = 64;

/// Upper-triangle adjacency bits of a canonically relabeled graph; equal
/// codes ⟺ isomorphic graphs (same order).
struct CanonicalCode {
    int order = 0;
    std::vector<std::uint64_t> words;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), rows_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex w : g.neighbors(v)) rows_[v] |= std::uint64_t{1} << w;
        }
    }

    void run() {
        std::vector<int> cells(n_, 0);
        refine(cells);
        search(cells);
    }

    CanonicalCode code() const { return {n_, best_code_}; }
    /// best_label_[v] is the canonical position of vertex v.
    const std::vector<Vertex>& labeling() const { return best_label_; }

private:
    int cell_count(const std::vector<int>& cells) const {
        return n_ == 0 ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
    }

    // Equitable refinement: split cells by neighbor counts into every cell,
    // ranking new cells by (old cell, count vector). Label-invariant.
    void refine(std::vector<int>& cells) const {
        int k = cell_count(cells);
        while (true) {
            std::vector<std::vector<int>> sig(n_);
            for (Vertex v = 0; v < n_; ++v) {
                sig[v].assign(k + 1, 0);
                sig[v][0] = cells[v];
                for (Vertex w : g_.neighbors(v)) ++sig[v][1 + cells[w]];
            }
            auto distinct = sig;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (Vertex v = 0; v < n_; ++v) {
                cells[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
            }
            const int next = static_cast<int>(distinct.size());
            if (next == k) return;
            k = next;
        }
    }

    bool twins(Vertex u, Vertex v) const {
        const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return (rows_[u] & mask) == (rows_[v] & mask);
    }

    void search(const std::vector<int>& cells) {
        const int k = cell_count(cells);
        if (k == n_) {
            leaf(cells);
            return;
        }
        std::vector<int> size(k, 0);
        for (int c : cells) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;

        std::vector<Vertex> tried;
        for (Vertex v = 0; v < n_; ++v) {
            if (cells[v] != target) continue;
            // Swapping twins is an automorphism fixing everything individualized so far.
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
            tried.push_back(v);
            std::vector<int> next(cells);
            for (Vertex w = 0; w < n_; ++w) {
                if (w != v && cells[w] >= target) ++next[w];
            }
            refine(next);
            search(next);
        }
    }

    void leaf(const std::vector<int>& label) {
        std::vector<Vertex> at(n_);
        for (Vertex v = 0; v < n_; ++v) at[label[v]] = v;
        std::vector<std::uint64_t> code((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 63) / 64, 0);
        std::size_t bit = 0;
        for (int j = 1; j < n_; ++j) {
            const std::uint64_t row = rows_[at[j]];
            for (int i = 0; i < j; ++i, ++bit) {
                if ((row >> at[i]) & 1) code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
            }
        }
        if (best_label_.empty() || code > best_code_) {
            best_code_ = std::move(code);
            best_label_ = label;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> best_code_;
    std::vector<Vertex> best_label_;
};

}  // namespace detail

struct CanonicalForm {
    CanonicalCode code;
    /// labeling[v] = canonical id of vertex v.
    std::vector<Vertex> labeling;
    Graph graph;
};

inline CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > canonical_form_cap) throw cap_exceeded("canonical_form", g.order(), canonical_form_cap);
    detail::CanonicalSearch search(g);
    search.run();
    return {search.code(), search.labeling(), relabel(g, search.labeling())};
}

inline CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

}  // namespace sbn
