#pragma once

// Exact maximization of f(V) over signed bad functions (β_s) or bad
// functions (β_D): an exhaustive oracle and a branch-and-bound search.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "sign_assignment.hpp"

namespace sbn {

struct SolveResult {
    int value = 0;
    SignAssignment witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

inline constexpr int brute_force_default_cap = 24;
inline constexpr int brute_force_hard_cap = 30;
inline constexpr int branch_and_bound_default_cap = 40;

/// True iff f is valid for `mode` and has weight `claimed`.
inline bool verify_witness(const Graph& g, Mode mode, const SignAssignment& f, int claimed) {
    if (f.size() != g.order()) return false;
    return weight(f) == claimed && is_valid(g, f, mode);
}

/// Enumerates all 2^n labelings. Ties keep the first maximum in mask order.
inline SolveResult brute_force(const Graph& g, Mode mode, int cap = brute_force_default_cap) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.order();
    cap = std::min(cap, brute_force_hard_cap);
    if (n > cap) throw cap_exceeded("brute_force", n, cap);

    // Bit v of a mask set ⟺ f(v) = +1. Constraint at v: 2·|S ∩ C_v| − |C_v| ≤ 1.
    std::vector<std::uint32_t> scope(n, 0);
    std::vector<int> max_plus(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) scope[v] |= std::uint32_t{1} << w;
        if (mode == Mode::closed_neighborhood) scope[v] |= std::uint32_t{1} << v;
        max_plus[v] = (std::popcount(scope[v]) + 1) / 2;
    }

    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint32_t best_mask = 0;
    int best_plus = 0;  // all -1 is always valid
    for (std::uint64_t m = 1; m < total; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        const int plus = std::popcount(mask);
        if (plus <= best_plus) continue;
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) ok = std::popcount(mask & scope[v]) <= max_plus[v];
        if (ok) {
            best_plus = plus;
            best_mask = mask;
        }
    }

    std::vector<int> labels(n);
    for (Vertex v = 0; v < n; ++v) labels[v] = ((best_mask >> v) & 1) ? 1 : -1;
    SolveResult r;
    r.value = 2 * best_plus - n;
    r.witness = SignAssignment(std::move(labels));
    r.nodes_explored = total;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

namespace detail {

/// Depth-first search over vertices in descending-degree order, +1 before -1.
/// Each constraint tracks the decided sum and the number of undecided members;
/// a constraint whose minimum completion already equals 1 forces its
/// remaining members to -1.
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, Mode mode) : n_(g.order()), members_(n_), label_(n_, 0), sum_(n_, 0), open_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) {
            members_[v] = g.neighbors(v);
            if (mode == Mode::closed_neighborhood) {
                members_[v].push_back(v);
                std::sort(members_[v].begin(), members_[v].end());
            }
            open_[v] = static_cast<int>(members_[v].size());
        }
        // The members of constraint v are exactly the constraints containing v.
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        best_labels_.assign(n_, -1);
        best_ = -n_;
    }

    void run() { descend(0); }

    int best() const { return best_; }
    const std::vector<int>& best_labels() const { return best_labels_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Assigns v and propagates forced -1 labels. Returns false on a violated
    // constraint; every assignment made is pushed to trail_ either way.
    bool assign(Vertex v, int x) {
        std::size_t head = trail_.size();
        set(v, x);
        while (head < trail_.size()) {
            const Vertex u = trail_[head++];
            for (Vertex c : members_[u]) {
                const int floor = sum_[c] - open_[c];
                if (floor > 1) return false;
                if (floor == 1 && open_[c] > 0) {
                    for (Vertex w : members_[c]) {
                        if (label_[w] == 0) set(w, -1);
                    }
                }
            }
        }
        return true;
    }

    void set(Vertex v, int x) {
        label_[v] = x;
        decided_weight_ += x;
        --undecided_;
        for (Vertex c : members_[v]) {
            sum_[c] += x;
            --open_[c];
        }
        trail_.push_back(v);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Vertex v = trail_.back();
            trail_.pop_back();
            const int x = label_[v];
            for (Vertex c : members_[v]) {
                sum_[c] -= x;
                ++open_[c];
            }
            decided_weight_ -= x;
            ++undecided_;
            label_[v] = 0;
        }
    }

    void descend(int depth) {
        ++nodes_;
        // Optimistic completion labels every undecided vertex +1; its weight has
        // the parity of n, as does best_, so "cannot exceed" is "<= best_".
        if (decided_weight_ + undecided_ <= best_) return;
        while (depth < n_ && label_[order_[depth]] != 0) ++depth;
        if (depth == n_) {
            best_ = decided_weight_;
            best_labels_ = label_;
            return;
        }
        const Vertex v = order_[depth];
        for (int x : {1, -1}) {
            const std::size_t mark = trail_.size();
            if (assign(v, x)) descend(depth + 1);
            undo_to(mark);
        }
    }

    int n_;
    std::vector<std::vector<Vertex>> members_;
    std::vector<int> label_;
    std::vector<int> sum_;
    std::vector<int> open_;
    std::vector<Vertex> order_;
    std::vector<Vertex> trail_;
    int decided_weight_ = 0;
    int undecided_ = n_;
    int best_ = 0;
    std::vector<int> best_labels_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline SolveResult branch_and_bound(const Graph& g, Mode mode, int cap = branch_and_bound_default_cap) {
    const auto start = std::chrono::steady_clock::now();
    if (g.order() > cap) throw cap_exceeded("branch_and_bound", g.order(), cap);
    detail::BranchAndBound search(g, mode);
    search.run();
    SolveResult r;
    r.value = search.best();
    r.witness = SignAssignment(search.best_labels());
    r.nodes_explored = search.nodes();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

enum class Algorithm { branch_and_bound, brute_force };

inline SolveResult solve(const Graph& g, Mode mode, Algorithm algorithm, int cap) {
    return algorithm == Algorithm::brute_force ? brute_force(g, mode, cap) : branch_and_bound(g, mode, cap);
}

}  // namespace sbn
