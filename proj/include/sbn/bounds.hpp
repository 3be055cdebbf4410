#pragma once

// Upper bounds on β_s and β_D for triangle-free graphs, the two earlier
// bipartite bounds they replace, and Mantel's edge bound. Every comparison
// is exact: a bound of the form n + a − 2√r is compared through squares.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "graph.hpp"
#include "isomorphism.hpp"

namespace sbn {

/// ⌊√x⌋ for x ≥ 0.
inline std::int64_t isqrt_floor(std::int64_t x) {
    if (x < 0) throw std::domain_error("isqrt of a negative number");
    if (x < 2) return x;
    // correct the floating estimate in division form so r*r never overflows
    auto r = std::min<std::int64_t>(static_cast<std::int64_t>(std::sqrt(static_cast<double>(x))), 3037000499);
    while (r > x / r) --r;
    while (r + 1 <= x / (r + 1)) ++r;
    return r;
}

/// ⌈√x⌉ for x ≥ 0.
inline std::int64_t isqrt_ceil(std::int64_t x) {
    const auto r = isqrt_floor(x);
    return r * r == x ? r : r + 1;
}

inline bool is_perfect_square(std::int64_t x) { return x >= 0 && isqrt_floor(x) * isqrt_floor(x) == x; }

/// Rendering helper: three decimals, never "-0".
inline double round3(double x) {
    const double r = std::round(x * 1000.0) / 1000.0;
    return r == 0.0 ? 0.0 : r;
}

// ---------------------------------------------------------------- triangle-free bounds

/// n + 6 − 2√(9+2n): bound on β_s for triangle-free graphs with δ ≥ 1.
inline double bound_bs_new(int n) { return n + 6.0 - 2.0 * std::sqrt(9.0 + 2.0 * n); }

/// n + 4 − 2√(4+2n): bound on β_D for triangle-free graphs with δ ≥ 2.
inline double bound_bd_new(int n) { return n + 4.0 - 2.0 * std::sqrt(4.0 + 2.0 * n); }

/// β ≤ n + 6 − 2√(9+2n) ⟺ 4(9+2n) ≤ (n+6−β)² with n+6−β ≥ 0.
inline bool holds_bs(std::int64_t n, std::int64_t beta) {
    const std::int64_t gap = n + 6 - beta;
    return gap >= 0 && 4 * (9 + 2 * n) <= gap * gap;
}

inline bool equal_bs(std::int64_t n, std::int64_t beta) {
    const std::int64_t gap = n + 6 - beta;
    return gap >= 0 && 4 * (9 + 2 * n) == gap * gap;
}

inline bool holds_bd(std::int64_t n, std::int64_t beta) {
    const std::int64_t gap = n + 4 - beta;
    return gap >= 0 && 4 * (4 + 2 * n) <= gap * gap;
}

inline bool equal_bd(std::int64_t n, std::int64_t beta) {
    const std::int64_t gap = n + 4 - beta;
    return gap >= 0 && 4 * (4 + 2 * n) == gap * gap;
}

namespace detail {
// Largest b ≡ n (mod 2) with b ≤ n + offset − ⌈√(4·radicand)⌉.
inline std::int64_t parity_floor_bound(std::int64_t n, std::int64_t offset, std::int64_t radicand) {
    std::int64_t b = n + offset - isqrt_ceil(4 * radicand);
    if ((b - n) % 2 != 0) --b;
    return b;
}
}  // namespace detail

/// Largest b with the parity of n satisfying holds_bs(n, b).
inline std::int64_t refined_bound_bs(std::int64_t n) { return detail::parity_floor_bound(n, 6, 9 + 2 * n); }

/// Largest b with the parity of n satisfying holds_bd(n, b).
inline std::int64_t refined_bound_bd(std::int64_t n) { return detail::parity_floor_bound(n, 4, 4 + 2 * n); }

// ---------------------------------------------------------------- earlier bipartite bounds

/// n + 2 − 2⌈√(n+2)⌉
inline std::int64_t bound_bs_old(std::int64_t n) { return n + 2 - 2 * isqrt_ceil(n + 2); }

inline bool holds_bs_old(std::int64_t n, std::int64_t beta) { return beta <= bound_bs_old(n); }

/// n + 3 − √(4n+9)
inline double bound_bd_old(int n) { return n + 3.0 - std::sqrt(4.0 * n + 9.0); }

/// β ≤ n + 3 − √(4n+9) ⟺ 4n+9 ≤ (n+3−β)² with n+3−β ≥ 0.
inline bool holds_bd_old(std::int64_t n, std::int64_t beta) {
    const std::int64_t gap = n + 3 - beta;
    return gap >= 0 && 4 * n + 9 <= gap * gap;
}

/// n + 6 − ⌈2√(9+2n)⌉ ≤ n + 2 − 2⌈√(n+2)⌉, i.e. the rounded triangle-free
/// bound is at least as strong as the old bipartite one at order n.
inline bool remark_inequality_check(std::int64_t n) {
    return n + 6 - isqrt_ceil(4 * (9 + 2 * n)) <= bound_bs_old(n);
}

// ---------------------------------------------------------------- Mantel

inline std::int64_t mantel_max_edges(std::int64_t n) { return n * n / 4; }

/// K_{⌊n/2⌋,⌈n/2⌉}; K₁ for n = 1.
inline Graph balanced_complete_bipartite(int n) {
    if (n < 1) throw std::invalid_argument("balanced_complete_bipartite needs n >= 1");
    if (n == 1) return empty_graph(1);
    return complete_bipartite(n / 2, n - n / 2);
}

/// Triangle-free, ⌊n²/4⌋ edges, and ≅ K_{⌊n/2⌋,⌈n/2⌉}. The edge-count and
/// isomorphism conditions are evaluated independently; a triangle-free graph
/// meeting one but not the other would contradict Mantel and throws.
inline bool mantel_extremal_check(const Graph& g, int isomorphism_cap = default_isomorphism_cap) {
    if (!is_triangle_free(g)) return false;
    const bool tight = static_cast<std::int64_t>(g.edge_count()) == mantel_max_edges(g.order());
    const bool balanced = are_isomorphic(g, balanced_complete_bipartite(g.order()), isomorphism_cap);
    if (tight != balanced) throw std::logic_error("Mantel equality and balanced-bipartite isomorphism disagree");
    return tight;
}

}  // namespace sbn
