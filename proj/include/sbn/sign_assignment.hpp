#pragma once

// {-1,+1} vertex labelings and the neighborhood-sum predicates that define
// signed bad functions (closed neighborhoods) and bad functions (open ones).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace sbn {

/// Which neighborhood each constraint f(N·(v)) <= 1 ranges over.
enum class Mode {
    closed_neighborhood,  // signed bad function, maximum weight β_s
    open_neighborhood,    // bad function, maximum weight β_D
};

inline std::string_view to_string(Mode mode) {
    return mode == Mode::closed_neighborhood ? "sbf" : "bf";
}

class SignAssignment {
public:
    SignAssignment() = default;

    /// Every entry must be exactly -1 or +1.
    explicit SignAssignment(std::vector<int> labels) : labels_(std::move(labels)) {
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (labels_[v] != 1 && labels_[v] != -1) {
                throw std::invalid_argument("label at vertex " + std::to_string(v) + " is " +
                                            std::to_string(labels_[v]) + ", expected -1 or +1");
            }
        }
    }

    static SignAssignment uniform(int n, int label) { return SignAssignment(std::vector<int>(n, label)); }

    /// Text form over {'+','-'}, index-aligned with vertex ids.
    static SignAssignment parse(std::string_view text) {
        std::vector<int> labels;
        labels.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '+') labels.push_back(1);
            else if (text[i] == '-') labels.push_back(-1);
            else throw input_error("assignment: unexpected character '" + std::string(1, text[i]) + "' at " + std::to_string(i));
        }
        return SignAssignment(std::move(labels));
    }

    std::string str() const {
        std::string out;
        out.reserve(labels_.size());
        for (int x : labels_) out.push_back(x > 0 ? '+' : '-');
        return out;
    }

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    int operator[](Vertex v) const { return labels_.at(v); }
    std::span<const int> labels() const noexcept { return labels_; }

    SignAssignment negated() const {
        auto copy = labels_;
        for (int& x : copy) x = -x;
        return SignAssignment(std::move(copy));
    }

    SignAssignment with(Vertex v, int label) const {
        auto copy = labels_;
        copy.at(v) = label;
        return SignAssignment(std::move(copy));
    }

    friend bool operator==(const SignAssignment&, const SignAssignment&) = default;

private:
    std::vector<int> labels_;
};

namespace detail {
inline void check_length(const Graph& g, const SignAssignment& f) {
    if (f.size() != g.order()) {
        throw std::invalid_argument("assignment length " + std::to_string(f.size()) + " does not match graph order " +
                                    std::to_string(g.order()));
    }
}
}  // namespace detail

inline int set_sum(const SignAssignment& f, std::span<const Vertex> vertices) {
    int total = 0;
    for (Vertex v : vertices) total += f[v];
    return total;
}

inline int weight(const SignAssignment& f) {
    int total = 0;
    for (int x : f.labels()) total += x;
    return total;
}

/// f(N(v))
inline int open_sum(const SignAssignment& f, const Graph& g, Vertex v) {
    detail::check_length(g, f);
    return set_sum(f, g.neighbors(v));
}

/// f(N[v])
inline int closed_sum(const SignAssignment& f, const Graph& g, Vertex v) { return open_sum(f, g, v) + f[v]; }

inline int neighborhood_sum(const SignAssignment& f, const Graph& g, Vertex v, Mode mode) {
    return mode == Mode::closed_neighborhood ? closed_sum(f, g, v) : open_sum(f, g, v);
}

/// First vertex whose neighborhood sum exceeds 1, if any.
inline std::optional<Vertex> first_violation(const Graph& g, const SignAssignment& f, Mode mode) {
    detail::check_length(g, f);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (neighborhood_sum(f, g, v, mode) > 1) return v;
    }
    return std::nullopt;
}

inline bool is_valid(const Graph& g, const SignAssignment& f, Mode mode) { return !first_violation(g, f, mode); }
inline bool is_sbf(const Graph& g, const SignAssignment& f) { return is_valid(g, f, Mode::closed_neighborhood); }
inline bool is_bf(const Graph& g, const SignAssignment& f) { return is_valid(g, f, Mode::open_neighborhood); }

/// V₊ / V₋ split of a labeling and the edge counts between and inside them.
struct PartitionStats {
    std::vector<Vertex> v_plus;
    std::vector<Vertex> v_minus;
    std::size_t cut_size = 0;  // |[V₊,V₋]|
    std::size_t e_minus = 0;   // |E(G[V₋])|
    std::size_t e_plus = 0;    // |E(G[V₊])|
};

inline PartitionStats partition_stats(const Graph& g, const SignAssignment& f) {
    detail::check_length(g, f);
    PartitionStats s;
    for (Vertex v = 0; v < g.order(); ++v) (f[v] > 0 ? s.v_plus : s.v_minus).push_back(v);
    for (auto [u, v] : g.edges()) {
        if (f[u] != f[v]) ++s.cut_size;
        else if (f[u] < 0) ++s.e_minus;
        else ++s.e_plus;
    }
    return s;
}

/// |N(v) ∩ V₊| and |N(v) ∩ V₋|.
struct NeighborSplit {
    int plus = 0;
    int minus = 0;
};

inline NeighborSplit neighbor_split(const Graph& g, const SignAssignment& f, Vertex v) {
    detail::check_length(g, f);
    NeighborSplit s;
    for (Vertex w : g.neighbors(v)) (f[w] > 0 ? s.plus : s.minus) += 1;
    return s;
}

}  // namespace sbn
