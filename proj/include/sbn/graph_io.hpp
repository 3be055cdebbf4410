#pragma once

// Text interchange: graph6 lines and the plain "n m / u v" edge-list format.

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace sbn {

inline constexpr int graph6_short_max = 62;
inline constexpr int graph6_long_max = 258047;

namespace detail {

inline void graph6_append_size(std::string& out, int n) {
    if (n <= graph6_short_max) {
        out.push_back(static_cast<char>(n + 63));
        return;
    }
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
}

inline int graph6_byte(std::string_view text, std::size_t pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw input_error("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(pos) +
                          " outside 63..126");
    }
    return c - 63;
}

}  // namespace detail

/// graph6 encoding. Orders above 62 use the 4-byte size prefix.
inline std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > graph6_long_max) throw input_error("graph6: order " + std::to_string(n) + " too large to encode");
    std::string out;
    detail::graph6_append_size(out, n);

    int acc = 0;
    int used = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

/// Decodes one graph6 line (trailing "\n" / "\r\n" tolerated, an optional
/// ">>graph6<<" header accepted). `max_order` caps the accepted order.
inline Graph graph6_decode(std::string_view text, int max_order = graph6_long_max) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw input_error("graph6: empty line");

    std::size_t pos = 0;
    int n = detail::graph6_byte(text, pos++);
    if (n == 63) {
        if (text.size() < 4) throw input_error("graph6: truncated long-form size");
        if (static_cast<unsigned char>(text[1]) == 126) throw input_error("graph6: 8-byte size form unsupported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | detail::graph6_byte(text, pos++);
        if (n <= graph6_short_max) throw input_error("graph6: long size form used for order " + std::to_string(n));
    }
    if (n < 1) throw input_error("graph6: order 0 is not a valid graph here");
    if (n > max_order) throw cap_exceeded("graph6 decode", n, max_order);

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos < body) {
        throw input_error("graph6: expected " + std::to_string(body) + " data bytes, got " +
                          std::to_string(text.size() - pos));
    }
    if (text.size() - pos > body) {
        throw input_error("graph6: trailing garbage after " + std::to_string(pos + body) + " bytes");
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int byte = detail::graph6_byte(text, pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (std::size_t k = pos; k < text.size(); ++k) detail::graph6_byte(text, k);
    return Graph::from_edges(n, edges);
}

/// A decoded corpus line together with where it came from.
struct NumberedGraph {
    std::size_t line;
    Graph graph;
};

/// Reads graph6 lines, skipping blank lines. Malformed lines raise
/// input_error prefixed with "line N:".
inline std::vector<NumberedGraph> read_graph6_stream(std::istream& in, int max_order = graph6_long_max) {
    std::vector<NumberedGraph> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            out.push_back({number, graph6_decode(line, max_order)});
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------- edge lists

/// "n m" header, then m lines "u v". '#' starts a comment.
inline std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph edge_list_decode(std::istream& in) {
    std::vector<long long> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                long long value = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                tokens.push_back(value);
            } catch (const std::exception&) {
                throw input_error("edge list: non-integer token '" + tok + "'");
            }
        }
    }
    if (tokens.size() < 2) throw input_error("edge list: missing 'n m' header");
    const long long n = tokens[0];
    const long long m = tokens[1];
    if (n < 1 || n > graph6_long_max) throw input_error("edge list: bad order " + std::to_string(n));
    if (m < 0) throw input_error("edge list: negative edge count");
    if (tokens.size() != static_cast<std::size_t>(2 + 2 * m)) {
        throw input_error("edge list: header announces " + std::to_string(m) + " edges, found " +
                          std::to_string((tokens.size() - 2) / 2) + (tokens.size() % 2 ? " and a dangling endpoint" : ""));
    }
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        const long long u = tokens[2 + 2 * k];
        const long long v = tokens[3 + 2 * k];
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            throw input_error("edge list: invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph edge_list_decode(std::string_view text) {
    std::istringstream in{std::string(text)};
    return edge_list_decode(in);
}

}  // namespace sbn
