// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
//
// Bound checks here are restated in plain integer arithmetic rather than
// calling the library's holds_/equal_ helpers, so a wrong helper cannot
// certify itself.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sbn/sbn.hpp"
#include "test_support.hpp"

using namespace sbn;

namespace {

constexpr Mode closed = Mode::closed_neighborhood;
constexpr Mode open = Mode::open_neighborhood;

std::int64_t sq(std::int64_t x) { return x * x; }

// β ≤ n+6−2√(9+2n), β ≤ n+4−2√(4+2n), β ≤ n+3−√(4n+9), each squared out.
bool bs_ok(std::int64_t n, std::int64_t b) { return n + 6 - b >= 0 && 4 * (9 + 2 * n) <= sq(n + 6 - b); }
bool bs_tight(std::int64_t n, std::int64_t b) { return n + 6 - b >= 0 && 4 * (9 + 2 * n) == sq(n + 6 - b); }
bool bd_ok(std::int64_t n, std::int64_t b) { return n + 4 - b >= 0 && 4 * (4 + 2 * n) <= sq(n + 4 - b); }
bool bd_tight(std::int64_t n, std::int64_t b) { return n + 4 - b >= 0 && 4 * (4 + 2 * n) == sq(n + 4 - b); }
bool bd_old_exceeded(std::int64_t n, std::int64_t b) { return n + 3 - b < 0 || sq(n + 3 - b) < 4 * n + 9; }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s [%.2fs]%s%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
}

std::string str(std::int64_t x) { return std::to_string(x); }

struct Solved {
    Graph graph;
    int value;
};

std::vector<Solved> solve_corpus(int max_n, int delta, Mode mode) {
    std::vector<Solved> out;
    for (const auto& g : enumerate_graphs_up_to(max_n, {0, true, delta})) {
        const auto r = branch_and_bound(g, mode);
        if (!is_valid(g, r.witness, mode) || weight(r.witness) != r.value) throw std::logic_error("bad witness");
        out.push_back({g, r.value});
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "beta_s(P3) = 1 and beta_s(bistar) = 4 exceed the earlier bound (-1, 2)", [](Outcome& o) {
        const auto p3 = path(3);
        const auto b = bistar();
        for (auto [name, g, want, old] : {std::tuple{"P3", p3, 1, -1}, std::tuple{"bistar", b, 4, 2}}) {
            const int bf = brute_force(g, closed).value;
            const int bb = branch_and_bound(g, closed).value;
            const int naive = testing::naive_optimum(g, closed);
            o.require(bf == want && bb == want && naive == want, std::string(name) + " value " + str(bf) + "/" + str(bb) + "/" + str(naive));
            o.require(bound_bs_old(g.order()) == old, std::string(name) + " old bound " + str(bound_bs_old(g.order())));
            o.require(want > old, std::string(name) + " does not exceed");
            o.require(is_bipartite(g), std::string(name) + " not bipartite");
        }
    });

    criterion(2, "t12 p=1: n=14, valid BF of weight 10 = beta_D > 17-sqrt(65); p=2: n=40 valid, weight 32 > old bound", [](Outcome& o) {
        const auto [g, f] = counterexample_t12(1);
        o.require(g.order() == 14, "order " + str(g.order()));
        o.require(is_bf(g, f), "assignment is not a BF");
        o.require(weight(f) == 10, "weight " + str(weight(f)));
        const int bf = brute_force(g, open).value;
        o.require(bf == 10, "brute force beta_D " + str(bf));
        o.require(bd_old_exceeded(14, 10), "10 does not exceed 17-sqrt(65)");

        // out of exhaustive-oracle range: validity and strict violation only
        const auto [g2, f2] = counterexample_t12(2);
        o.require(g2.order() == 40, "p=2 order " + str(g2.order()));
        o.require(is_bf(g2, f2), "p=2 assignment is not a BF");
        o.require(weight(f2) == 32, "p=2 weight " + str(weight(f2)));
        o.require(bd_old_exceeded(40, 32), "p=2 weight does not exceed 43-sqrt(169)");
        if (o.pass) o.detail = "p=2 optimality not checked: n=40 is beyond the exhaustive oracle";
    });

    std::vector<Solved> bs_corpus;
    criterion(3, "beta_s bound on all triangle-free graphs with min degree >= 1, n <= 8, within 2 minutes", [&](Outcome& o) {
        const auto start = std::chrono::steady_clock::now();
        bs_corpus = solve_corpus(8, 1, closed);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::size_t violations = 0, at8 = 0;
        for (const auto& s : bs_corpus) {
            violations += !bs_ok(s.graph.order(), s.value);
            at8 += s.graph.order() == 8;
        }
        const auto all_tf8 = enumerate_graphs({8, true}).size();
        o.require(violations == 0, str(violations) + " violations");
        o.require(all_tf8 == 410, "triangle-free classes at n=8: " + str(all_tf8));
        o.require(at8 == 303, "min-degree-1 classes at n=8: " + str(at8));
        o.require(secs <= 120.0, "took " + std::to_string(secs) + "s");
        o.detail = o.pass ? str(bs_corpus.size()) + " graphs, 410 triangle-free classes at n=8 (303 with min degree >= 1)" : o.detail;
    });

    criterion(4, "n=8 equality attainers are exactly the recognized Lambda members", [&](Outcome& o) {
        if (bs_corpus.empty()) bs_corpus = solve_corpus(8, 1, closed);
        std::set<CanonicalCode> tight, members;
        for (const auto& s : bs_corpus) {
            if (s.graph.order() != 8) continue;
            if (bs_tight(8, s.value)) tight.insert(canonical_code(s.graph));
            if (is_lambda_member(s.graph).is_member) members.insert(canonical_code(s.graph));
        }
        o.require(tight == members, str(tight.size()) + " attainers vs " + str(members.size()) + " members");
        o.require(tight.count(canonical_code(bistar())) == 1, "bistar missing");
        // every member is the bistar plus a cross-copy matching on its leaves
        std::set<CanonicalCode> built;
        const std::vector<Edge> cross{{2, 5}, {2, 6}, {2, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}};
        for (std::uint32_t mask = 0; mask < (1u << cross.size()); ++mask) {
            std::vector<Edge> extra;
            for (std::size_t i = 0; i < cross.size(); ++i) {
                if ((mask >> i) & 1) extra.push_back(cross[i]);
            }
            try {
                built.insert(canonical_code(lambda_member(1, extra)));
            } catch (const std::invalid_argument&) {
            }
        }
        o.require(built == members, str(built.size()) + " matchings vs " + str(members.size()) + " members");
        if (o.pass) o.detail = str(tight.size()) + " classes (bistar + 1, 2, 3 cross-copy matching edges)";
    });

    criterion(5, "beta_D bound on triangle-free graphs with min degree >= 2, n <= 8; equality only at n=6, exactly the Omega members", [](Outcome& o) {
        const auto corpus = solve_corpus(8, 2, open);
        std::size_t violations = 0;
        std::set<int> tight_orders;
        std::set<CanonicalCode> tight, members;
        for (const auto& s : corpus) {
            const int n = s.graph.order();
            violations += !bd_ok(n, s.value);
            if (bd_tight(n, s.value)) {
                tight_orders.insert(n);
                tight.insert(canonical_code(s.graph));
            }
            if (is_omega_member(s.graph).is_member) members.insert(canonical_code(s.graph));
        }
        o.require(violations == 0, str(violations) + " violations");
        o.require(tight_orders == std::set<int>{6}, "equality at unexpected orders");
        o.require(tight == members, str(tight.size()) + " attainers vs " + str(members.size()) + " members");
        o.require(tight.count(canonical_code(complete_bipartite(3, 3))) == 1, "K_{3,3} missing");
        if (o.pass) o.detail = str(corpus.size()) + " graphs, " + str(tight.size()) + " equality classes at n=6";
    });

    criterion(6, "refined beta_s bound 0,1,3,4,7,8 at n=4,5,9,10,15,16; remark inequality exceptions up to 500", [](Outcome& o) {
        const std::vector<std::int64_t> ns{4, 5, 9, 10, 15, 16}, want{0, 1, 3, 4, 7, 8};
        for (std::size_t i = 0; i < ns.size(); ++i) {
            o.require(refined_bound_bs(ns[i]) == want[i], "n=" + str(ns[i]) + " gives " + str(refined_bound_bs(ns[i])));
            // independent: largest b ≡ n (mod 2) passing the squared test
            std::int64_t b = ns[i];
            while (!bs_ok(ns[i], b)) b -= 2;
            o.require(b == want[i], "oracle n=" + str(ns[i]) + " gives " + str(b));
        }
        const std::set<std::int64_t> exceptions{3, 4, 5, 8, 9, 10, 15, 16};
        for (std::int64_t n = 2; n <= 500; ++n) {
            const bool expected = exceptions.count(n) == 0;
            if (remark_inequality_check(n) != expected) o.require(false, "n=" + str(n));
        }
        o.require(!remark_inequality_check(3) && !remark_inequality_check(8), "holds at 3 or 8");
    });

    criterion(7, "Mantel: triangle-free graphs n <= 7 have <= floor(n^2/4) edges, equality exactly on K_{n/2,n/2}", [](Outcome& o) {
        std::size_t checked = 0;
        for (int n = 1; n <= 7; ++n) {
            const auto balanced = balanced_complete_bipartite(n);
            for (const auto& g : enumerate_graphs({n})) {
                if (!is_triangle_free(g)) continue;
                ++checked;
                const auto m = static_cast<std::int64_t>(g.edge_count());
                o.require(m <= n * n / 4, "n=" + str(n) + " has " + str(m) + " edges");
                const bool iso = testing::naive_isomorphic(g, balanced);
                o.require((m == n * n / 4) == iso, "n=" + str(n) + " equality/isomorphism mismatch");
            }
        }
        if (o.pass) o.detail = str(checked) + " triangle-free classes";
    });

    criterion(8, "branch and bound equals brute force on all graphs n <= 5 and 500 random graphs 6 <= n <= 14", [](Outcome& o) {
        std::size_t classes = 0;
        for (int n = 1; n <= 5; ++n) {
            for (const auto& g : enumerate_graphs({n})) {
                ++classes;
                for (Mode mode : {closed, open}) {
                    const int bb = branch_and_bound(g, mode).value;
                    o.require(bb == brute_force(g, mode).value && bb == testing::naive_optimum(g, mode), graph6_encode(g));
                }
            }
        }
        std::mt19937 rng(20240611);
        std::uniform_int_distribution<int> order(6, 14);
        std::uniform_real_distribution<double> density(0.1, 0.7);
        for (int i = 0; i < 500; ++i) {
            const auto g = testing::random_graph(rng, order(rng), density(rng));
            for (Mode mode : {closed, open}) {
                if (branch_and_bound(g, mode).value != brute_force(g, mode).value) o.require(false, graph6_encode(g));
            }
        }
        if (o.pass) o.detail = str(classes) + " classes + 500 random graphs, both modes";
    });

    criterion(9, "property suites: SBF counting chain, BF neighbor balance, weight identity, parity, graph6 round-trip", [](Outcome& o) {
        std::mt19937 rng(9);
        std::size_t sbfs = 0, bfs = 0;
        for (int trial = 0; trial < 600; ++trial) {
            const int n = 2 + trial % 11;
            const auto g = testing::random_graph(rng, n, 0.35);
            std::bernoulli_distribution coin(0.45);
            for (int k = 0; k < 40; ++k) {
                std::vector<int> labels(n);
                for (int& x : labels) x = coin(rng) ? 1 : -1;
                const SignAssignment f(labels);
                const auto s = partition_stats(g, f);
                o.require(weight(f) == n - 2 * static_cast<int>(s.v_minus.size()), "weight identity");
                if (min_degree(g) >= 1 && is_sbf(g, f)) {
                    ++sbfs;
                    if (!(s.v_plus.size() <= s.cut_size && s.cut_size <= 2 * s.e_minus + 2 * s.v_minus.size())) {
                        o.require(false, "SBF chain on " + graph6_encode(g));
                    }
                }
                if (min_degree(g) >= 2 && is_bf(g, f)) {
                    ++bfs;
                    for (Vertex v = 0; v < n; ++v) {
                        int plus = 0, minus = 0;
                        for (Vertex w : g.neighbors(v)) (f[w] > 0 ? plus : minus)++;
                        if (plus > minus + 1) o.require(false, "BF balance on " + graph6_encode(g));
                    }
                }
            }
            for (Mode mode : {closed, open}) {
                const int value = branch_and_bound(g, mode).value;
                if ((value - n) % 2 != 0) o.require(false, "parity on " + graph6_encode(g));
            }
            if (graph6_decode(graph6_encode(g)) != g) o.require(false, "graph6 round-trip");
        }
        o.require(sbfs > 200 && bfs > 200, "too few samples: " + str(sbfs) + " SBFs, " + str(bfs) + " BFs");
        if (o.pass) o.detail = str(sbfs) + " SBFs, " + str(bfs) + " BFs sampled";
    });

    criterion(10, "family identities p <= 3: core -1 assignment valid, weight n-4p, exact equality", [](Outcome& o) {
        std::mt19937 rng(10);
        std::size_t members = 0;
        for (Family family : {Family::lambda, Family::omega}) {
            for (int p = 1; p <= 3; ++p) {
                for (int trial = 0; trial < 25; ++trial) {
                    const auto g = family_member({family, p, testing::random_legal_extra(rng, family, p, trial * 2)});
                    const auto n = g.order();
                    const auto f = core_negative_assignment(n, p);
                    ++members;
                    const std::string tag = std::string(to_string(family)) + " p=" + str(p);
                    if (family == Family::lambda) {
                        o.require(n == 2 * p * p + 6 * p && is_sbf(g, f) && weight(f) == n - 4 * p && bs_tight(n, n - 4 * p), tag);
                    } else {
                        o.require(n == 2 * p * p + 4 * p && is_bf(g, f) && weight(f) == n - 4 * p && bd_tight(n, n - 4 * p), tag);
                    }
                }
            }
        }
        if (o.pass) o.detail = str(members) + " members";
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
