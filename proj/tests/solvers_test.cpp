#include <gtest/gtest.h>

#include <random>

#include "sbn/bounds.hpp"
#include "sbn/enumerate.hpp"
#include "sbn/families.hpp"
#include "sbn/solvers.hpp"
#include "test_support.hpp"

namespace sbn {
namespace {

constexpr Mode closed = Mode::closed_neighborhood;
constexpr Mode open = Mode::open_neighborhood;

void expect_value(const Graph& g, Mode mode, int expected) {
    const auto bb = branch_and_bound(g, mode);
    EXPECT_EQ(bb.value, expected) << graph6_encode(g) << " " << to_string(mode);
    EXPECT_TRUE(verify_witness(g, mode, bb.witness, bb.value));
    if (g.order() <= 20) {
        const auto bf = brute_force(g, mode);
        EXPECT_EQ(bf.value, expected);
        EXPECT_TRUE(verify_witness(g, mode, bf.witness, bf.value));
    }
}

TEST(Solvers, SpecValues) {
    expect_value(path(3), closed, 1);
    expect_value(bistar(), closed, 4);
    expect_value(Graph(1), closed, 1);
    expect_value(Graph(1), open, 1);
    expect_value(complete_bipartite(1, 1), open, 2);
    expect_value(complete_bipartite(3, 3), open, 2);
    expect_value(lambda_member(2), closed, 12);
}

TEST(Solvers, CycleAgainstNaiveOracle) {
    const auto c5 = cycle(5);
    EXPECT_EQ(testing::naive_optimum(c5, closed), 1);
    EXPECT_EQ(testing::naive_optimum(c5, open), -1);
    expect_value(c5, closed, 1);
    expect_value(c5, open, -1);
}

TEST(Solvers, FamilyOptimaAtSmallOrder) {
    expect_value(lambda_member(1), closed, 4);
    expect_value(omega_member(1, {{2, 4}, {4, 3}, {3, 5}, {5, 2}}), open, 2);
    const auto t = counterexample_t12(1);
    expect_value(t.graph, open, 10);
}

TEST(Solvers, AgreeOnEveryGraphUpToFive) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_graphs({n})) {
            for (Mode mode : {closed, open}) {
                const auto bb = branch_and_bound(g, mode);
                const auto bf = brute_force(g, mode);
                ASSERT_EQ(bb.value, bf.value) << graph6_encode(g) << " " << to_string(mode);
                ASSERT_EQ(bb.value, testing::naive_optimum(g, mode));
                EXPECT_TRUE(verify_witness(g, mode, bb.witness, bb.value));
            }
        }
    }
}

TEST(Solvers, AgreeOnRandomGraphs) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> order(6, 14);
    std::uniform_real_distribution<double> density(0.1, 0.7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = testing::random_graph(rng, order(rng), density(rng));
        const Mode mode = trial % 2 ? closed : open;
        const auto bb = branch_and_bound(g, mode);
        const auto bf = brute_force(g, mode);
        ASSERT_EQ(bb.value, bf.value) << graph6_encode(g) << " " << to_string(mode);
        EXPECT_TRUE(verify_witness(g, mode, bb.witness, bb.value));
        EXPECT_EQ(((bb.value - g.order()) % 2 + 2) % 2, 0);
    }
}

TEST(Solvers, IsolatedVertexAddsOneToOpenValue) {
    // f(N(v)) = 0 for an isolated v, so it can always take +1
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = testing::random_graph(rng, 1 + trial % 12, 0.4);
        const auto with_isolated = disjoint_union(g, Graph(1));
        EXPECT_EQ(branch_and_bound(with_isolated, open).value, branch_and_bound(g, open).value + 1);
    }
}

TEST(Solvers, TriangleFreeBoundOnRandomGraphs) {
    std::mt19937 rng(41);
    int checked = 0;
    for (int trial = 0; checked < 200 && trial < 20000; ++trial) {
        const auto g = testing::random_graph(rng, 2 + trial % 15, 0.3);
        if (!is_triangle_free(g) || min_degree(g) < 1) continue;
        ++checked;
        const int n = g.order();
        const int beta = branch_and_bound(g, closed).value;
        EXPECT_LE(4 * (9 + 2 * n), (n + 6 - beta) * (n + 6 - beta)) << graph6_encode(g);
    }
    EXPECT_EQ(checked, 200);
}

TEST(VerifyWitness, RejectsWrongClaims) {
    const auto b = bistar();
    const auto f = SignAssignment::parse("--++++++");
    EXPECT_TRUE(verify_witness(b, closed, f, 4));
    EXPECT_FALSE(verify_witness(b, closed, f, 2));
    EXPECT_FALSE(verify_witness(b, closed, SignAssignment::uniform(8, 1), 8));
    EXPECT_FALSE(verify_witness(b, closed, SignAssignment::parse("--+"), -1));
}

TEST(Solvers, Deterministic) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testing::random_graph(rng, 4 + trial % 10, 0.4);
        for (Mode mode : {closed, open}) {
            const auto a = branch_and_bound(g, mode);
            const auto b = branch_and_bound(g, mode);
            EXPECT_EQ(a.witness, b.witness);
            EXPECT_EQ(a.nodes_explored, b.nodes_explored);
            EXPECT_EQ(brute_force(g, mode).witness, brute_force(g, mode).witness);
        }
    }
}

TEST(Solvers, CapsAreEnforced) {
    EXPECT_THROW(brute_force(path(25), closed), cap_exceeded);
    EXPECT_THROW(brute_force(path(12), closed, 10), cap_exceeded);
    EXPECT_THROW(brute_force(path(31), closed, 64), cap_exceeded);
    EXPECT_THROW(branch_and_bound(path(41), closed), cap_exceeded);
    try {
        branch_and_bound(path(12), open, 8);
        FAIL() << "expected cap_exceeded";
    } catch (const cap_exceeded& e) {
        EXPECT_EQ(e.order(), 12);
        EXPECT_EQ(e.cap(), 8);
    }
    EXPECT_EQ(solve(path(3), closed, Algorithm::brute_force, 3).value, 1);
}

}  // namespace
}  // namespace sbn
