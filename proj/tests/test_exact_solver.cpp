#include "support/oracles.hpp"
#include "torchroma/torchroma.hpp"

#include <gtest/gtest.h>

using namespace torchroma;

TEST(SolveExact, Examples)
{
    EXPECT_EQ(solve_exact(build_graph({1, 7, 2}), 6).status, SolveStatus::proven_none);
    EXPECT_EQ(solve_exact(build_graph({3, 5, 3}), 4).status, SolveStatus::proven_none);

    const auto five = solve_exact(build_graph({3, 5, 3}), 5);
    ASSERT_EQ(five.status, SolveStatus::found);
    ASSERT_TRUE(five.coloring.has_value());
    EXPECT_TRUE(verify_coloring(build_graph({3, 5, 3}), *five.coloring));
    EXPECT_TRUE(oracle::proper({3, 5, 3}, five.coloring->colors));
    EXPECT_EQ(five.coloring->strategy, "exact-solver");

    const auto three = solve_exact(build_graph({3, 3, 0}), 3);
    ASSERT_EQ(three.status, SolveStatus::found);
    EXPECT_TRUE(oracle::proper({3, 3, 0}, three.coloring->colors));
}

TEST(SolveExact, RejectsLoopsAndBadK)
{
    EXPECT_THROW(solve_exact(build_graph({1, 3, 0}), 3), std::domain_error);
    EXPECT_THROW(solve_exact(build_graph({3, 3, 0}), 0), std::invalid_argument);
}

TEST(SolveExact, SymmetryBreakingFirstColors)
{
    // Colors are introduced in ascending order, so vertex 0 gets color 1 and
    // no color appears before all smaller ones have.
    const auto r = solve_exact(build_graph({4, 6, 1}), 4);
    ASSERT_EQ(r.status, SolveStatus::found);
    int highest = 0;
    std::vector<bool> seen(5, false);
    for (int c : r.coloring->colors) {
        seen[static_cast<std::size_t>(c)] = true;
        highest = std::max(highest, c);
    }
    for (int c = 1; c <= highest; ++c) {
        EXPECT_TRUE(seen[static_cast<std::size_t>(c)]);
    }
}

TEST(SolveExact, Deterministic)
{
    const auto g = build_graph({5, 6, 2});
    const auto a = solve_exact(g, 4);
    const auto b = solve_exact(g, 4);
    ASSERT_EQ(a.status, SolveStatus::found);
    EXPECT_EQ(a.coloring->colors, b.coloring->colors);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(SolveExact, Monotone)
{
    for (std::int64_t n = 3; n <= 24; ++n) {
        for (const auto& p : enumerate_order(n)) {
            if (has_loops_by_formula(p)) {
                continue;
            }
            const auto g = build_graph(p);
            bool none_above = false;
            for (int k = 7; k >= 1; --k) {
                const auto status = solve_exact(g, k).status;
                ASSERT_NE(status, SolveStatus::budget_exceeded);
                if (none_above) {
                    ASSERT_EQ(status, SolveStatus::proven_none) << to_string(p) << " k=" << k;
                }
                none_above = none_above || status == SolveStatus::proven_none;
            }
        }
    }
}

TEST(SolveExact, NodeBudgetIsReported)
{
    SolveBudget tiny;
    tiny.node_limit = 10;
    const auto r = solve_exact(build_graph({3, 11, 9}), 4, tiny);
    EXPECT_EQ(r.status, SolveStatus::budget_exceeded);
    EXPECT_FALSE(r.coloring.has_value());
    EXPECT_THROW(chromatic_number_exact(build_graph({3, 11, 9}), tiny), budget_exceeded);
}

TEST(SolveExact, TimeBudgetIsReported)
{
    SolveBudget instant;
    instant.time_limit_seconds = 0.0;
    // More vertices than one time-check interval of nodes.
    const auto r = solve_exact(build_graph({33, 33, 0}), 7, instant);
    EXPECT_EQ(r.status, SolveStatus::budget_exceeded);
}

TEST(ChromaticNumberExact, Examples)
{
    EXPECT_EQ(chromatic_number_exact(build_graph({1, 11, 2})), 6);
    EXPECT_EQ(chromatic_number_exact(build_graph({2, 6, 0})), 4);
    EXPECT_EQ(chromatic_number_exact(build_graph({1, 9, 1})), 3);
    EXPECT_EQ(chromatic_number_exact(build_graph({1, 7, 2})), 7);
    EXPECT_EQ(chromatic_number_exact(build_graph({3, 8, 6})), 4);
    EXPECT_EQ(chromatic_number_exact(build_graph({1, 5, 1})), 5);
}
