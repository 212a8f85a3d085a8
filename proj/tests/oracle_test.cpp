#include <gtest/gtest.h>

#include <bit>

#include "support/generators.hpp"
#include "twosided/oracle.hpp"
#include "twosided/transform.hpp"

using namespace twosided;

namespace {

layout_instance square_with_diagonals() {
    return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}};
}

}  // namespace

TEST(BruteForceKOverlap, EmptyAndGuard) {
    interval_set empty;
    EXPECT_EQ(brute_force_k_overlap(empty, 0).weight, 0);
    std::mt19937 rng(60);
    auto big = twosided::testing::random_interval_set(rng, oracle_interval_limit + 1, 3, 1);
    EXPECT_THROW(brute_force_k_overlap(big, 1), guard_error);
}

TEST(BruteForceKOverlap, TieGoesToSmallestIds) {
    auto s = interval_set::uniform({{1, 3, 2, -1}, {2, 4, 2, -1}}, 0);
    auto sol = brute_force_k_overlap(s, 0);
    EXPECT_EQ(sol.weight, 2);
    EXPECT_EQ(sol.chosen, (std::vector<interval_id>{0}));
}

TEST(BruteForceTwoSided, SquareDiagonalsKZero) {
    auto best = brute_force_two_sided(square_with_diagonals(), 0, weight_mode::count_shifted);
    EXPECT_EQ(best.interior, 0);
    EXPECT_EQ(best.total, 0);
    auto ext = best.assignment.exterior();
    ASSERT_EQ(ext.size(), 1u);
    EXPECT_TRUE(ext[0] == 4 || ext[0] == 5);
}

TEST(BruteForceTwoSided, SquareDiagonalsKOneBothOutside) {
    auto interior = brute_force_two_sided(square_with_diagonals(), 1, weight_mode::count_shifted);
    EXPECT_EQ(interior.interior, 0);
    auto total = brute_force_two_sided(square_with_diagonals(), 1, weight_mode::ignore_shifted);
    EXPECT_EQ(total.total, 0);
}

TEST(BruteForceTwoSided, K5WithKZeroIsIndependentSet) {
    auto k5 = twosided::testing::complete_graph(5);
    auto best = brute_force_two_sided(k5, 0, weight_mode::count_shifted);
    auto ext = best.assignment.exterior();
    EXPECT_EQ(twosided::testing::alternating_pairs(k5, ext), 0);
    // Each exterior chord removes its own crossings; the best picks two disjoint diagonals.
    auto in = best.assignment.interior();
    EXPECT_EQ(best.interior, twosided::testing::alternating_pairs(k5, in));
    EXPECT_EQ(best.interior, 1);
}

TEST(BruteForceTwoSided, Guard) {
    EXPECT_THROW(brute_force_two_sided(twosided::testing::complete_graph(7), 1, weight_mode::count_shifted),
                 guard_error);
}

TEST(BruteForceMds, Examples) {
    EXPECT_EQ(brute_force_min_dominating_set(1, {}), (std::vector<int>{0}));
    EXPECT_EQ(brute_force_min_dominating_set(4, {{0, 1}, {0, 2}, {0, 3}}), (std::vector<int>{0}));
    EXPECT_EQ(brute_force_min_dominating_set(4, {{0, 1}, {1, 2}, {2, 3}}).size(), 2u);
    EXPECT_EQ(brute_force_min_dominating_set(3, {}), (std::vector<int>{0, 1, 2}));
    EXPECT_THROW(brute_force_min_dominating_set(oracle_vertex_limit + 1, {}), guard_error);
}

TEST(OracleProperties, TwoSidedAgreesWithIntervalOracle) {
    std::mt19937 rng(61);
    for (int round = 0; round < 120; ++round) {
        auto inst = twosided::testing::random_layout(rng, twosided::testing::uniform(rng, 3, 9),
                                                     twosided::testing::uniform(rng, 0, 12));
        for (int k = 0; k <= 2; ++k) {
            auto p = project_to_intervals(inst, weight_mode::count_shifted);
            auto w = brute_force_k_overlap(p.intervals, k).weight;
            auto best = brute_force_two_sided(inst, k, weight_mode::count_shifted);
            ASSERT_EQ(best.interior, one_sided_crossings(inst) - w) << "round " << round << " k " << k;

            auto p2 = project_to_intervals(inst, weight_mode::ignore_shifted);
            auto w2 = brute_force_k_overlap(p2.intervals, k).weight;
            auto best2 = brute_force_two_sided(inst, k, weight_mode::ignore_shifted);
            ASSERT_EQ(best2.total, one_sided_crossings(inst) - w2) << "round " << round << " k " << k;

            auto ext = best.assignment.exterior();
            for (int e : ext) {
                int crossed = 0;
                for (int f : ext)
                    if (e != f && chords_cross(inst.at(e), inst.at(f), inst.positions())) ++crossed;
                ASSERT_LE(crossed, k);
            }
        }
    }
}

TEST(OracleProperties, DominatingSetIsMinimal) {
    std::mt19937 rng(62);
    for (int round = 0; round < 60; ++round) {
        const int n = twosided::testing::uniform(rng, 1, 8);
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (twosided::testing::uniform(rng, 0, 2) == 0) edges.emplace_back(a, b);
        auto d = brute_force_min_dominating_set(n, edges);
        auto dominated = [&](const std::vector<int> &set) {
            std::vector<bool> hit(static_cast<std::size_t>(n), false);
            for (int v : set) hit[static_cast<std::size_t>(v)] = true;
            for (auto [a, b] : edges) {
                if (std::count(set.begin(), set.end(), a)) hit[static_cast<std::size_t>(b)] = true;
                if (std::count(set.begin(), set.end(), b)) hit[static_cast<std::size_t>(a)] = true;
            }
            return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
        };
        ASSERT_TRUE(dominated(d));
        // No smaller set works.
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) >= static_cast<int>(d.size())) continue;
            std::vector<int> set;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1u) set.push_back(v);
            ASSERT_FALSE(dominated(set));
        }
    }
}
