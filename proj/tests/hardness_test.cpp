#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "twosided/hardness.hpp"
#include "twosided/oracle.hpp"
#include "twosided/solver_general.hpp"

using namespace twosided;

namespace {

int leaves_of(const mds_reduction &r, interval_id v) {
    return static_cast<int>(std::count(r.parent.begin(), r.parent.end(), v));
}

}  // namespace

TEST(Reduction, SingleVertex) {
    interval_set g({{1, 2, 0, -1}}, {});
    auto r = reduce_mds_to_bdmwis(g);
    EXPECT_EQ(r.k, 0);
    EXPECT_EQ(r.reduced.size(), 2);
    EXPECT_EQ(r.parent, (std::vector<interval_id>{-1, 0}));
    EXPECT_EQ(r.reduced.max_degree(), 1);
    auto sol = solve_k(r.reduced, r.k);
    EXPECT_EQ(sol.weight, 1);
    EXPECT_EQ(extract_dominating_set(sol, r), (std::vector<interval_id>{0}));
}

TEST(Reduction, OverlappingPair) {
    interval_set g({{1, 3, 0, -1}, {2, 4, 0, -1}}, {{0, 1, 0}});
    auto r = reduce_mds_to_bdmwis(g);
    EXPECT_EQ(r.k, 1);
    EXPECT_EQ(leaves_of(r, 0), 1);
    EXPECT_EQ(leaves_of(r, 1), 1);
    auto d = extract_dominating_set(solve_k(r.reduced, r.k), r);
    EXPECT_EQ(d.size(), 1u);
}

TEST(Reduction, PathOfThree) {
    auto g = interval_set::uniform(normalize({{1, 3, 0, -1}, {2, 5, 0, -1}, {4, 6, 0, -1}}), 0);
    auto r = reduce_mds_to_bdmwis(g);
    EXPECT_EQ(r.k, 2);
    EXPECT_EQ(leaves_of(r, 0), 2);
    EXPECT_EQ(leaves_of(r, 1), 1);
    EXPECT_EQ(leaves_of(r, 2), 2);
    for (interval_id v = 0; v < r.original_count; ++v)
        EXPECT_EQ(static_cast<int>(r.reduced.neighbors(v).size()), r.k + 1);
    auto d = extract_dominating_set(solve_k(r.reduced, r.k), r);
    EXPECT_EQ(d, (std::vector<interval_id>{1}));
}

TEST(Reduction, LeavesOnlyTouchTheirParent) {
    std::mt19937 rng(70);
    for (int round = 0; round < 100; ++round) {
        auto g = twosided::testing::random_interval_set(rng, twosided::testing::uniform(rng, 1, 10), 0, 0);
        auto r = reduce_mds_to_bdmwis(g);
        ASSERT_EQ(r.reduced.size(), static_cast<int>(r.parent.size()));
        for (interval_id u = r.original_count; u < r.reduced.size(); ++u)
            ASSERT_EQ(r.reduced.neighbors(u), (std::vector<interval_id>{r.parent[static_cast<std::size_t>(u)]}));
        for (interval_id v = 0; v < r.original_count; ++v) {
            ASSERT_EQ(static_cast<int>(r.reduced.neighbors(v).size()), r.k + 1);
            for (interval_id u : g.neighbors(v)) {
                auto nb = r.reduced.neighbors(v);
                ASSERT_TRUE(std::count(nb.begin(), nb.end(), u));
            }
        }
        for (int i = 0; i < r.reduced.size(); ++i) ASSERT_EQ(r.reduced.at(i).weight, 1);
    }
}

TEST(Extraction, RejectsInfeasibleSolutions) {
    interval_set g({{1, 3, 0, -1}, {2, 4, 0, -1}}, {{0, 1, 0}});
    auto r = reduce_mds_to_bdmwis(g);
    std::vector<interval_id> all;
    for (int i = 0; i < r.reduced.size(); ++i) all.push_back(i);
    EXPECT_THROW(extract_dominating_set(make_solution(r.reduced, all, r.k), r), std::invalid_argument);
}

TEST(Extraction, AnyFeasibleSolutionGivesADominatingSet) {
    std::mt19937 rng(71);
    for (int round = 0; round < 200; ++round) {
        auto g = twosided::testing::random_interval_set(rng, twosided::testing::uniform(rng, 1, 8), 0, 0);
        auto r = reduce_mds_to_bdmwis(g);
        // Greedy random feasible set: add vertices while the degree bound holds.
        std::vector<interval_id> order;
        for (int i = 0; i < r.reduced.size(); ++i) order.push_back(i);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<interval_id> pick;
        for (interval_id v : order) {
            pick.push_back(v);
            if (overlap_degree(r.reduced, pick) > r.k) pick.pop_back();
        }
        std::sort(pick.begin(), pick.end());
        auto d = extract_dominating_set(make_solution(r.reduced, pick, r.k), r);
        ASSERT_TRUE(is_dominating_set(g, d));
        ASSERT_LE(static_cast<int>(d.size()), r.reduced.size() - static_cast<int>(pick.size()));
    }
}

TEST(ReductionProperties, RoundTripIsOptimal) {
    std::mt19937 rng(72);
    for (int round = 0; round < 60; ++round) {
        auto g = twosided::testing::random_interval_set(rng, twosided::testing::uniform(rng, 1, 7), 0, 0);
        auto r = reduce_mds_to_bdmwis(g);
        auto sol = solve_k(r.reduced, r.k);
        ASSERT_EQ(audit(r.reduced, sol), "");
        auto d = extract_dominating_set(sol, r);
        ASSERT_TRUE(is_dominating_set(g, d));
        auto best = brute_force_min_dominating_set(g.size(), overlap_edges(g));
        ASSERT_EQ(d.size(), best.size()) << "round " << round;
        ASSERT_EQ(static_cast<weight_t>(r.reduced.size()) - sol.weight, static_cast<weight_t>(best.size()));
    }
}
