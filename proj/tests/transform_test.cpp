#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "twosided/transform.hpp"

using namespace twosided;

namespace {

// C4 on 0..3 plus both diagonals; edges 4 and 5 are the diagonals.
layout_instance square_with_diagonals() {
    return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}};
}

}  // namespace

TEST(CircleGraph, SquareWithDiagonals) {
    for (auto mode : {weight_mode::count_shifted, weight_mode::ignore_shifted}) {
        auto g = build_circle_graph(square_with_diagonals(), mode);
        EXPECT_EQ(g.node_count(), 6);
        EXPECT_EQ(g.node_weight, (std::vector<weight_t>{0, 0, 0, 0, 1, 1}));
        ASSERT_EQ(g.links.size(), 1u);
        EXPECT_EQ(g.links[0].a, 4);
        EXPECT_EQ(g.links[0].b, 5);
        EXPECT_EQ(g.links[0].weight, mode == weight_mode::count_shifted ? 1 : 2);
    }
}

TEST(CircleGraph, StarHasNoLinks) {
    layout_instance star(4, {{0, 1}, {0, 2}, {0, 3}}, {2, 0, 3, 1});
    auto g = build_circle_graph(star, weight_mode::count_shifted);
    EXPECT_EQ(g.node_count(), 3);
    EXPECT_TRUE(g.links.empty());
}

TEST(CircleGraph, SingleEdge) {
    auto g = build_circle_graph(layout_instance(2, {{0, 1}}), weight_mode::count_shifted);
    EXPECT_EQ(g.node_weight, (std::vector<weight_t>{0}));
    EXPECT_TRUE(g.links.empty());
}

TEST(Projection, StarCenterFirstIsOverlapFree) {
    layout_instance star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto p = project_to_intervals(star);
    EXPECT_EQ(p.intervals.max_degree(), 0);
    // Farthest neighbor first, so the intervals nest.
    EXPECT_EQ(p.intervals.at(2).left, 1);
    EXPECT_EQ(p.intervals.at(2).right, 6);
    EXPECT_EQ(p.intervals.at(1).left, 2);
    EXPECT_EQ(p.intervals.at(1).right, 5);
    EXPECT_EQ(p.intervals.at(0).left, 3);
    EXPECT_EQ(p.intervals.at(0).right, 4);
}

TEST(Projection, StarInAnyOrderIsOverlapFree) {
    std::vector<std::vector<int>> orders{{1, 0, 2, 3}, {1, 2, 0, 3}, {3, 2, 1, 0}, {2, 3, 0, 1}};
    for (const auto &order : orders) {
        layout_instance star(4, {{0, 1}, {0, 2}, {0, 3}}, order);
        EXPECT_EQ(project_to_intervals(star).intervals.max_degree(), 0);
    }
}

TEST(Projection, TwoCrossingChords) {
    layout_instance x(4, {{0, 2}, {1, 3}});
    auto p = project_to_intervals(x);
    EXPECT_EQ(p.intervals.at(0).left, 1);
    EXPECT_EQ(p.intervals.at(0).right, 3);
    EXPECT_EQ(p.intervals.at(1).left, 2);
    EXPECT_EQ(p.intervals.at(1).right, 4);
    EXPECT_EQ(classify(p.intervals.at(0), p.intervals.at(1)), overlap_kind::overlap);
}

TEST(Projection, EmptyEdgeSet) {
    auto p = project_to_intervals(layout_instance(5, {}));
    EXPECT_TRUE(p.intervals.empty());
}

TEST(Projection, RepresentsTheCircleGraphExactly) {
    std::mt19937 rng(31);
    for (int round = 0; round < 400; ++round) {
        const int n = twosided::testing::uniform(rng, 2, 12);
        auto inst = twosided::testing::random_layout(rng, n, twosided::testing::uniform(rng, 0, 30));
        for (auto mode : {weight_mode::count_shifted, weight_mode::ignore_shifted}) {
            auto g = build_circle_graph(inst, mode);
            auto p = project_to_intervals(inst, mode);
            const auto &s = p.intervals;
            ASSERT_EQ(s.size(), inst.edge_count());
            std::vector<int> seen(static_cast<std::size_t>(2 * s.size() + 1), 0);
            for (int i = 0; i < s.size(); ++i) {
                ++seen[static_cast<std::size_t>(s.at(i).left)];
                ++seen[static_cast<std::size_t>(s.at(i).right)];
                ASSERT_EQ(s.at(i).weight, g.node_weight[static_cast<std::size_t>(p.edge_of[static_cast<std::size_t>(i)])]);
                ASSERT_EQ(p.interval_of[static_cast<std::size_t>(p.edge_of[static_cast<std::size_t>(i)])], i);
            }
            for (std::size_t x = 1; x < seen.size(); ++x) ASSERT_EQ(seen[x], 1);

            auto pairs = s.pairs();
            ASSERT_EQ(pairs.size(), g.links.size());
            for (std::size_t t = 0; t < pairs.size(); ++t) {
                ASSERT_EQ(p.edge_of[static_cast<std::size_t>(pairs[t].a)], g.links[t].a);
                ASSERT_EQ(p.edge_of[static_cast<std::size_t>(pairs[t].b)], g.links[t].b);
                ASSERT_EQ(pairs[t].weight, g.links[t].weight);
            }
            for (int a = 0; a < s.size(); ++a)
                for (int b = a + 1; b < s.size(); ++b)
                    ASSERT_EQ(overlaps(s.at(a), s.at(b)),
                              chords_cross(inst.at(p.edge_of[static_cast<std::size_t>(a)]),
                                           inst.at(p.edge_of[static_cast<std::size_t>(b)]), inst.positions()));
        }
    }
}

TEST(CircleGraph, LinkCountEqualsOneSidedCrossings) {
    std::mt19937 rng(32);
    for (int round = 0; round < 200; ++round) {
        auto inst = twosided::testing::random_layout(rng, twosided::testing::uniform(rng, 3, 12), 25);
        auto g = build_circle_graph(inst, weight_mode::count_shifted);
        ASSERT_EQ(static_cast<long long>(g.links.size()), one_sided_crossings(inst));
        int max_deg = 0;
        for (weight_t w : g.node_weight) max_deg = std::max(max_deg, static_cast<int>(w));
        ASSERT_EQ(g.max_degree, max_deg);
    }
}
