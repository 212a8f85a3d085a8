#include <gtest/gtest.h>

#include <sstream>

#include "twosided/experiment.hpp"

using namespace twosided;

TEST(Generator, CycleOnly) {
    auto g = generate_random_biconnected(5, 5, 1);
    EXPECT_EQ(g.edge_count(), 5);
    for (int v = 0; v < 5; ++v) {
        int d = 0;
        for (const edge &e : g.edges()) d += (e.u == v) + (e.v == v);
        EXPECT_EQ(d, 2);
    }
    EXPECT_TRUE(is_biconnected(g));
}

TEST(Generator, CompleteGraph) {
    auto g = generate_random_biconnected(6, 15, 3);
    EXPECT_EQ(g.edge_count(), 15);
    EXPECT_EQ(one_sided_crossings(g), 15);
}

TEST(Generator, RejectsBadSizes) {
    EXPECT_THROW(generate_random_biconnected(2, 2, 1), std::invalid_argument);
    EXPECT_THROW(generate_random_biconnected(5, 4, 1), std::invalid_argument);
    EXPECT_THROW(generate_random_biconnected(5, 11, 1), std::invalid_argument);
}

TEST(Generator, DeterministicPerSeed) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto a = generate_random_biconnected(20, 52, seed);
        auto b = generate_random_biconnected(20, 52, seed);
        ASSERT_EQ(a.edge_count(), 52);
        ASSERT_TRUE(is_biconnected(a));
        for (int e = 0; e < a.edge_count(); ++e) {
            ASSERT_EQ(a.at(e).u, b.at(e).u);
            ASSERT_EQ(a.at(e).v, b.at(e).v);
        }
    }
}

TEST(Biconnected, Examples) {
    EXPECT_FALSE(is_biconnected(layout_instance(4, {{0, 1}, {1, 2}, {2, 3}})));
    EXPECT_FALSE(is_biconnected(layout_instance(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})));
    EXPECT_FALSE(is_biconnected(layout_instance(4, {{0, 1}, {1, 2}, {2, 0}})));
    EXPECT_TRUE(is_biconnected(layout_instance(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
}

TEST(DensitySweep, RoundsEdgeCounts) {
    auto sizes = density_sweep(20, 30, 5, 2.6);
    EXPECT_EQ(sizes, (std::vector<std::pair<int, int>>{{20, 52}, {25, 65}, {30, 78}}));
    EXPECT_THROW(density_sweep(20, 30, 0, 2.6), std::invalid_argument);
}

TEST(Experiment, RowsAndCsv) {
    experiment_config config{density_sweep(10, 14, 2, 2.0), 2, 100, false, 1};
    auto rows = run_experiment(config);
    ASSERT_EQ(rows.size(), 6u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].seed, 100 + i);
        EXPECT_TRUE(rows[i].error.empty());
        EXPECT_LE(rows[i].w_k0, rows[i].w_k1_w1);
        EXPECT_LE(rows[i].w_k1_w2, rows[i].crossings);
        EXPECT_LE(rows[i].saved_pct_k0, rows[i].saved_pct_k1);
    }
    std::ostringstream csv;
    write_csv(csv, rows, false);
    const std::string text = csv.str();
    EXPECT_EQ(text.rfind("seed,n,m,density,crossings_1sided,W_k0,W_k1_w1,W_k1_w2,saved_pct_k0,saved_pct_k1,trivial,"
                         "time_k0_ms,time_k1_ms\n",
                         0),
              0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
    EXPECT_NE(text.find(",NA,NA\n"), std::string::npos);

    config.jobs = 3;
    std::ostringstream again;
    write_csv(again, run_experiment(config), false);
    EXPECT_EQ(again.str(), text);
}

TEST(Experiment, TrivialRowsCountAsFullySaved) {
    experiment_config config{{{3, 3}}, 3, 1, false, 1};
    auto rows = run_experiment(config);
    for (const auto &r : rows) {
        EXPECT_TRUE(r.trivial);
        EXPECT_EQ(r.saved_pct_k0, 100.0);
        EXPECT_EQ(r.saved_pct_k1, 100.0);
    }
    auto sum = summarize(rows);
    EXPECT_EQ(sum.rows, 3);
    EXPECT_EQ(sum.trivial, 3);
}

TEST(Experiment, FailuresAreLoggedNotThrown) {
    experiment_config config{{{4, 9}}, 1, 1, false, 1};
    std::ostringstream log;
    auto rows = run_experiment(config, &log);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_FALSE(rows[0].error.empty());
    EXPECT_NE(log.str().find("failed"), std::string::npos);
    EXPECT_EQ(summarize(rows).failed, 1);
}
