#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "twosided/layout.hpp"

namespace twosided {

/// Random Hamiltonian cycle on n vertices plus m - n distinct random chords,
/// identity order. Deterministic per seed. Throws std::invalid_argument
/// unless 3 <= n and n <= m <= n(n-1)/2.
layout_instance generate_random_biconnected(int n, int m, std::uint64_t seed);

bool is_biconnected(const layout_instance &instance);

struct experiment_config {
    std::vector<std::pair<int, int>> sizes;  // (n, m)
    int repetitions = 1;
    std::uint64_t seed_base = 1;
    bool timing = true;
    int jobs = 1;
};

/// Evenly spaced vertex counts with m = round(density * n).
std::vector<std::pair<int, int>> density_sweep(int n_min, int n_max, int n_step, double density);

struct experiment_row {
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    double density = 0;
    std::int64_t crossings = 0;
    std::int64_t w_k0 = 0;
    std::int64_t w_k1_w1 = 0;
    std::int64_t w_k1_w2 = 0;
    double saved_pct_k0 = 0;
    double saved_pct_k1 = 0;
    bool trivial = false;
    double time_k0_ms = 0;
    double time_k1_ms = 0;
    std::string error;  // nonempty when the instance failed
};

/// One row per (size, repetition). Instance i uses seed seed_base + i. Failed
/// instances keep their row with `error` set and are reported to `log`.
std::vector<experiment_row> run_experiment(const experiment_config &config, std::ostream *log = nullptr);

/// Header plus one line per successful row. Timing columns hold NA when
/// `timing` is false.
void write_csv(std::ostream &out, const std::vector<experiment_row> &rows, bool timing);

struct experiment_summary {
    int rows = 0;
    int failed = 0;
    int trivial = 0;
    double mean_saved_k0 = 0;  // over nontrivial rows
    double mean_saved_k1 = 0;
    double max_time_k1_ms = 0;
};

experiment_summary summarize(const std::vector<experiment_row> &rows);

}  // namespace twosided
