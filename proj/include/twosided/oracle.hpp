#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "twosided/intervals.hpp"
#include "twosided/layout.hpp"
#include "twosided/transform.hpp"

namespace twosided {

/// Thrown when an exhaustive search would exceed its size limit.
struct guard_error : std::length_error {
    using std::length_error::length_error;
};

inline constexpr int oracle_interval_limit = 20;
inline constexpr int oracle_edge_limit = 16;
inline constexpr int oracle_vertex_limit = 20;

/// Exhaustive max-weight k-overlap set. Ties go to the lexicographically
/// smallest ascending id list.
solution brute_force_k_overlap(const interval_set &set, int k);

struct two_sided_optimum {
    two_sided_assignment assignment;
    std::int64_t interior = 0;
    std::int64_t total = 0;
};

/// Exhaustive search over exterior edge sets in which every exterior edge
/// crosses at most k other exterior edges. Minimises interior crossings for
/// count_shifted and interior + exterior crossings for ignore_shifted; ties go
/// to the exterior set with the smallest bitmask.
two_sided_optimum brute_force_two_sided(const layout_instance &instance, int k, weight_mode mode);

/// Smallest dominating set of a simple graph on vertices 0..n-1, ties broken
/// lexicographically.
std::vector<int> brute_force_min_dominating_set(int n, const std::vector<std::pair<int, int>> &edges);

}  // namespace twosided
