#pragma once

#include <utility>
#include <vector>

#include "twosided/intervals.hpp"

namespace twosided {

/// Bounded-degree instance built from a circle graph, given by an interval
/// representation. Ids below `original_count` are the original vertices;
/// larger ids are pendant leaves.
struct mds_reduction {
    interval_set reduced;
    int k = 0;
    int original_count = 0;
    std::vector<interval_id> parent;  // -1 for original vertices
};

/// k is the maximum degree of the overlap graph. Every vertex of degree d
/// receives k + 1 - d leaves, each an interval around the vertex's left
/// endpoint that overlaps nothing else. All vertex weights are 1 and pair
/// weights 0.
mds_reduction reduce_mds_to_bdmwis(const interval_set &graph);

/// Maps a feasible solution of the reduced instance back to a dominating set
/// of the original graph (ascending ids). Throws std::invalid_argument if the
/// solution breaks the degree bound.
std::vector<interval_id> extract_dominating_set(const solution &s, const mds_reduction &reduction);

/// Edge list (a < b) of the overlap graph.
std::vector<std::pair<int, int>> overlap_edges(const interval_set &set);

bool is_dominating_set(const interval_set &graph, const std::vector<interval_id> &vertices);

}  // namespace twosided
