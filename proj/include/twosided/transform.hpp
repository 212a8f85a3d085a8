#pragma once

#include <vector>

#include "twosided/intervals.hpp"
#include "twosided/layout.hpp"

namespace twosided {

/// Weight of a crossing pair in the circle graph. With `count_shifted` the
/// objective counts crossings moved to the exterior as still present; with
/// `ignore_shifted` it counts total crossings of the two-sided drawing.
enum class weight_mode { count_shifted = 1, ignore_shifted = 2 };

weight_t link_weight(weight_mode mode);

struct circle_link {
    edge_id a;  // a < b
    edge_id b;
    weight_t weight;
};

/// Crossing graph of the one-sided drawing. Node i is edge i of the layout and
/// weighs its number of crossings.
struct circle_graph {
    std::vector<weight_t> node_weight;
    std::vector<circle_link> links;  // sorted by (a, b)
    int max_degree = 0;

    int node_count() const { return static_cast<int>(node_weight.size()); }
};

circle_graph build_circle_graph(const layout_instance &instance, weight_mode mode);

struct projection {
    interval_set intervals;
    std::vector<edge_id> edge_of;          // interval id -> layout edge
    std::vector<interval_id> interval_of;  // layout edge -> interval id
};

/// Cuts the circle just before the first vertex of the order and unrolls it
/// onto a line. Endpoints at a shared vertex get consecutive slots so that
/// edges sharing the vertex nest or are disjoint, never overlap. Two intervals
/// overlap iff their chords cross; weights follow build_circle_graph.
projection project_to_intervals(const layout_instance &instance,
                                weight_mode mode = weight_mode::count_shifted);

}  // namespace twosided
