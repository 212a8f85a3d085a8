#pragma once

#include <cstdint>
#include <string>

#include "twosided/layout.hpp"

namespace twosided {

struct render_options {
    bool labels = false;
    bool show_outline = true;  // draw the layout circle
};

/// SVG 1.1 drawing on a 1000x1000 canvas. Vertices sit evenly on a circle in
/// layout order starting at the top and running clockwise; interior edges are
/// straight chords, exterior edges circular arcs outside the circle whose
/// clearance grows with the chord's span.
std::string render_layout(const layout_instance &instance, const two_sided_assignment &assignment,
                          const render_options &options = {});

struct layout_summary {
    std::int64_t interior = 0;
    std::int64_t exterior = 0;
    int exterior_edges = 0;
    int max_exterior_crossings = 0;  // per exterior edge

    friend bool operator==(const layout_summary &, const layout_summary &) = default;
};

layout_summary layout_stats(const layout_instance &instance, const two_sided_assignment &assignment);

}  // namespace twosided
