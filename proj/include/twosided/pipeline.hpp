#pragma once

#include <cstdint>
#include <ostream>

#include "twosided/intervals.hpp"
#include "twosided/layout.hpp"
#include "twosided/solver_general.hpp"
#include "twosided/transform.hpp"

namespace twosided {

struct layout_result {
    int k = 0;
    weight_mode mode = weight_mode::count_shifted;
    solution chosen;  // over the projected intervals
    two_sided_assignment assignment;
    crossing_counts counts;
    std::int64_t one_sided = 0;
};

/// Projects the layout, solves the bounded-overlap problem and routes the
/// chosen edges outside. Throws std::logic_error if the solution fails its
/// audit or the crossing accounting disagrees with the solver's weight.
layout_result solve_layout(const layout_instance &instance, int k, weight_mode mode, solve_options options = {});

/// {"edges_exterior": [...], "weight": W, "interior": i, "exterior": e}
void write_solution_json(std::ostream &out, const layout_result &result);

}  // namespace twosided
