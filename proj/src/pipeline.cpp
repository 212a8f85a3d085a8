#include "twosided/pipeline.hpp"

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace twosided {

layout_result solve_layout(const layout_instance &instance, int k, weight_mode mode, solve_options options) {
    const projection proj = project_to_intervals(instance, mode);
    layout_result r;
    r.k = k;
    r.mode = mode;
    r.chosen = solve_k(proj.intervals, k, options);
    if (std::string why = audit(proj.intervals, r.chosen); !why.empty())
        throw std::logic_error("solver returned an infeasible set: " + why);
    std::vector<edge_id> exterior;
    for (interval_id i : r.chosen.chosen) exterior.push_back(proj.edge_of[static_cast<std::size_t>(i)]);
    r.assignment = two_sided_assignment::from_exterior(instance.edge_count(), exterior);
    r.counts = count_crossings(instance, r.assignment);
    r.one_sided = one_sided_crossings(instance);

    const std::int64_t expected = r.one_sided - r.chosen.weight;
    const std::int64_t actual = mode == weight_mode::ignore_shifted ? r.counts.total() : r.counts.interior;
    if (expected != actual)
        throw std::logic_error("crossing accounting mismatch: " + std::to_string(r.one_sided) + " - " +
                               std::to_string(r.chosen.weight) + " != " + std::to_string(actual));
    return r;
}

void write_solution_json(std::ostream &out, const layout_result &result) {
    nlohmann::ordered_json j;
    j["edges_exterior"] = result.assignment.exterior();
    j["weight"] = result.chosen.weight;
    j["interior"] = result.counts.interior;
    j["exterior"] = result.counts.exterior;
    out << j.dump(2) << '\n';
}

}  // namespace twosided
