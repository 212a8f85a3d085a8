#include "twosided/transform.hpp"

#include <algorithm>
#include <cassert>

namespace twosided {

weight_t link_weight(weight_mode mode) {
    return mode == weight_mode::ignore_shifted ? 2 : 1;
}

circle_graph build_circle_graph(const layout_instance &instance, weight_mode mode) {
    const auto &edges = instance.edges();
    const auto pos = instance.positions();
    circle_graph g;
    g.node_weight.assign(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!chords_cross(edges[i], edges[j], pos)) continue;
            g.links.push_back({static_cast<edge_id>(i), static_cast<edge_id>(j), link_weight(mode)});
            ++g.node_weight[i];
            ++g.node_weight[j];
        }
    }
    for (weight_t d : g.node_weight) g.max_degree = std::max(g.max_degree, static_cast<int>(d));
    return g;
}

projection project_to_intervals(const layout_instance &instance, weight_mode mode) {
    const int n = instance.vertex_count();
    const int m = instance.edge_count();
    const auto &edges = instance.edges();

    std::vector<std::vector<edge_id>> incident(static_cast<std::size_t>(n));
    for (edge_id e = 0; e < m; ++e) {
        incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)].push_back(e);
        incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)].push_back(e);
    }

    // Within a vertex: edges to the left first (nearest first), then edges to
    // the right (farthest first). That is descending cyclic offset.
    std::vector<int> first_slot(static_cast<std::size_t>(m), 0), second_slot(static_cast<std::size_t>(m), 0);
    int slot = 0;
    for (int p = 0; p < n; ++p) {
        vertex_id v = instance.order()[static_cast<std::size_t>(p)];
        auto group = incident[static_cast<std::size_t>(v)];
        auto offset = [&](edge_id e) {
            const edge &ed = edges[static_cast<std::size_t>(e)];
            vertex_id other = ed.u == v ? ed.v : ed.u;
            return ((instance.position(other) - p) % n + n) % n;
        };
        std::sort(group.begin(), group.end(), [&](edge_id a, edge_id b) { return offset(a) > offset(b); });
        for (edge_id e : group) {
            ++slot;
            auto &s = first_slot[static_cast<std::size_t>(e)] == 0 ? first_slot : second_slot;
            s[static_cast<std::size_t>(e)] = slot;
        }
    }
    assert(slot == 2 * m);

    circle_graph g = build_circle_graph(instance, mode);
    std::vector<interval> intervals(static_cast<std::size_t>(m));
    for (edge_id e = 0; e < m; ++e) {
        auto idx = static_cast<std::size_t>(e);
        intervals[idx] = {first_slot[idx], second_slot[idx], g.node_weight[idx], e};
    }
    std::vector<pair_weight> pairs;
    pairs.reserve(g.links.size());
    for (const circle_link &l : g.links) pairs.push_back({l.a, l.b, l.weight});

    projection out{interval_set(std::move(intervals), std::move(pairs)), {}, {}};
    out.edge_of.resize(static_cast<std::size_t>(m));
    out.interval_of.resize(static_cast<std::size_t>(m));
    for (edge_id e = 0; e < m; ++e) {
        out.edge_of[static_cast<std::size_t>(e)] = e;
        out.interval_of[static_cast<std::size_t>(e)] = e;
    }
    return out;
}

}  // namespace twosided
