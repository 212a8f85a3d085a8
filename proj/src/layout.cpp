#include "twosided/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace twosided {

layout_instance::layout_instance(int n_vertices, std::vector<edge> edges)
    : layout_instance(n_vertices, std::move(edges), [n_vertices] {
          std::vector<vertex_id> order(static_cast<std::size_t>(std::max(n_vertices, 0)));
          for (int i = 0; i < n_vertices; ++i) order[static_cast<std::size_t>(i)] = i;
          return order;
      }()) {}

layout_instance::layout_instance(int n_vertices, std::vector<edge> edges,
                                 std::vector<vertex_id> order)
    : n_vertices_(n_vertices), edges_(std::move(edges)), order_(std::move(order)) {
    if (n_vertices_ < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(order_.size()) != n_vertices_)
        throw std::invalid_argument("order has " + std::to_string(order_.size()) +
                                    " entries, expected " + std::to_string(n_vertices_));
    position_.assign(static_cast<std::size_t>(n_vertices_), -1);
    for (int i = 0; i < n_vertices_; ++i) {
        vertex_id v = order_[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n_vertices_) throw std::invalid_argument("order entry out of range");
        auto &p = position_[static_cast<std::size_t>(v)];
        if (p != -1) throw std::invalid_argument("order repeats vertex " + std::to_string(v));
        p = i;
    }
    std::set<std::pair<int, int>> seen;
    for (const edge &e : edges_) {
        if (e.u < 0 || e.u >= n_vertices_ || e.v < 0 || e.v >= n_vertices_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop at " + std::to_string(e.u));
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v));
    }
}

layout_instance layout_instance::rotated(int shift) const {
    std::vector<vertex_id> order(order_.size());
    const int n = n_vertices_;
    if (n == 0) return *this;
    shift = ((shift % n) + n) % n;
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = order_[static_cast<std::size_t>((i + shift) % n)];
    return {n_vertices_, edges_, std::move(order)};
}

layout_instance layout_instance::reflected() const {
    std::vector<vertex_id> order(order_.rbegin(), order_.rend());
    return {n_vertices_, edges_, std::move(order)};
}

bool chords_cross(const edge &a, const edge &b, std::span<const int> position) {
    if (a.shares_endpoint(b)) return false;
    int a1 = position[static_cast<std::size_t>(a.u)], a2 = position[static_cast<std::size_t>(a.v)];
    if (a1 > a2) std::swap(a1, a2);
    auto inside = [&](vertex_id v) {
        int p = position[static_cast<std::size_t>(v)];
        return a1 < p && p < a2;
    };
    return inside(b.u) != inside(b.v);
}

two_sided_assignment two_sided_assignment::all_interior(int edge_count) {
    return two_sided_assignment(std::vector<side>(static_cast<std::size_t>(edge_count), side::interior));
}

two_sided_assignment two_sided_assignment::all_exterior(int edge_count) {
    return two_sided_assignment(std::vector<side>(static_cast<std::size_t>(edge_count), side::exterior));
}

two_sided_assignment two_sided_assignment::from_exterior(int edge_count,
                                                         std::span<const edge_id> exterior) {
    std::vector<side> sides(static_cast<std::size_t>(edge_count), side::interior);
    for (edge_id e : exterior) {
        if (e < 0 || e >= edge_count) throw std::invalid_argument("exterior edge id out of range");
        auto &s = sides[static_cast<std::size_t>(e)];
        if (s == side::exterior) throw std::invalid_argument("exterior edge listed twice");
        s = side::exterior;
    }
    return two_sided_assignment(std::move(sides));
}

two_sided_assignment two_sided_assignment::from_sets(int edge_count,
                                                     std::span<const edge_id> interior,
                                                     std::span<const edge_id> exterior) {
    if (static_cast<int>(interior.size() + exterior.size()) != edge_count)
        throw std::invalid_argument("interior and exterior sets do not cover the edge set");
    std::vector<int> seen(static_cast<std::size_t>(edge_count), 0);
    std::vector<side> sides(static_cast<std::size_t>(edge_count), side::interior);
    auto mark = [&](edge_id e, side s) {
        if (e < 0 || e >= edge_count) throw std::invalid_argument("edge id out of range");
        if (seen[static_cast<std::size_t>(e)]++) throw std::invalid_argument("edge assigned twice");
        sides[static_cast<std::size_t>(e)] = s;
    };
    for (edge_id e : interior) mark(e, side::interior);
    for (edge_id e : exterior) mark(e, side::exterior);
    return two_sided_assignment(std::move(sides));
}

std::vector<edge_id> two_sided_assignment::interior() const {
    std::vector<edge_id> out;
    for (std::size_t i = 0; i < sides_.size(); ++i)
        if (sides_[i] == side::interior) out.push_back(static_cast<edge_id>(i));
    return out;
}

std::vector<edge_id> two_sided_assignment::exterior() const {
    std::vector<edge_id> out;
    for (std::size_t i = 0; i < sides_.size(); ++i)
        if (sides_[i] == side::exterior) out.push_back(static_cast<edge_id>(i));
    return out;
}

crossing_counts count_crossings(const layout_instance &instance,
                                const two_sided_assignment &assignment) {
    if (assignment.edge_count() != instance.edge_count())
        throw std::invalid_argument("assignment covers " + std::to_string(assignment.edge_count()) +
                                    " edges, instance has " + std::to_string(instance.edge_count()));
    crossing_counts counts;
    const auto &edges = instance.edges();
    const auto pos = instance.positions();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            side si = assignment.side_of(static_cast<edge_id>(i));
            if (si != assignment.side_of(static_cast<edge_id>(j))) continue;
            if (!chords_cross(edges[i], edges[j], pos)) continue;
            (si == side::interior ? counts.interior : counts.exterior) += 1;
        }
    }
    return counts;
}

std::int64_t one_sided_crossings(const layout_instance &instance) {
    return count_crossings(instance, two_sided_assignment::all_interior(instance.edge_count())).interior;
}

}  // namespace twosided
