#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace twosided {

using vertex_id = int;
using edge_id = int;
using weight_t = std::int64_t;

struct edge {
    vertex_id u;
    vertex_id v;

    bool shares_endpoint(const edge &other) const {
        return u == other.u || u == other.v || v == other.u || v == other.v;
    }
};

/// A graph with a fixed cyclic vertex order. Vertices are 0..n-1; edges keep
/// the id they were given at construction (their index).
class layout_instance {
  public:
    layout_instance() = default;

    /// Identity order.
    layout_instance(int n_vertices, std::vector<edge> edges);

    /// `order[i]` is the vertex placed at position i. Throws
    /// std::invalid_argument on self-loops, duplicate edges, out-of-range
    /// endpoints, or an order that is not a permutation.
    layout_instance(int n_vertices, std::vector<edge> edges,
                    std::vector<vertex_id> order);

    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<edge> &edges() const { return edges_; }
    const edge &at(edge_id e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<vertex_id> &order() const { return order_; }
    std::span<const int> positions() const { return position_; }
    int position(vertex_id v) const { return position_[static_cast<std::size_t>(v)]; }

    /// Same graph with the order rotated left by `shift` positions.
    layout_instance rotated(int shift) const;
    /// Same graph with the order reversed.
    layout_instance reflected() const;

  private:
    int n_vertices_ = 0;
    std::vector<edge> edges_;
    std::vector<vertex_id> order_;
    std::vector<int> position_;
};

/// True iff the chords of `a` and `b` cross when vertices sit on a circle at
/// the given positions, i.e. their endpoints alternate. Chords sharing an
/// endpoint never cross.
bool chords_cross(const edge &a, const edge &b, std::span<const int> position);

enum class side : std::uint8_t { interior, exterior };

/// Partition of the edge set into interior chords and exterior curves.
class two_sided_assignment {
  public:
    two_sided_assignment() = default;

    static two_sided_assignment all_interior(int edge_count);
    static two_sided_assignment all_exterior(int edge_count);
    /// Throws std::invalid_argument on duplicate or out-of-range ids.
    static two_sided_assignment from_exterior(int edge_count,
                                              std::span<const edge_id> exterior);
    /// Throws std::invalid_argument unless the two lists partition 0..m-1.
    static two_sided_assignment from_sets(int edge_count,
                                          std::span<const edge_id> interior,
                                          std::span<const edge_id> exterior);

    int edge_count() const { return static_cast<int>(sides_.size()); }
    side side_of(edge_id e) const { return sides_.at(static_cast<std::size_t>(e)); }
    bool is_exterior(edge_id e) const { return side_of(e) == side::exterior; }
    std::vector<edge_id> interior() const;
    std::vector<edge_id> exterior() const;

    friend bool operator==(const two_sided_assignment &, const two_sided_assignment &) = default;

  private:
    explicit two_sided_assignment(std::vector<side> sides) : sides_(std::move(sides)) {}
    std::vector<side> sides_;
};

struct crossing_counts {
    std::int64_t interior = 0;
    std::int64_t exterior = 0;

    std::int64_t total() const { return interior + exterior; }
    friend bool operator==(const crossing_counts &, const crossing_counts &) = default;
};

/// Interior crossings are alternating pairs within the interior set, exterior
/// crossings alternating pairs within the exterior set. Pairs on different
/// sides never cross. Throws std::invalid_argument if the assignment does not
/// cover exactly this instance's edges.
crossing_counts count_crossings(const layout_instance &instance,
                                const two_sided_assignment &assignment);

/// Crossings of the one-sided drawing (every edge a chord).
std::int64_t one_sided_crossings(const layout_instance &instance);

}  // namespace twosided
