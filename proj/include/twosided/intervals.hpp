#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twosided/layout.hpp"

namespace twosided {

using interval_id = int;

struct interval {
    int left = 0;
    int right = 0;
    weight_t weight = 0;
    // Circle-graph node (edge id of the layout) this interval stands for, or -1.
    int source = -1;

    int length() const { return right - left; }
    bool contains(int x) const { return left < x && x < right; }
};

enum class overlap_kind : std::uint8_t { disjoint, overlap, first_nests_second, second_nests_first };

/// Throws std::invalid_argument if the two intervals share an endpoint.
overlap_kind classify(const interval &a, const interval &b);

/// Strict partial overlap, assuming distinct endpoints.
inline bool overlaps(const interval &a, const interval &b) {
    return (a.left < b.left && b.left < a.right && a.right < b.right) ||
           (b.left < a.left && a.left < b.right && b.right < a.right);
}

struct pair_weight {
    interval_id a;
    interval_id b;
    weight_t weight;
};

/// Normalized interval representation: n intervals whose 2n endpoints are
/// exactly {1..2n}, plus a weight for every overlapping pair.
class interval_set {
  public:
    interval_set() = default;

    /// Throws std::invalid_argument when endpoints are not a permutation of
    /// {1..2n}, a weight is negative, or the pair list does not cover exactly
    /// the overlapping pairs.
    interval_set(std::vector<interval> intervals, std::vector<pair_weight> pairs);

    /// Every overlapping pair gets weight `w`.
    static interval_set uniform(std::vector<interval> intervals, weight_t w);

    int size() const { return static_cast<int>(intervals_.size()); }
    bool empty() const { return intervals_.empty(); }
    const interval &at(interval_id i) const { return intervals_[static_cast<std::size_t>(i)]; }
    const std::vector<interval> &intervals() const { return intervals_; }

    /// Interval owning endpoint x, for 1 <= x <= 2n.
    interval_id owner(int x) const { return owner_[static_cast<std::size_t>(x)]; }
    bool is_left(int x) const { return at(owner(x)).left == x; }

    /// Overlap neighbors of i in the whole set, ascending by id.
    const std::vector<interval_id> &neighbors(interval_id i) const {
        return neighbors_[static_cast<std::size_t>(i)];
    }
    /// Weights parallel to neighbors(i).
    const std::vector<weight_t> &neighbor_weights(interval_id i) const {
        return neighbor_weights_[static_cast<std::size_t>(i)];
    }

    /// Weight of an overlapping pair; 0 when the intervals do not overlap.
    weight_t pair_weight_of(interval_id a, interval_id b) const;
    bool overlapping(interval_id a, interval_id b) const;

    /// All overlapping pairs with a < b, sorted.
    std::vector<pair_weight> pairs() const;

    int max_degree() const { return max_degree_; }
    std::int64_t total_length() const;

  private:
    std::vector<interval> intervals_;
    std::vector<interval_id> owner_;
    std::vector<std::vector<interval_id>> neighbors_;
    std::vector<std::vector<weight_t>> neighbor_weights_;
    int max_degree_ = 0;
};

/// Relabels arbitrary distinct integer endpoints to ranks {1..2n}, keeping
/// their relative order. Throws std::invalid_argument on repeated endpoints or
/// left >= right.
std::vector<interval> normalize(std::vector<interval> intervals);

/// P(I, S): members of `subset` overlapping I.
std::vector<interval_id> overlap_set(const interval_set &set, interval_id i,
                                     std::span<const interval_id> subset);
/// Forward overlaps: J = [c,d] in P(I, S) with c < b < d for I = [a,b].
std::vector<interval_id> forward_overlap_set(const interval_set &set, interval_id i,
                                             std::span<const interval_id> subset);
/// Members of `subset` strictly inside I.
std::vector<interval_id> nested_set(const interval_set &set, interval_id i,
                                    std::span<const interval_id> subset);

/// Intervals contained in [x, y].
std::vector<interval_id> restrict_to_window(const interval_set &set, int x, int y);

/// True if the overlap graph induced by `subset` is connected. The empty set
/// is not connected.
bool is_connected(const interval_set &set, std::span<const interval_id> subset);

/// Both throw std::invalid_argument on an empty or disconnected subset.
int span_of(const interval_set &set, std::span<const interval_id> subset);
int fit_of(const interval_set &set, std::span<const interval_id> subset);

/// Sum of chosen weights minus pair weights of overlapping chosen pairs.
weight_t solution_weight(const interval_set &set, std::span<const interval_id> chosen);

/// Largest number of chosen intervals any chosen interval overlaps.
int overlap_degree(const interval_set &set, std::span<const interval_id> chosen);

struct solution {
    std::vector<interval_id> chosen;  // ascending
    weight_t weight = 0;
    std::vector<std::pair<interval_id, interval_id>> overlap_pairs;  // (a < b), sorted
    int k = 0;
};

/// Builds a solution record from a chosen set, computing weight and pairs.
solution make_solution(const interval_set &set, std::vector<interval_id> chosen, int k);

/// Empty string if the solution is consistent with `set`, otherwise a
/// description of the first violation found.
std::string audit(const interval_set &set, const solution &s);

}  // namespace twosided
