#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "twosided/intervals.hpp"

namespace twosided {

/// Per-endpoint residual overlap budgets over positions 0..2n+1. Positions 0
/// and 2n+1 belong to an implicit enclosing interval of weight 0. Both
/// endpoints of an interval are either undefined (not yet decided), unlimited
/// (excluded from the solution) or numeric (selected; the two values split
/// the overlaps it may still accept on each side).
class capacity_vector {
  public:
    static constexpr int undefined = -1;
    static constexpr int unlimited = -2;

    capacity_vector() = default;
    /// Everything undefined except the enclosing interval, which is 0.
    explicit capacity_vector(const interval_set &set);

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int position) const { return values_[static_cast<std::size_t>(position)]; }
    void set_position(int position, int value) { values_[static_cast<std::size_t>(position)] = static_cast<std::int8_t>(value); }

    /// State class of an interval, read from its left endpoint.
    int state(const interval &iv) const { return (*this)[iv.left]; }
    bool is_numeric(const interval &iv) const { return state(iv) >= 0; }
    void assign(const interval &iv, int left_value, int right_value) {
        set_position(iv.left, left_value);
        set_position(iv.right, right_value);
    }

    const std::vector<std::int8_t> &values() const { return values_; }
    friend bool operator==(const capacity_vector &, const capacity_vector &) = default;

  private:
    std::vector<std::int8_t> values_;
};

/// True iff both endpoints of `i` are numeric and at most k of its overlap
/// neighbors are not unlimited.
bool is_valid_for(const capacity_vector &lambda, interval_id i, const interval_set &set, int k);

struct successor {
    capacity_vector next;
    std::vector<interval_id> chosen;  // neighbors of the committed interval kept in the solution
    weight_t weight = 0;              // transition_weight(next, lambda, i)
};

/// Every vector reachable by committing `i` together with a subset of its
/// neighbors. Subsets come by increasing size, then lexicographically; budget
/// splits of each newly committed neighbor run ascending, earlier neighbors
/// varying slowest. Throws std::invalid_argument if `i` is unlimited.
std::vector<successor> legal_successors(const capacity_vector &lambda, interval_id i,
                                        const interval_set &set, int k);

/// Weight of intervals that are numeric in `next` but undefined in `prev`,
/// other than `k_interval`, minus the pair weight of every overlapping pair
/// numeric in `next` with at least one side undefined in `prev`. Each pair
/// counts once.
weight_t transition_weight(const capacity_vector &next, const capacity_vector &prev,
                           interval_id k_interval, const interval_set &set);

struct general_stats {
    std::size_t memo_entries = 0;
    std::size_t max_successors = 0;
};

/// Memoized capacity-vector program for one interval set and bound k.
class dmsk_table {
  public:
    dmsk_table(const interval_set &set, int k);

    /// Best k-overlap set inside the window of `i` containing `i`, given the
    /// budgets in `lambda`. Throws std::invalid_argument unless lambda is valid
    /// for `i`.
    weight_t dms(interval_id i, const capacity_vector &lambda);

    /// Optimum over the whole set.
    weight_t optimum();
    /// A set achieving optimum(), ascending.
    std::vector<interval_id> recover();

    general_stats stats() const { return stats_; }

  private:
    struct entry {
        weight_t value;
        int choice;  // -2 pass, -1 exclude, otherwise successor index
    };

    weight_t sweep(int x, int b, const capacity_vector &lambda);
    void collect(int x, int b, capacity_vector lambda, std::vector<interval_id> &out);
    std::string key(int x, int b, const capacity_vector &lambda) const;
    void cap_budgets(capacity_vector &lambda) const;
    void canonicalize(int x, int b, capacity_vector &lambda) const;

    const interval_set &set_;
    int k_;
    std::unordered_map<std::string, entry> memo_;
    general_stats stats_;
};

struct solve_options {
    bool force_general = false;
};

/// Max-weight k-overlap set. For k <= 1 this uses the specialised program
/// unless `force_general` is set. Throws std::invalid_argument for k < 0 or
/// k > 100.
solution solve_k(const interval_set &set, int k, solve_options options = {});

}  // namespace twosided
