#pragma once

#include <vector>

#include "twosided/intervals.hpp"

namespace twosided {

/// Optimal 1-overlap values for every single interval and every forward
/// overlapping pair, filled in order of span. With pairs disabled it solves
/// the independent-set case.
class dms1_table {
  public:
    explicit dms1_table(const interval_set &set, bool allow_pairs = true);

    void compute_all();
    bool computed() const { return computed_; }

    /// Best 1-overlap set inside I's window that contains I.
    weight_t single(interval_id i) const;
    /// Best 1-overlap set inside [c, f] containing I = [c,d] and J = [e,f].
    /// Throws std::invalid_argument unless J is a forward overlap of I, or if
    /// pairs are disabled.
    weight_t pair(interval_id i, interval_id j) const;

    /// Best 1-overlap set among intervals strictly inside (lo, hi). Needs
    /// values of every single and pair strictly inside the window.
    weight_t sweep(int lo, int hi) const;

    /// The set achieving sweep(lo, hi), ascending.
    std::vector<interval_id> recover(int lo, int hi) const;

    const std::vector<interval_id> &forward(interval_id i) const {
        return forward_[static_cast<std::size_t>(i)];
    }

  private:
    enum class step : unsigned char { pass, single, pair };
    struct choice {
        step kind = step::pass;
        interval_id partner = -1;
    };

    weight_t run_sweep(int lo, int hi, std::vector<choice> *choices) const;

    const interval_set &set_;
    bool allow_pairs_;
    bool computed_ = false;
    std::vector<std::vector<interval_id>> forward_;
    std::vector<weight_t> single_;
    std::vector<std::vector<weight_t>> pair_;  // parallel to forward_
};

solution solve_k1(const interval_set &set);
solution solve_k0(const interval_set &set);

}  // namespace twosided
