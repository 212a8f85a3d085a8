#include "twosided/solver_k1.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>

namespace twosided {

namespace {

constexpr weight_t unset = -1;

}  // namespace

dms1_table::dms1_table(const interval_set &set, bool allow_pairs) : set_(set), allow_pairs_(allow_pairs) {
    const auto n = static_cast<std::size_t>(set.size());
    forward_.resize(n);
    pair_.resize(n);
    single_.assign(n, unset);
    for (interval_id i = 0; i < set.size(); ++i) {
        const interval &I = set.at(i);
        for (interval_id j : set.neighbors(i))
            if (set.at(j).left > I.left) forward_[static_cast<std::size_t>(i)].push_back(j);
        pair_[static_cast<std::size_t>(i)].assign(forward_[static_cast<std::size_t>(i)].size(), unset);
    }
}

void dms1_table::compute_all() {
    // (span, left, partner or -1): singles before pairs at equal span.
    std::vector<std::tuple<int, int, interval_id, int>> schedule;
    for (interval_id i = 0; i < set_.size(); ++i) {
        const interval &I = set_.at(i);
        schedule.emplace_back(I.length(), I.left, i, -1);
        if (!allow_pairs_) continue;
        const auto &fw = forward(i);
        for (std::size_t t = 0; t < fw.size(); ++t)
            schedule.emplace_back(set_.at(fw[t]).right - I.left, I.left, i, static_cast<int>(t));
    }
    std::sort(schedule.begin(), schedule.end());

    for (const auto &[span, left, i, t] : schedule) {
        const interval &I = set_.at(i);
        if (t < 0) {
            single_[static_cast<std::size_t>(i)] = I.weight + run_sweep(I.left, I.right, nullptr);
            continue;
        }
        interval_id j = forward(i)[static_cast<std::size_t>(t)];
        const interval &J = set_.at(j);
        pair_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
            run_sweep(I.left, J.left, nullptr) + run_sweep(J.left, I.right, nullptr) +
            run_sweep(I.right, J.right, nullptr) + I.weight + J.weight - set_.pair_weight_of(i, j);
    }
    computed_ = true;
}

weight_t dms1_table::single(interval_id i) const {
    weight_t v = single_.at(static_cast<std::size_t>(i));
    assert(v != unset);
    return v;
}

weight_t dms1_table::pair(interval_id i, interval_id j) const {
    if (!allow_pairs_) throw std::invalid_argument("pairs are disabled for this table");
    const auto &fw = forward(i);
    auto it = std::find(fw.begin(), fw.end(), j);
    if (it == fw.end()) throw std::invalid_argument("not a forward overlapping pair");
    weight_t v = pair_[static_cast<std::size_t>(i)][static_cast<std::size_t>(it - fw.begin())];
    assert(v != unset);
    return v;
}

weight_t dms1_table::sweep(int lo, int hi) const { return run_sweep(lo, hi, nullptr); }

weight_t dms1_table::run_sweep(int lo, int hi, std::vector<choice> *choices) const {
    if (hi - lo < 2) return 0;
    // value[x - lo] for x in (lo, hi]; value at hi is the base case.
    std::vector<weight_t> value(static_cast<std::size_t>(hi - lo + 1), 0);
    if (choices) choices->assign(value.size(), {});
    auto at = [&](int x) -> weight_t & { return value[static_cast<std::size_t>(x - lo)]; };
    for (int x = hi - 1; x > lo; --x) {
        at(x) = at(x + 1);
        interval_id i = set_.owner(x);
        const interval &I = set_.at(i);
        if (I.left != x || I.right >= hi) continue;

        choice best;
        weight_t best_value = at(x + 1);
        weight_t take = single(i) + at(I.right + 1);
        if (take > best_value) {
            best_value = take;
            best = {step::single, -1};
        }
        if (allow_pairs_) {
            const auto &fw = forward(i);
            const auto &pv = pair_[static_cast<std::size_t>(i)];
            for (std::size_t t = 0; t < fw.size(); ++t) {
                int f = set_.at(fw[t]).right;
                if (f >= hi) continue;
                assert(pv[t] != unset);
                weight_t v = pv[t] + at(f + 1);
                if (v > best_value) {
                    best_value = v;
                    best = {step::pair, fw[t]};
                }
            }
        }
        at(x) = best_value;
        if (choices) (*choices)[static_cast<std::size_t>(x - lo)] = best;
    }
    return at(lo + 1);
}

std::vector<interval_id> dms1_table::recover(int lo, int hi) const {
    std::vector<interval_id> chosen;
    std::vector<std::pair<int, int>> windows{{lo, hi}};
    std::vector<choice> choices;
    while (!windows.empty()) {
        auto [a, b] = windows.back();
        windows.pop_back();
        if (b - a < 2) continue;
        run_sweep(a, b, &choices);
        int x = a + 1;
        while (x < b) {
            const choice &c = choices[static_cast<std::size_t>(x - a)];
            if (c.kind == step::pass) {
                ++x;
                continue;
            }
            interval_id i = set_.owner(x);
            const interval &I = set_.at(i);
            chosen.push_back(i);
            if (c.kind == step::single) {
                windows.emplace_back(I.left, I.right);
                x = I.right + 1;
            } else {
                const interval &J = set_.at(c.partner);
                chosen.push_back(c.partner);
                windows.emplace_back(I.left, J.left);
                windows.emplace_back(J.left, I.right);
                windows.emplace_back(I.right, J.right);
                x = J.right + 1;
            }
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

solution solve_with(const interval_set &set, bool allow_pairs, int k) {
    dms1_table table(set, allow_pairs);
    table.compute_all();
    const int end = 2 * set.size() + 1;
    weight_t best = table.sweep(0, end);
    solution s = make_solution(set, table.recover(0, end), k);
    assert(s.weight == best);
    (void)best;
    return s;
}

}  // namespace

solution solve_k1(const interval_set &set) { return solve_with(set, true, 1); }

solution solve_k0(const interval_set &set) { return solve_with(set, false, 0); }

}  // namespace twosided
