#include "twosided/solver_general.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>
#include <tuple>

#include "twosided/solver_k1.hpp"

namespace twosided {

namespace {

constexpr int max_k = 100;

bool numeric(int value) { return value >= 0; }

// Endpoint of m that lies strictly inside f; m and f overlap.
int endpoint_inside(const interval &m, const interval &f) {
    return f.contains(m.left) ? m.left : m.right;
}

}  // namespace

capacity_vector::capacity_vector(const interval_set &set)
    : values_(static_cast<std::size_t>(2 * set.size() + 2), static_cast<std::int8_t>(undefined)) {
    values_.front() = 0;
    values_.back() = 0;
}

bool is_valid_for(const capacity_vector &lambda, interval_id i, const interval_set &set, int k) {
    const interval &I = set.at(i);
    if (!numeric(lambda[I.left]) || !numeric(lambda[I.right])) return false;
    int open = 0;
    for (interval_id j : set.neighbors(i))
        if (lambda.state(set.at(j)) != capacity_vector::unlimited) ++open;
    return open <= k;
}

weight_t transition_weight(const capacity_vector &next, const capacity_vector &prev,
                           interval_id k_interval, const interval_set &set) {
    weight_t w = 0;
    auto fresh = [&](interval_id x) {
        return numeric(next.state(set.at(x))) && prev.state(set.at(x)) == capacity_vector::undefined;
    };
    for (interval_id x = 0; x < set.size(); ++x) {
        if (!fresh(x)) continue;
        if (x != k_interval) w += set.at(x).weight;
        const auto &nb = set.neighbors(x);
        const auto &nw = set.neighbor_weights(x);
        for (std::size_t t = 0; t < nb.size(); ++t) {
            interval_id y = nb[t];
            if (!numeric(next.state(set.at(y)))) continue;
            if (fresh(y) && y < x) continue;
            w -= nw[t];
        }
    }
    return w;
}

namespace {

// Shared by the public enumeration and the solver. `emit` receives each
// successor vector, the kept neighbor set and the transition weight; the
// vector is only valid during the call. With `pareto` set, a budget split is
// skipped when another split gives both endpoints at least as much usable
// budget, usable meaning no more than the undecided neighbours on that side.
template <typename Emit>
void for_each_successor(const capacity_vector &lambda, interval_id p, const interval_set &set, int k,
                        bool pareto, Emit &&emit) {
    const interval &P = set.at(p);
    const int p_state = lambda.state(P);
    if (p_state == capacity_vector::unlimited) throw std::invalid_argument("interval is excluded");
    const bool p_fresh = p_state == capacity_vector::undefined;

    std::vector<interval_id> forced, optional;
    for (interval_id j : set.neighbors(p)) {
        int s = lambda.state(set.at(j));
        if (numeric(s)) forced.push_back(j);
        else if (s == capacity_vector::undefined) optional.push_back(j);
    }
    if (static_cast<int>(forced.size()) > k) return;

    std::vector<char> in_j(static_cast<std::size_t>(set.size()), 0);
    std::vector<interval_id> chosen, fresh, fresh_other;
    std::vector<int> budget, lo, hi;
    capacity_vector base;
    capacity_vector next;

    const int max_extra = std::min(k - static_cast<int>(forced.size()), static_cast<int>(optional.size()));
    for (int extra = 0; extra <= max_extra; ++extra) {
        std::vector<int> pick(static_cast<std::size_t>(extra));
        for (int t = 0; t < extra; ++t) pick[static_cast<std::size_t>(t)] = t;
        while (true) {
            chosen = forced;
            for (int t : pick) chosen.push_back(optional[static_cast<std::size_t>(t)]);
            std::sort(chosen.begin(), chosen.end());
            for (interval_id j : chosen) in_j[static_cast<std::size_t>(j)] = 1;

            fresh.clear();
            fresh_other.clear();
            if (p_fresh) fresh.push_back(p);
            for (int t : pick) {
                fresh.push_back(optional[static_cast<std::size_t>(t)]);
                fresh_other.push_back(optional[static_cast<std::size_t>(t)]);
            }
            std::sort(fresh.begin(), fresh.end());

            auto committed = [&](interval_id x) {
                return x == p || in_j[static_cast<std::size_t>(x)] || numeric(lambda.state(set.at(x)));
            };

            bool ok = true;
            base = lambda;
            for (interval_id j : optional)
                if (!in_j[static_cast<std::size_t>(j)]) base.assign(set.at(j), capacity_vector::unlimited, capacity_vector::unlimited);
            base.assign(P, 0, 0);
            // Old selected intervals pay one unit, on the side facing each newcomer.
            for (interval_id f : fresh) {
                for (interval_id m : set.neighbors(f)) {
                    if (m == p || !numeric(lambda.state(set.at(m)))) continue;
                    int pos = endpoint_inside(set.at(m), set.at(f));
                    int v = base[pos] - 1;
                    if (v < 0) ok = false;
                    base.set_position(pos, v);
                }
            }
            budget.clear();
            for (interval_id l : fresh_other) {
                int t = 0;
                for (interval_id x : set.neighbors(l))
                    if (committed(x)) ++t;
                if (t > k) ok = false;
                budget.push_back(k - t);
            }

            if (ok) {
                next = base;
                for (interval_id l : fresh_other) next.assign(set.at(l), 0, 0);
                const weight_t w = transition_weight(next, lambda, p, set);
                lo.assign(fresh_other.size(), 0);
                hi = budget;
                if (pareto) {
                    for (std::size_t t = 0; t < fresh_other.size(); ++t) {
                        const interval &L = set.at(fresh_other[t]);
                        int cap_left = 0, cap_right = 0;
                        for (interval_id f : set.neighbors(fresh_other[t])) {
                            const interval &F = set.at(f);
                            if (next.state(F) != capacity_vector::undefined) continue;
                            if (F.contains(L.left)) ++cap_left;
                            else ++cap_right;
                        }
                        lo[t] = std::max(0, budget[t] - cap_right);
                        hi[t] = std::min(budget[t], cap_left);
                        if (lo[t] > hi[t]) lo[t] = hi[t];
                    }
                }
                std::vector<int> alpha = lo;
                while (true) {
                    for (std::size_t t = 0; t < fresh_other.size(); ++t)
                        next.assign(set.at(fresh_other[t]), alpha[t], budget[t] - alpha[t]);
                    emit(next, chosen, w);
                    std::size_t t = alpha.size();
                    while (t > 0 && alpha[t - 1] == hi[t - 1]) {
                        --t;
                        alpha[t] = lo[t];
                    }
                    if (t == 0) break;
                    ++alpha[t - 1];
                }
            }

            for (interval_id j : chosen) in_j[static_cast<std::size_t>(j)] = 0;

            int t = extra - 1;
            const int m = static_cast<int>(optional.size());
            while (t >= 0 && pick[static_cast<std::size_t>(t)] == m - extra + t) --t;
            if (t < 0) break;
            ++pick[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < extra; ++u) pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
}

}  // namespace

std::vector<successor> legal_successors(const capacity_vector &lambda, interval_id i,
                                        const interval_set &set, int k) {
    std::vector<successor> out;
    for_each_successor(lambda, i, set, k, false, [&](const capacity_vector &next, const std::vector<interval_id> &chosen, weight_t w) {
        out.push_back({next, chosen, w});
    });
    return out;
}

dmsk_table::dmsk_table(const interval_set &set, int k) : set_(set), k_(k) {
    if (k < 0 || k > max_k) throw std::invalid_argument("k must be in 0.." + std::to_string(max_k));
}

std::string dmsk_table::key(int x, int b, const capacity_vector &lambda) const {
    std::string out(sizeof(int) * 2 + static_cast<std::size_t>(b - x + 1), '\0');
    std::memcpy(out.data(), &x, sizeof(int));
    std::memcpy(out.data() + sizeof(int), &b, sizeof(int));
    std::memcpy(out.data() + 2 * sizeof(int), lambda.values().data() + x, static_cast<std::size_t>(b - x + 1));
    return out;
}

// A budget above the number of undecided neighbours that could still land on
// that endpoint behaves like that number.
void dmsk_table::cap_budgets(capacity_vector &lambda) const {
    for (interval_id m = 0; m < set_.size(); ++m) {
        const interval &M = set_.at(m);
        if (!numeric(lambda[M.left])) continue;
        int at_left = 0, at_right = 0;
        for (interval_id f : set_.neighbors(m)) {
            const interval &F = set_.at(f);
            if (lambda.state(F) != capacity_vector::undefined) continue;
            if (F.contains(M.left)) ++at_left;
            else ++at_right;
        }
        lambda.set_position(M.left, std::min(lambda[M.left], at_left));
        lambda.set_position(M.right, std::min(lambda[M.right], at_right));
    }
}

// Rewrites lambda into a form with the same sweep value over [x, b]:
// undecided intervals that can never be selected become excluded, budgets are
// capped by what could still use them, and selected intervals with no
// undecided neighbour left are marked excluded since nothing can touch them.
void dmsk_table::canonicalize(int x, int b, capacity_vector &lambda) const {
    constexpr int U = capacity_vector::undefined;
    constexpr int X = capacity_vector::unlimited;
    auto reachable_start = [&](const interval &I) { return lambda.state(I) == U && I.left >= x && I.right <= b; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (interval_id f = 0; f < set_.size(); ++f) {
            const interval &F = set_.at(f);
            if (lambda.state(F) != U) continue;
            bool live = reachable_start(F);
            for (interval_id g : set_.neighbors(f)) {
                const interval &G = set_.at(g);
                if (numeric(lambda.state(G)) && lambda[endpoint_inside(G, F)] == 0) {
                    live = false;
                    break;
                }
                live = live || reachable_start(G);
            }
            if (!live) {
                lambda.assign(F, X, X);
                changed = true;
            }
        }
    }
    cap_budgets(lambda);
    for (interval_id m = 0; m < set_.size(); ++m) {
        const interval &M = set_.at(m);
        if (numeric(lambda.state(M)) && lambda[M.left] == 0 && lambda[M.right] == 0) {
            bool inert = true;
            for (interval_id f : set_.neighbors(m)) inert = inert && lambda.state(set_.at(f)) != U;
            if (inert) lambda.assign(M, X, X);
        }
    }
}

weight_t dmsk_table::sweep(int x, int b, const capacity_vector &raw) {
    if (x >= b) return 0;
    capacity_vector lambda = raw;
    canonicalize(x, b, lambda);
    std::string k = key(x, b, lambda);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.value;

    entry e{0, -2};
    const interval_id p = set_.owner(x);
    const interval &P = set_.at(p);
    if (P.left != x || P.right > b || lambda.state(P) == capacity_vector::unlimited) {
        e.value = sweep(x + 1, b, lambda);
    } else {
        if (lambda.state(P) != capacity_vector::undefined)
            throw std::logic_error("interval reached at its left endpoint is already selected");
        capacity_vector excluded = lambda;
        excluded.assign(P, capacity_vector::unlimited, capacity_vector::unlimited);
        e = {sweep(x + 1, b, excluded), -1};

        // Successors that agree after capping are interchangeable; keep the best weight.
        std::unordered_map<std::string, std::size_t> seen;
        std::vector<std::tuple<capacity_vector, weight_t, int>> options;
        int index = 0;
        for_each_successor(lambda, p, set_, k_, true, [&](const capacity_vector &next, const std::vector<interval_id> &, weight_t w) {
            capacity_vector c = next;
            cap_budgets(c);
            auto [it, added] = seen.emplace(key(0, static_cast<int>(c.size()) - 1, c), options.size());
            if (added) options.emplace_back(std::move(c), w, index);
            else if (w > std::get<1>(options[it->second])) {
                std::get<1>(options[it->second]) = w;
                std::get<2>(options[it->second]) = index;
            }
            ++index;
        });
        stats_.max_successors = std::max(stats_.max_successors, static_cast<std::size_t>(index));
        for (const auto &[next, w, at] : options) {
            weight_t v = P.weight + sweep(x + 1, P.right, next) + sweep(P.right + 1, b, next) + w;
            if (v > e.value) e = {v, at};
        }
    }
    memo_.emplace(std::move(k), e);
    stats_.memo_entries = memo_.size();
    return e.value;
}

weight_t dmsk_table::dms(interval_id i, const capacity_vector &lambda) {
    if (lambda.size() != 2 * set_.size() + 2) throw std::invalid_argument("capacity vector size mismatch");
    if (!is_valid_for(lambda, i, set_, k_)) throw std::invalid_argument("capacity vector not valid for interval");
    const interval &I = set_.at(i);
    return I.weight + sweep(I.left + 1, I.right, lambda);
}

weight_t dmsk_table::optimum() {
    return sweep(1, 2 * set_.size() + 1, capacity_vector(set_));
}

void dmsk_table::collect(int x, int b, capacity_vector lambda, std::vector<interval_id> &out) {
    while (x < b) {
        canonicalize(x, b, lambda);
        sweep(x, b, lambda);
        const entry &e = memo_.at(key(x, b, lambda));
        if (e.choice == -2) {
            ++x;
            continue;
        }
        const interval_id p = set_.owner(x);
        const interval &P = set_.at(p);
        if (e.choice == -1) {
            lambda.assign(P, capacity_vector::unlimited, capacity_vector::unlimited);
            ++x;
            continue;
        }
        int index = 0;
        capacity_vector picked;
        std::vector<interval_id> kept;
        for_each_successor(lambda, p, set_, k_, true, [&](const capacity_vector &next, const std::vector<interval_id> &chosen, weight_t) {
            if (index++ == e.choice) {
                picked = next;
                kept = chosen;
            }
        });
        out.push_back(p);
        for (interval_id j : kept)
            if (lambda.state(set_.at(j)) == capacity_vector::undefined) out.push_back(j);
        collect(x + 1, P.right, picked, out);
        lambda = std::move(picked);
        x = P.right + 1;
    }
}

std::vector<interval_id> dmsk_table::recover() {
    std::vector<interval_id> out;
    collect(1, 2 * set_.size() + 1, capacity_vector(set_), out);
    std::sort(out.begin(), out.end());
    return out;
}

solution solve_k(const interval_set &set, int k, solve_options options) {
    if (k < 0 || k > max_k) throw std::invalid_argument("k must be in 0.." + std::to_string(max_k));
    if (!options.force_general) {
        if (k == 0) return solve_k0(set);
        if (k == 1) return solve_k1(set);
    }
    dmsk_table table(set, k);
    const weight_t best = table.optimum();
    solution s = make_solution(set, table.recover(), k);
    assert(s.weight == best);
    (void)best;
    return s;
}

}  // namespace twosided
