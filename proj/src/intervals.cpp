#include "twosided/intervals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twosided {

overlap_kind classify(const interval &a, const interval &b) {
    if (a.left == b.left || a.left == b.right || a.right == b.left || a.right == b.right)
        throw std::invalid_argument("intervals share an endpoint");
    if (a.right < b.left || b.right < a.left) return overlap_kind::disjoint;
    if (a.left < b.left && b.right < a.right) return overlap_kind::first_nests_second;
    if (b.left < a.left && a.right < b.right) return overlap_kind::second_nests_first;
    return overlap_kind::overlap;
}

interval_set::interval_set(std::vector<interval> intervals, std::vector<pair_weight> pairs)
    : intervals_(std::move(intervals)) {
    const int n = size();
    owner_.assign(static_cast<std::size_t>(2 * n + 2), -1);
    for (int i = 0; i < n; ++i) {
        const interval &iv = at(i);
        if (iv.left >= iv.right) throw std::invalid_argument("interval " + std::to_string(i) + " has left >= right");
        if (iv.weight < 0) throw std::invalid_argument("negative weight on interval " + std::to_string(i));
        for (int x : {iv.left, iv.right}) {
            if (x < 1 || x > 2 * n)
                throw std::invalid_argument("endpoint " + std::to_string(x) + " outside 1.." + std::to_string(2 * n));
            auto &o = owner_[static_cast<std::size_t>(x)];
            if (o != -1) throw std::invalid_argument("endpoint " + std::to_string(x) + " used twice");
            o = i;
        }
    }

    // At each right endpoint, intervals still open that began inside it overlap it.
    neighbors_.assign(static_cast<std::size_t>(n), {});
    std::vector<interval_id> open;
    for (int x = 1; x <= 2 * n; ++x) {
        interval_id i = owner(x);
        if (at(i).left == x) {
            open.push_back(i);
            continue;
        }
        std::erase(open, i);
        for (interval_id j : open) {
            if (at(j).left > at(i).left) {
                neighbors_[static_cast<std::size_t>(i)].push_back(j);
                neighbors_[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    neighbor_weights_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        auto &nb = neighbors_[static_cast<std::size_t>(i)];
        std::sort(nb.begin(), nb.end());
        neighbor_weights_[static_cast<std::size_t>(i)].assign(nb.size(), -1);
        max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
    }

    auto slot = [this](interval_id a, interval_id b) -> weight_t * {
        const auto &nb = neighbors_[static_cast<std::size_t>(a)];
        auto it = std::lower_bound(nb.begin(), nb.end(), b);
        if (it == nb.end() || *it != b) return nullptr;
        return &neighbor_weights_[static_cast<std::size_t>(a)][static_cast<std::size_t>(it - nb.begin())];
    };
    for (const pair_weight &p : pairs) {
        if (p.a < 0 || p.a >= n || p.b < 0 || p.b >= n || p.a == p.b)
            throw std::invalid_argument("pair weight references invalid ids");
        if (p.weight < 0) throw std::invalid_argument("negative pair weight");
        weight_t *ab = slot(p.a, p.b);
        if (!ab)
            throw std::invalid_argument("pair weight for non-overlapping intervals " + std::to_string(p.a) +
                                        "," + std::to_string(p.b));
        if (*ab != -1) throw std::invalid_argument("pair weight given twice");
        *ab = p.weight;
        *slot(p.b, p.a) = p.weight;
    }
    for (int i = 0; i < n; ++i)
        for (weight_t w : neighbor_weights_[static_cast<std::size_t>(i)])
            if (w < 0) throw std::invalid_argument("missing pair weight for an overlap of interval " + std::to_string(i));
}

interval_set interval_set::uniform(std::vector<interval> intervals, weight_t w) {
    std::vector<pair_weight> pairs;
    for (std::size_t i = 0; i < intervals.size(); ++i)
        for (std::size_t j = i + 1; j < intervals.size(); ++j)
            if (overlaps(intervals[i], intervals[j]))
                pairs.push_back({static_cast<interval_id>(i), static_cast<interval_id>(j), w});
    return {std::move(intervals), std::move(pairs)};
}

bool interval_set::overlapping(interval_id a, interval_id b) const {
    const auto &nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

weight_t interval_set::pair_weight_of(interval_id a, interval_id b) const {
    const auto &nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return 0;
    return neighbor_weights(a)[static_cast<std::size_t>(it - nb.begin())];
}

std::vector<pair_weight> interval_set::pairs() const {
    std::vector<pair_weight> out;
    for (int a = 0; a < size(); ++a) {
        const auto &nb = neighbors(a);
        for (std::size_t t = 0; t < nb.size(); ++t)
            if (nb[t] > a) out.push_back({a, nb[t], neighbor_weights(a)[t]});
    }
    return out;
}

std::int64_t interval_set::total_length() const {
    std::int64_t total = 0;
    for (const interval &iv : intervals_) total += iv.length();
    return total;
}

std::vector<interval> normalize(std::vector<interval> intervals) {
    std::vector<std::pair<int, int>> endpoints;  // (value, 2*id + is_right)
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].left >= intervals[i].right)
            throw std::invalid_argument("interval " + std::to_string(i) + " has left >= right");
        endpoints.emplace_back(intervals[i].left, static_cast<int>(2 * i));
        endpoints.emplace_back(intervals[i].right, static_cast<int>(2 * i + 1));
    }
    std::sort(endpoints.begin(), endpoints.end());
    for (std::size_t t = 1; t < endpoints.size(); ++t)
        if (endpoints[t].first == endpoints[t - 1].first)
            throw std::invalid_argument("repeated endpoint " + std::to_string(endpoints[t].first));
    for (std::size_t t = 0; t < endpoints.size(); ++t) {
        auto &iv = intervals[static_cast<std::size_t>(endpoints[t].second / 2)];
        (endpoints[t].second % 2 ? iv.right : iv.left) = static_cast<int>(t + 1);
    }
    return intervals;
}

std::vector<interval_id> overlap_set(const interval_set &set, interval_id i,
                                     std::span<const interval_id> subset) {
    std::vector<interval_id> out;
    for (interval_id j : subset)
        if (j != i && overlaps(set.at(i), set.at(j))) out.push_back(j);
    return out;
}

std::vector<interval_id> forward_overlap_set(const interval_set &set, interval_id i,
                                             std::span<const interval_id> subset) {
    std::vector<interval_id> out;
    const interval &I = set.at(i);
    for (interval_id j : subset) {
        const interval &J = set.at(j);
        if (j != i && J.left < I.right && I.right < J.right && I.left < J.left) out.push_back(j);
    }
    return out;
}

std::vector<interval_id> nested_set(const interval_set &set, interval_id i,
                                    std::span<const interval_id> subset) {
    std::vector<interval_id> out;
    const interval &I = set.at(i);
    for (interval_id j : subset) {
        const interval &J = set.at(j);
        if (j != i && I.left < J.left && J.right < I.right) out.push_back(j);
    }
    return out;
}

std::vector<interval_id> restrict_to_window(const interval_set &set, int x, int y) {
    std::vector<interval_id> out;
    for (interval_id i = 0; i < set.size(); ++i)
        if (x <= set.at(i).left && set.at(i).right <= y) out.push_back(i);
    return out;
}

bool is_connected(const interval_set &set, std::span<const interval_id> subset) {
    if (subset.empty()) return false;
    std::vector<interval_id> members(subset.begin(), subset.end());
    std::vector<char> reached(members.size(), 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < members.size(); ++b) {
            if (reached[b] || !overlaps(set.at(members[a]), set.at(members[b]))) continue;
            reached[b] = 1;
            ++count;
            stack.push_back(b);
        }
    }
    return count == members.size();
}

namespace {

std::vector<int> sorted_endpoints(const interval_set &set, std::span<const interval_id> subset) {
    if (!is_connected(set, subset)) throw std::invalid_argument("span/fit need a nonempty connected set");
    std::vector<int> xs;
    for (interval_id i : subset) {
        xs.push_back(set.at(i).left);
        xs.push_back(set.at(i).right);
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace

int span_of(const interval_set &set, std::span<const interval_id> subset) {
    auto xs = sorted_endpoints(set, subset);
    return xs.back() - xs.front();
}

int fit_of(const interval_set &set, std::span<const interval_id> subset) {
    auto xs = sorted_endpoints(set, subset);
    int best = 0;
    for (std::size_t t = 1; t < xs.size(); ++t) best = std::max(best, xs[t] - xs[t - 1]);
    return best;
}

weight_t solution_weight(const interval_set &set, std::span<const interval_id> chosen) {
    weight_t w = 0;
    for (std::size_t a = 0; a < chosen.size(); ++a) {
        w += set.at(chosen[a]).weight;
        for (std::size_t b = a + 1; b < chosen.size(); ++b) w -= set.pair_weight_of(chosen[a], chosen[b]);
    }
    return w;
}

int overlap_degree(const interval_set &set, std::span<const interval_id> chosen) {
    int worst = 0;
    for (interval_id a : chosen) {
        int d = 0;
        for (interval_id b : chosen)
            if (a != b && set.overlapping(a, b)) ++d;
        worst = std::max(worst, d);
    }
    return worst;
}

solution make_solution(const interval_set &set, std::vector<interval_id> chosen, int k) {
    std::sort(chosen.begin(), chosen.end());
    solution s;
    s.k = k;
    s.weight = solution_weight(set, chosen);
    for (std::size_t a = 0; a < chosen.size(); ++a)
        for (std::size_t b = a + 1; b < chosen.size(); ++b)
            if (set.overlapping(chosen[a], chosen[b])) s.overlap_pairs.emplace_back(chosen[a], chosen[b]);
    s.chosen = std::move(chosen);
    return s;
}

std::string audit(const interval_set &set, const solution &s) {
    for (std::size_t t = 0; t < s.chosen.size(); ++t) {
        interval_id i = s.chosen[t];
        if (i < 0 || i >= set.size()) return "chosen id " + std::to_string(i) + " out of range";
        if (t > 0 && s.chosen[t - 1] >= i) return "chosen ids not strictly ascending";
    }
    // Recount from endpoints rather than the cached neighbor lists.
    weight_t w = 0;
    std::vector<std::pair<interval_id, interval_id>> pairs;
    std::vector<int> degree(s.chosen.size(), 0);
    for (std::size_t a = 0; a < s.chosen.size(); ++a) {
        w += set.at(s.chosen[a]).weight;
        for (std::size_t b = a + 1; b < s.chosen.size(); ++b) {
            if (!overlaps(set.at(s.chosen[a]), set.at(s.chosen[b]))) continue;
            w -= set.pair_weight_of(s.chosen[a], s.chosen[b]);
            pairs.emplace_back(s.chosen[a], s.chosen[b]);
            ++degree[a];
            ++degree[b];
        }
    }
    for (std::size_t a = 0; a < s.chosen.size(); ++a)
        if (degree[a] > s.k)
            return "interval " + std::to_string(s.chosen[a]) + " overlaps " + std::to_string(degree[a]) +
                   " chosen intervals, bound is " + std::to_string(s.k);
    if (w != s.weight)
        return "reported weight " + std::to_string(s.weight) + " but chosen set weighs " + std::to_string(w);
    if (pairs != s.overlap_pairs) return "overlap pair list does not match chosen set";
    return {};
}

}  // namespace twosided
