#include "twosided/hardness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twosided {

mds_reduction reduce_mds_to_bdmwis(const interval_set &graph) {
    const int n = graph.size();
    mds_reduction out;
    out.k = graph.max_degree();
    out.original_count = n;

    const int most_leaves = out.k + 1;
    const int scale = 2 * most_leaves + 2;
    std::vector<interval> intervals;
    for (interval_id v = 0; v < n; ++v) {
        const interval &iv = graph.at(v);
        intervals.push_back({iv.left * scale, iv.right * scale, 1, v});
        out.parent.push_back(-1);
    }
    for (interval_id v = 0; v < n; ++v) {
        const int anchor = graph.at(v).left * scale;
        const int leaves = out.k + 1 - static_cast<int>(graph.neighbors(v).size());
        for (int j = 1; j <= leaves; ++j) {
            intervals.push_back({anchor - j, anchor + j, 1, -1});
            out.parent.push_back(v);
        }
    }
    out.reduced = interval_set::uniform(normalize(std::move(intervals)), 0);
    return out;
}

std::vector<interval_id> extract_dominating_set(const solution &s, const mds_reduction &reduction) {
    const interval_set &g = reduction.reduced;
    const int k = reduction.k;
    for (interval_id i : s.chosen)
        if (i < 0 || i >= g.size()) throw std::invalid_argument("solution id out of range");
    if (overlap_degree(g, s.chosen) > k) throw std::invalid_argument("solution exceeds the degree bound");

    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    for (interval_id i : s.chosen) in[static_cast<std::size_t>(i)] = 1;
    auto degree = [&](interval_id v) {
        int d = 0;
        for (interval_id u : g.neighbors(v)) d += in[static_cast<std::size_t>(u)];
        return d;
    };

    for (interval_id u = reduction.original_count; u < g.size(); ++u) {
        if (in[static_cast<std::size_t>(u)]) continue;
        const interval_id v = reduction.parent[static_cast<std::size_t>(u)];
        if (!in[static_cast<std::size_t>(v)] || (k >= 1 && degree(v) < k)) {
            in[static_cast<std::size_t>(u)] = 1;
            continue;
        }
        interval_id swap_out = v;
        if (k >= 1) {
            for (interval_id w : g.neighbors(v)) {
                if (w < reduction.original_count && in[static_cast<std::size_t>(w)]) {
                    swap_out = w;
                    break;
                }
            }
        }
        in[static_cast<std::size_t>(swap_out)] = 0;
        in[static_cast<std::size_t>(u)] = 1;
    }

    std::vector<interval_id> dominating;
    for (interval_id v = 0; v < reduction.original_count; ++v)
        if (!in[static_cast<std::size_t>(v)]) dominating.push_back(v);
    for (interval_id v = 0; v < reduction.original_count; ++v) {
        bool covered = !in[static_cast<std::size_t>(v)];
        for (interval_id u : g.neighbors(v))
            covered = covered || (u < reduction.original_count && !in[static_cast<std::size_t>(u)]);
        if (!covered) throw std::logic_error("extracted set does not dominate vertex " + std::to_string(v));
    }
    return dominating;
}

std::vector<std::pair<int, int>> overlap_edges(const interval_set &set) {
    std::vector<std::pair<int, int>> out;
    for (const pair_weight &p : set.pairs()) out.emplace_back(p.a, p.b);
    return out;
}

bool is_dominating_set(const interval_set &graph, const std::vector<interval_id> &vertices) {
    std::vector<char> covered(static_cast<std::size_t>(graph.size()), 0);
    for (interval_id v : vertices) {
        if (v < 0 || v >= graph.size()) return false;
        covered[static_cast<std::size_t>(v)] = 1;
        for (interval_id u : graph.neighbors(v)) covered[static_cast<std::size_t>(u)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace twosided
