#include "twosided/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace twosided {

namespace {

// Alternation of four distinct positions, computed without layout helpers.
bool alternate(int a1, int a2, int b1, int b2) {
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    if (a1 > a2) std::swap(a1, a2);
    bool in1 = a1 < b1 && b1 < a2;
    bool in2 = a1 < b2 && b2 < a2;
    return in1 != in2;
}

bool intervals_overlap(const interval &a, const interval &b) {
    return (a.left < b.left && b.left < a.right && a.right < b.right) ||
           (b.left < a.left && a.left < b.right && b.right < a.right);
}

}  // namespace

solution brute_force_k_overlap(const interval_set &set, int k) {
    const int n = set.size();
    if (n > oracle_interval_limit)
        throw guard_error("brute force limited to " + std::to_string(oracle_interval_limit) + " intervals");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<weight_t>> pw(static_cast<std::size_t>(n), std::vector<weight_t>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && intervals_overlap(set.at(a), set.at(b))) {
                adj[static_cast<std::size_t>(a)] |= 1u << b;
                pw[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = set.pair_weight_of(a, b);
            }

    weight_t best = 0;
    std::vector<interval_id> best_set;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool feasible = true;
        weight_t w = 0;
        for (int a = 0; a < n && feasible; ++a) {
            if (!(mask >> a & 1u)) continue;
            if (std::popcount(adj[static_cast<std::size_t>(a)] & mask) > k) feasible = false;
            w += set.at(a).weight;
            for (int b = a + 1; b < n; ++b)
                if (mask >> b & 1u) w -= pw[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
        if (!feasible || w < best) continue;
        std::vector<interval_id> ids;
        for (int a = 0; a < n; ++a)
            if (mask >> a & 1u) ids.push_back(a);
        if (w > best || ids < best_set) {
            best = w;
            best_set = std::move(ids);
        }
    }
    return make_solution(set, best_set, k);
}

two_sided_optimum brute_force_two_sided(const layout_instance &instance, int k, weight_mode mode) {
    const int m = instance.edge_count();
    if (m > oracle_edge_limit)
        throw guard_error("brute force limited to " + std::to_string(oracle_edge_limit) + " edges");
    const auto &edges = instance.edges();
    std::vector<std::uint32_t> cross(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const edge &ea = edges[static_cast<std::size_t>(a)];
            const edge &eb = edges[static_cast<std::size_t>(b)];
            if (a != b && alternate(instance.position(ea.u), instance.position(ea.v), instance.position(eb.u),
                                    instance.position(eb.v)))
                cross[static_cast<std::size_t>(a)] |= 1u << b;
        }

    const std::uint32_t all = m == 0 ? 0u : (m == 32 ? ~0u : (1u << m) - 1u);
    bool found = false;
    std::uint32_t best_mask = 0;
    std::int64_t best_interior = 0, best_total = 0;
    for (std::uint64_t mm = 0; mm < (std::uint64_t{1} << m); ++mm) {
        const auto ext = static_cast<std::uint32_t>(mm);
        const std::uint32_t in = all & ~ext;
        bool ok = true;
        std::int64_t twice_interior = 0, twice_exterior = 0;
        for (int a = 0; a < m; ++a) {
            std::uint32_t c = cross[static_cast<std::size_t>(a)];
            if (ext >> a & 1u) {
                int d = std::popcount(c & ext);
                if (d > k) {
                    ok = false;
                    break;
                }
                twice_exterior += d;
            } else {
                twice_interior += std::popcount(c & in);
            }
        }
        if (!ok) continue;
        std::int64_t interior = twice_interior / 2, total = interior + twice_exterior / 2;
        std::int64_t cost = mode == weight_mode::count_shifted ? interior : total;
        std::int64_t best_cost = mode == weight_mode::count_shifted ? best_interior : best_total;
        if (!found || cost < best_cost) {
            found = true;
            best_mask = ext;
            best_interior = interior;
            best_total = total;
        }
    }
    std::vector<edge_id> exterior;
    for (int a = 0; a < m; ++a)
        if (best_mask >> a & 1u) exterior.push_back(a);
    return {two_sided_assignment::from_exterior(m, exterior), best_interior, best_total};
}

std::vector<int> brute_force_min_dominating_set(int n, const std::vector<std::pair<int, int>> &edges) {
    if (n > oracle_vertex_limit)
        throw guard_error("brute force limited to " + std::to_string(oracle_vertex_limit) + " vertices");
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = 1u << v;
    for (auto [u, v] : edges) {
        closed[static_cast<std::size_t>(u)] |= 1u << v;
        closed[static_cast<std::size_t>(v)] |= 1u << u;
    }
    const std::uint32_t all = n == 0 ? 0u : (1u << n) - 1u;
    for (int size = 0; size <= n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int t = 0; t < size; ++t) pick[static_cast<std::size_t>(t)] = t;
        while (true) {
            std::uint32_t covered = 0;
            for (int v : pick) covered |= closed[static_cast<std::size_t>(v)];
            if (covered == all) return pick;
            int t = size - 1;
            while (t >= 0 && pick[static_cast<std::size_t>(t)] == n - size + t) --t;
            if (t < 0) break;
            ++pick[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < size; ++u) pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
    return {};
}

}  // namespace twosided
