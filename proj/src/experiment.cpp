#include "twosided/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "twosided/pipeline.hpp"

namespace twosided {

layout_instance generate_random_biconnected(int n, int m, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("need at least 3 vertices");
    if (m < n) throw std::invalid_argument("need at least n edges");
    if (static_cast<std::int64_t>(m) > static_cast<std::int64_t>(n) * (n - 1) / 2)
        throw std::invalid_argument("too many edges for a simple graph");

    std::mt19937_64 rng(seed);
    std::vector<vertex_id> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 0);
    std::shuffle(cycle.begin(), cycle.end(), rng);

    std::set<std::pair<int, int>> present;
    std::vector<edge> edges;
    auto add = [&](int u, int v) {
        if (u == v || !present.emplace(std::min(u, v), std::max(u, v)).second) return false;
        edges.push_back({u, v});
        return true;
    };
    for (int i = 0; i < n; ++i)
        add(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % n)]);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(edges.size()) < m) add(pick(rng), pick(rng));

    layout_instance instance(n, std::move(edges));
    if (!is_biconnected(instance)) throw std::logic_error("generated graph is not biconnected");
    return instance;
}

bool is_biconnected(const layout_instance &instance) {
    const int n = instance.vertex_count();
    if (n < 3) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const edge &e : instance.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    // Iterative Tarjan low-link search for articulation points.
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    int timer = 0, root_children = 0;
    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        const int v = stack.back();
        auto &it = next[static_cast<std::size_t>(v)];
        if (it < adj[static_cast<std::size_t>(v)].size()) {
            const int w = adj[static_cast<std::size_t>(v)][it++];
            if (disc[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = v;
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                if (v == 0) ++root_children;
                stack.push_back(w);
            } else if (w != parent[static_cast<std::size_t>(v)]) {
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
            }
            continue;
        }
        stack.pop_back();
        const int p = parent[static_cast<std::size_t>(v)];
        if (p < 0) continue;
        low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
        if (p != 0 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) return false;
    }
    if (timer != n) return false;
    return root_children <= 1;
}

std::vector<std::pair<int, int>> density_sweep(int n_min, int n_max, int n_step, double density) {
    if (n_step <= 0) throw std::invalid_argument("step must be positive");
    std::vector<std::pair<int, int>> out;
    for (int n = n_min; n <= n_max; n += n_step)
        out.emplace_back(n, static_cast<int>(std::lround(density * n)));
    return out;
}

namespace {

double saved(std::int64_t w, std::int64_t crossings) {
    return crossings == 0 ? 100.0 : 100.0 * static_cast<double>(w) / static_cast<double>(crossings);
}

template <typename F>
auto timed(F &&f, double &ms) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

experiment_row run_one(int n, int m, std::uint64_t seed) {
    experiment_row row;
    row.seed = seed;
    row.n = n;
    row.m = m;
    row.density = static_cast<double>(m) / n;
    const layout_instance instance = generate_random_biconnected(n, m, seed);
    double unused = 0;
    const layout_result k0 = timed([&] { return solve_layout(instance, 0, weight_mode::count_shifted); }, row.time_k0_ms);
    const layout_result k1_w1 = timed([&] { return solve_layout(instance, 1, weight_mode::count_shifted); }, unused);
    const layout_result k1_w2 = timed([&] { return solve_layout(instance, 1, weight_mode::ignore_shifted); }, row.time_k1_ms);
    row.crossings = k0.one_sided;
    row.w_k0 = k0.chosen.weight;
    row.w_k1_w1 = k1_w1.chosen.weight;
    row.w_k1_w2 = k1_w2.chosen.weight;
    row.trivial = row.crossings == 0;
    row.saved_pct_k0 = saved(row.w_k0, row.crossings);
    row.saved_pct_k1 = saved(row.w_k1_w2, row.crossings);
    if (row.saved_pct_k1 < row.saved_pct_k0)
        throw std::logic_error("k=1 saved fewer crossings than k=0");
    if (row.crossings - k1_w1.counts.interior < row.crossings - k1_w2.counts.interior)
        throw std::logic_error("w=1 run removed fewer interior crossings than the w=2 run");
    return row;
}

}  // namespace

std::vector<experiment_row> run_experiment(const experiment_config &config, std::ostream *log) {
    struct task {
        int n, m;
        std::uint64_t seed;
    };
    std::vector<task> tasks;
    for (const auto &[n, m] : config.sizes)
        for (int r = 0; r < config.repetitions; ++r)
            tasks.push_back({n, m, config.seed_base + tasks.size()});

    std::vector<experiment_row> rows(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex log_mutex;
    auto worker = [&] {
        for (std::size_t i = cursor++; i < tasks.size(); i = cursor++) {
            const task &t = tasks[i];
            try {
                rows[i] = run_one(t.n, t.m, t.seed);
            } catch (const std::exception &e) {
                rows[i] = experiment_row{};
                rows[i].seed = t.seed;
                rows[i].n = t.n;
                rows[i].m = t.m;
                rows[i].error = e.what();
                if (log) {
                    std::lock_guard lock(log_mutex);
                    *log << "instance seed=" << t.seed << " n=" << t.n << " m=" << t.m << " failed: " << e.what() << '\n';
                }
            }
        }
    };
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<experiment_row> &rows, bool timing) {
    out << "seed,n,m,density,crossings_1sided,W_k0,W_k1_w1,W_k1_w2,saved_pct_k0,saved_pct_k1,trivial,time_k0_ms,time_k1_ms\n";
    auto fixed = [](double v, int digits) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", digits, v);
        return std::string(buf);
    };
    for (const experiment_row &r : rows) {
        if (!r.error.empty()) continue;
        out << r.seed << ',' << r.n << ',' << r.m << ',' << fixed(r.density, 4) << ',' << r.crossings << ',' << r.w_k0
            << ',' << r.w_k1_w1 << ',' << r.w_k1_w2 << ',' << fixed(r.saved_pct_k0, 4) << ','
            << fixed(r.saved_pct_k1, 4) << ',' << (r.trivial ? 1 : 0) << ',';
        if (timing) out << fixed(r.time_k0_ms, 3) << ',' << fixed(r.time_k1_ms, 3) << '\n';
        else out << "NA,NA\n";
    }
}

experiment_summary summarize(const std::vector<experiment_row> &rows) {
    experiment_summary s;
    double sum0 = 0, sum1 = 0;
    int counted = 0;
    for (const experiment_row &r : rows) {
        ++s.rows;
        if (!r.error.empty()) {
            ++s.failed;
            continue;
        }
        s.max_time_k1_ms = std::max(s.max_time_k1_ms, r.time_k1_ms);
        if (r.trivial) {
            ++s.trivial;
            continue;
        }
        sum0 += r.saved_pct_k0;
        sum1 += r.saved_pct_k1;
        ++counted;
    }
    if (counted > 0) {
        s.mean_saved_k0 = sum0 / counted;
        s.mean_saved_k1 = sum1 / counted;
    }
    return s;
}

}  // namespace twosided
