#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "twosided/experiment.hpp"
#include "twosided/hardness.hpp"
#include "twosided/io.hpp"
#include "twosided/oracle.hpp"
#include "twosided/pipeline.hpp"
#include "twosided/render.hpp"
#include "twosided/solver_general.hpp"
#include "twosided/transform.hpp"

using namespace twosided;

namespace {

constexpr int exit_input = 1;
constexpr int exit_guard = 2;

template <typename F>
auto with_file(const std::string &path, F &&read) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open " + path);
    return read(in);
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

weight_mode to_mode(int m) { return m == 2 ? weight_mode::ignore_shifted : weight_mode::count_shifted; }

void print_ids(std::ostream &out, const std::vector<int> &ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    out << '\n';
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Crossing minimization for two-sided circular layouts"};
    app.require_subcommand(1);

    std::string graph_path, svg_path, json_path, dump_path, csv_path, out_path;
    int k = 1, mode = 1;
    bool labels = false, force_general = false;

    auto *solve = app.add_subcommand("solve", "Choose exterior edges for a graph file");
    solve->add_option("graph", graph_path, "graph file")->required();
    solve->add_option("--k", k, "crossings allowed per exterior edge")->check(CLI::Range(0, 100));
    solve->add_option("--weight-mode", mode, "1: minimise interior crossings, 2: minimise all crossings")
        ->check(CLI::IsMember({1, 2}));
    solve->add_option("--svg", svg_path, "write an SVG drawing");
    solve->add_option("--json", json_path, "write the solution as JSON");
    solve->add_flag("--labels", labels, "label vertices in the SVG");
    solve->add_flag("--force-general", force_general, "use the general solver for k <= 1 too");

    auto *oracle = app.add_subcommand("oracle", "Exhaustive optimum for a small graph file");
    oracle->add_option("graph", graph_path, "graph file")->required();
    oracle->add_option("--k", k, "crossings allowed per exterior edge")->check(CLI::Range(0, 100));
    oracle->add_option("--weight-mode", mode, "1 or 2")->check(CLI::IsMember({1, 2}));

    auto *reduce = app.add_subcommand("reduce-mds", "Dominating set of an interval overlap graph via the reduction");
    reduce->add_option("intervals", dump_path, "interval dump")->required();
    reduce->add_option("--out", out_path, "write the reduced interval dump");

    int n_min = 20, n_max = 60, n_step = 5, reps = 12, jobs = 1;
    double density = 2.6;
    std::uint64_t seed = 1;
    bool no_timing = false;
    auto *bench = app.add_subcommand("bench", "Run the random-graph experiment and emit CSV");
    bench->add_option("--n-min", n_min)->check(CLI::Range(3, 100000));
    bench->add_option("--n-max", n_max)->check(CLI::Range(3, 100000));
    bench->add_option("--n-step", n_step)->check(CLI::PositiveNumber);
    bench->add_option("--density", density)->check(CLI::Range(1.0, 1000.0));
    bench->add_option("--reps", reps, "instances per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "seed of the first instance");
    bench->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    bench->add_flag("--no-timing", no_timing, "write NA in timing columns");
    bench->add_option("--csv", csv_path, "output file (default stdout)");

    int gen_n = 20, gen_m = 52;
    auto *generate = app.add_subcommand("generate", "Write a random biconnected graph file");
    generate->add_option("--n", gen_n)->required();
    generate->add_option("--m", gen_m)->required();
    generate->add_option("--seed", seed);
    generate->add_option("--out", out_path, "output file (default stdout)");

    auto *project = app.add_subcommand("project", "Print the interval representation of a graph file");
    project->add_option("graph", graph_path, "graph file")->required();
    project->add_option("--weight-mode", mode, "1 or 2")->check(CLI::IsMember({1, 2}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*solve) {
            const layout_instance instance = with_file(graph_path, [](std::istream &in) { return read_graph(in); });
            const layout_result r = solve_layout(instance, k, to_mode(mode), {force_general});
            std::cout << "W " << r.chosen.weight << '\n'
                      << "crossings_1sided " << r.one_sided << '\n'
                      << "interior " << r.counts.interior << '\n'
                      << "exterior " << r.counts.exterior << '\n'
                      << "exterior_edges ";
            print_ids(std::cout, r.assignment.exterior());
            if (!svg_path.empty()) write_file(svg_path, render_layout(instance, r.assignment, {labels, true}));
            if (!json_path.empty()) {
                std::ostringstream js;
                write_solution_json(js, r);
                write_file(json_path, js.str());
            }
        } else if (*oracle) {
            const layout_instance instance = with_file(graph_path, [](std::istream &in) { return read_graph(in); });
            const two_sided_optimum best = brute_force_two_sided(instance, k, to_mode(mode));
            std::cout << "interior " << best.interior << '\n'
                      << "total " << best.total << '\n'
                      << "exterior_edges ";
            print_ids(std::cout, best.assignment.exterior());
        } else if (*reduce) {
            const interval_set graph = with_file(dump_path, [](std::istream &in) { return read_interval_dump(in); });
            const mds_reduction red = reduce_mds_to_bdmwis(graph);
            if (!out_path.empty()) {
                std::ostringstream dump;
                write_interval_dump(dump, red.reduced);
                write_file(out_path, dump.str());
            }
            const solution s = solve_k(red.reduced, red.k);
            const auto dom = extract_dominating_set(s, red);
            std::cout << "k " << red.k << '\n'
                      << "reduced_intervals " << red.reduced.size() << '\n'
                      << "weight " << s.weight << '\n'
                      << "dominating_set_size " << dom.size() << '\n'
                      << "dominating_set ";
            print_ids(std::cout, dom);
        } else if (*bench) {
            experiment_config config;
            config.sizes = density_sweep(n_min, n_max, n_step, density);
            config.repetitions = reps;
            config.seed_base = seed;
            config.timing = !no_timing;
            config.jobs = jobs;
            const auto rows = run_experiment(config, &std::cerr);
            std::ostringstream csv;
            write_csv(csv, rows, config.timing);
            if (csv_path.empty()) std::cout << csv.str();
            else write_file(csv_path, csv.str());
            const experiment_summary s = summarize(rows);
            std::cerr << "rows " << s.rows << " failed " << s.failed << " trivial " << s.trivial << " mean_saved_k0 "
                      << s.mean_saved_k0 << " mean_saved_k1 " << s.mean_saved_k1 << '\n';
        } else if (*generate) {
            std::ostringstream text;
            write_graph(text, generate_random_biconnected(gen_n, gen_m, seed));
            if (out_path.empty()) std::cout << text.str();
            else write_file(out_path, text.str());
        } else if (*project) {
            const layout_instance instance = with_file(graph_path, [](std::istream &in) { return read_graph(in); });
            write_interval_dump(std::cout, project_to_intervals(instance, to_mode(mode)).intervals);
        }
    } catch (const guard_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_guard;
    } catch (const parse_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
