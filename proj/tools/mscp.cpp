#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mscp/bench.hpp"
#include "mscp/oracle.hpp"
#include "mscp/qubo.hpp"

namespace {

int pick_colors(const mscp::Graph& g, std::optional<int> requested) {
    if (requested) return *requested;
    return g.max_degree() + 1;  // greedy bound: always enough colors
}

std::string instance_name(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

int run_solve(const std::string& file, std::optional<int> colors, mscp::BenchOptions opts,
              std::optional<double> time_limit, const std::string& format,
              const std::string& out_path) {
    mscp::InstanceSpec spec;
    spec.name = instance_name(file);
    spec.path = file;
    spec.num_colors = pick_colors(mscp::parse_dimacs_file(file), colors);
    spec.time_limit_seconds = time_limit;

    mscp::RunReport report = mscp::run_instance(spec, opts);
    write_output(mscp::format_report({report}, format), out_path);
    return report.has_result() ? 0 : 2;
}

int run_bench(const std::string& manifest, mscp::BenchOptions opts,
              const std::vector<std::string>& only, const std::string& format,
              const std::string& out_path) {
    std::vector<mscp::InstanceSpec> specs = mscp::load_manifest(manifest);
    if (!only.empty()) {
        std::vector<mscp::InstanceSpec> picked;
        for (const auto& name : only) {
            bool found = false;
            for (const auto& s : specs) {
                if (s.name == name) {
                    picked.push_back(s);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::runtime_error("instance not in manifest: " + name);
        }
        specs = std::move(picked);
    }

    std::vector<mscp::RunReport> reports;
    reports.reserve(specs.size());
    bool all_feasible = true;
    for (const auto& spec : specs) {
        std::cerr << "running " << spec.name << " (" << opts.runs << " runs)..." << std::endl;
        reports.push_back(mscp::run_instance(spec, opts));
        const auto& r = reports.back();
        if (r.has_result()) {
            std::cerr << "  Best=" << r.best << " Avr=" << r.avr << " feasible "
                      << r.feasible_runs << "/" << r.runs.size() << std::endl;
        } else {
            std::cerr << "  no feasible run" << std::endl;
            all_feasible = false;
        }
    }
    write_output(mscp::format_report(reports, format), out_path);
    return all_feasible ? 0 : 2;
}

int run_transform(const std::string& file, std::optional<int> colors, std::int64_t penalty,
                  const std::string& out_path) {
    mscp::Graph g = mscp::parse_dimacs_file(file);
    const int k = pick_colors(g, colors);
    mscp::LinearModel model = mscp::build_linear_model(g, k);
    mscp::QuboModel q = mscp::to_qubo(model, penalty);

    std::ostringstream text;
    mscp::write_qubo(q, text);
    write_output(text.str(), out_path);
    std::cerr << "N=" << q.dimension() << " constant=" << q.constant()
              << " offdiag_pairs=" << q.offdiag_pair_count() << std::endl;
    return 0;
}

int run_oracle(const std::string& file, std::optional<int> colors) {
    mscp::Graph g = mscp::parse_dimacs_file(file);
    const int k = pick_colors(g, colors);
    mscp::MscpOracleResult res = mscp::brute_force_mscp(g, k);
    std::cout << "optimum " << res.optimum << "\n";
    std::cout << "optima " << res.num_optima << "\n";
    std::cout << "coloring";
    for (int c : res.witness.colors) std::cout << ' ' << c;
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum sum coloring via binary quadratic programming"};
    app.require_subcommand(1);

    std::string file, manifest, format = "text", out_path;
    std::optional<int> colors;
    std::optional<double> time_limit;
    std::vector<std::string> only;
    mscp::BenchOptions opts;
    std::uint64_t seed = 1;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--penalty", opts.penalty,
                        "penalty weight P (negative; |P| must exceed K/2)")
            ->capture_default_str();
        cmd->add_option("--runs", opts.runs, "independent solver runs")->capture_default_str();
        cmd->add_option("--refset-size", opts.solver.refset_size, "reference set size b")
            ->capture_default_str();
        cmd->add_option("--iter-budget", opts.solver.iteration_budget,
                        "stop after this many tabu iterations instead of a clock "
                        "(deterministic reports)");
        cmd->add_option("--jobs", opts.jobs, "worker threads across runs")
            ->capture_default_str();
        cmd->add_option("--format", format, "report format: csv, json, text")
            ->check(CLI::IsMember({"csv", "json", "text"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve one DIMACS instance");
    solve->add_option("file", file, "DIMACS .col file")->required();
    solve->add_option("--colors", colors, "color count K (default: max degree + 1)");
    solve->add_option("--seed", seed, "base seed; run r uses seed + r")->capture_default_str();
    solve->add_option("--time-limit", time_limit, "seconds per run (default 60, dsjc 600)");
    add_solver_flags(solve);

    CLI::App* bench = app.add_subcommand("bench", "run every manifest instance");
    bench->add_option("--manifest", manifest, "manifest file")->required();
    bench->add_option("--only", only, "restrict to these instance names")->expected(-1);
    bench->add_option("--base-seed", seed, "base seed; run r uses seed + r")
        ->capture_default_str();
    bench->add_option("--time-limit", time_limit, "override every per-run time limit");
    bench->add_flag("--full-budgets", opts.full_budgets,
                    "use the full published time budgets (1 h; 10 h or 20 h for dsjc instances)");
    add_solver_flags(bench);

    CLI::App* transform = app.add_subcommand("transform", "emit the QUBO matrix for a graph");
    transform->add_option("file", file, "DIMACS .col file")->required();
    transform->add_option("--colors", colors, "color count K (default: max degree + 1)");
    transform->add_option("--penalty", opts.penalty, "penalty weight P")->capture_default_str();
    transform->add_option("--out", out_path, "write the matrix here instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive optimum for a small instance");
    oracle->add_option("file", file, "DIMACS .col file")->required();
    oracle->add_option("--colors", colors, "color count K (default: max degree + 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        opts.base_seed = seed;
        opts.time_limit_override = time_limit;
        if (solve->parsed()) return run_solve(file, colors, opts, time_limit, format, out_path);
        if (bench->parsed()) return run_bench(manifest, opts, only, format, out_path);
        if (transform->parsed()) return run_transform(file, colors, opts.penalty, out_path);
        return run_oracle(file, colors);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
