#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mscp/model.hpp"
#include "mscp/solver.hpp"

namespace mscp {

/// One manifest row: instance name, resolved file path, color count and
/// optional best known result / per-run time limit.
struct InstanceSpec {
    std::string name;
    std::string path;
    int num_colors = 0;
    std::optional<std::int64_t> bkr;
    std::optional<double> time_limit_seconds;
};

/// Parses `name path K BKR [time_limit]` lines ('#' comments, '-' for no
/// BKR); relative paths resolve against the manifest's directory.
std::vector<InstanceSpec> load_manifest(const std::string& path);

/// Desk-scale defaults: 60 s, or 600 s for dsjc* instances.
double default_time_limit(const std::string& name);
/// The original experiment budgets: 1 h, with 10 h / 20 h for the dsjc tiers.
double full_time_limit(const std::string& name);

struct RunRecord {
    std::uint64_t seed = 0;
    bool feasible = false;
    std::int64_t sum = 0;          // verified color sum, valid when feasible
    Coloring coloring;             // decoded coloring, valid when feasible
    double time_to_best = 0;       // stamp units of the stop condition
    std::int64_t iterations = 0;
    std::string infeasible_reason; // set when a run ends infeasible
};

/// Per-instance report mirroring the benchmark table columns. Aggregates
/// cover feasible runs only; infeasible runs stay listed and flagged.
struct RunReport {
    InstanceSpec spec;
    Graph graph;
    int num_vars = 0;
    std::vector<RunRecord> runs;

    int feasible_runs = 0;
    std::int64_t best = 0;     // min sum over feasible runs
    double avr = 0;            // mean sum
    double sigma = 0;          // population standard deviation (divide by runs)
    double t_b_avr = 0;        // mean time-to-best over runs attaining best
    double t_avr = 0;          // mean time-to-best over all feasible runs

    bool has_result() const { return feasible_runs > 0; }
    std::optional<double> dev_best() const;
    std::optional<double> dev_avr() const;
};

struct BenchOptions {
    int runs = 5;
    std::uint64_t base_seed = 1;
    int jobs = 1;
    std::int64_t penalty = -500;
    SolverConfig solver;                    // per-run limits filled per instance
    std::optional<double> time_limit_override;
    bool full_budgets = false;
};

/// Loads the instance, builds the QUBO and executes `runs` independent
/// solves with seeds base_seed..base_seed+runs-1, decoding and verifying
/// each final assignment. Runs may execute concurrently (`jobs` workers);
/// aggregation is order-independent.
RunReport run_instance(const InstanceSpec& spec, const BenchOptions& opts);

/// Computes the aggregate fields of `report` from its runs.
void aggregate_runs(RunReport& report);

/// Report writers. Every printed sum is re-verified against the stored
/// coloring (legality + recomputed sum) at write time; a mismatch throws.
/// CSV columns: instance,V,E,K,N,BKR,Best,Avr,sigma,T_b_avr,T_AVR,dev_best,dev_avr
/// with a final Average row for the deviation columns.
std::string report_csv(const std::vector<RunReport>& reports);
std::string report_jsonl(const std::vector<RunReport>& reports);
std::string report_text(const std::vector<RunReport>& reports);
std::string format_report(const std::vector<RunReport>& reports, const std::string& format);

}  // namespace mscp
