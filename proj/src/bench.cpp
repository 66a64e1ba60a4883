#include "mscp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "mscp/qubo.hpp"

namespace mscp {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

std::vector<InstanceSpec> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path);
    const auto base_dir = std::filesystem::path(path).parent_path();

    std::vector<InstanceSpec> specs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        InstanceSpec spec;
        std::string bkr, limit;
        if (!(fields >> spec.name)) continue;  // blank or comment-only
        if (!(fields >> spec.path >> spec.num_colors))
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": expected `name path colors [bkr [time_limit]]`");
        if (spec.num_colors < 1)
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": color count must be positive");
        if (fields >> bkr && bkr != "-") {
            spec.bkr = std::stoll(bkr);
            if (*spec.bkr <= 0)
                throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                         ": best known result must be positive");
        }
        if (fields >> limit && limit != "-") spec.time_limit_seconds = std::stod(limit);

        std::filesystem::path p(spec.path);
        if (p.is_relative()) p = base_dir / p;
        spec.path = p.string();
        specs.push_back(std::move(spec));
    }
    return specs;
}

double default_time_limit(const std::string& name) {
    return starts_with(lower(name), "dsjc") ? 600.0 : 60.0;
}

double full_time_limit(const std::string& name) {
    const std::string n = lower(name);
    if (!starts_with(n, "dsjc")) return 3600.0;
    if (n == "dsjc250.9" || n == "dsjc500.1") return 72000.0;
    return 36000.0;
}

std::optional<double> RunReport::dev_best() const {
    if (!has_result() || !spec.bkr || *spec.bkr == 0) return std::nullopt;
    return (static_cast<double>(best) - static_cast<double>(*spec.bkr)) /
           static_cast<double>(*spec.bkr);
}

std::optional<double> RunReport::dev_avr() const {
    if (!has_result() || !spec.bkr || *spec.bkr == 0) return std::nullopt;
    return (avr - static_cast<double>(*spec.bkr)) / static_cast<double>(*spec.bkr);
}

RunReport run_instance(const InstanceSpec& spec, const BenchOptions& opts) {
    if (opts.runs < 1) throw std::invalid_argument("run count must be positive");
    RunReport report;
    report.spec = spec;
    report.graph = parse_dimacs_file(spec.path);

    const LinearModel model = build_linear_model(report.graph, spec.num_colors);
    const QuboModel qubo = to_qubo(model, opts.penalty);
    report.num_vars = model.num_vars();

    SolverConfig base = opts.solver;
    if (opts.time_limit_override)
        base.time_limit_seconds = *opts.time_limit_override;
    else if (opts.full_budgets)
        base.time_limit_seconds = full_time_limit(spec.name);
    else
        base.time_limit_seconds = spec.time_limit_seconds.value_or(default_time_limit(spec.name));

    report.runs.resize(opts.runs);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int r = next.fetch_add(1); r < opts.runs; r = next.fetch_add(1)) {
            SolverConfig cfg = base;
            cfg.seed = opts.base_seed + static_cast<std::uint64_t>(r);
            SolveResult sol = solve(qubo, cfg);

            RunRecord rec;
            rec.seed = cfg.seed;
            rec.time_to_best = sol.time_to_best;
            rec.iterations = sol.iterations;
            DecodeResult dec = decode(model, sol.best);
            rec.feasible = dec.ok();
            if (rec.feasible) {
                rec.sum = dec.sum;
                rec.coloring = std::move(dec.coloring);
            } else {
                rec.infeasible_reason = dec.describe();
            }
            report.runs[r] = std::move(rec);
        }
    };

    const int workers = std::max(1, std::min(opts.jobs, opts.runs));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    aggregate_runs(report);
    return report;
}

void aggregate_runs(RunReport& report) {
    report.feasible_runs = 0;
    report.best = 0;
    report.avr = report.sigma = report.t_b_avr = report.t_avr = 0;

    std::int64_t sum_of_sums = 0;
    for (const auto& run : report.runs) {
        if (!run.feasible) continue;
        if (report.feasible_runs == 0 || run.sum < report.best) report.best = run.sum;
        ++report.feasible_runs;
        sum_of_sums += run.sum;
        report.t_avr += run.time_to_best;
    }
    if (report.feasible_runs == 0) return;

    const double m = static_cast<double>(report.feasible_runs);
    report.avr = static_cast<double>(sum_of_sums) / m;
    report.t_avr /= m;

    double var = 0;
    int best_hits = 0;
    for (const auto& run : report.runs) {
        if (!run.feasible) continue;
        const double d = static_cast<double>(run.sum) - report.avr;
        var += d * d;
        if (run.sum == report.best) {
            report.t_b_avr += run.time_to_best;
            ++best_hits;
        }
    }
    report.sigma = std::sqrt(var / m);
    report.t_b_avr /= best_hits;
}

namespace {

/// Every figure that reaches a report goes back through the decoder's
/// invariants first: stored colorings must be legal and must reproduce the
/// recorded sums, and the aggregates must reproduce from the records.
void verify_report(const RunReport& r) {
    std::int64_t best = 0;
    std::int64_t sum_of_sums = 0;
    int feasible = 0;
    for (const auto& run : r.runs) {
        if (!run.feasible) continue;
        if (run.coloring.size() != r.graph.vertex_count())
            throw std::logic_error(r.spec.name + ": stored coloring has wrong length");
        if (!is_legal_coloring(r.graph, run.coloring))
            throw std::logic_error(r.spec.name + ": stored coloring is illegal");
        if (coloring_sum(run.coloring) != run.sum)
            throw std::logic_error(r.spec.name + ": stored sum disagrees with coloring");
        if (feasible == 0 || run.sum < best) best = run.sum;
        sum_of_sums += run.sum;
        ++feasible;
    }
    if (feasible != r.feasible_runs)
        throw std::logic_error(r.spec.name + ": feasible-run count disagrees");
    if (feasible == 0) return;
    if (best != r.best) throw std::logic_error(r.spec.name + ": Best disagrees with runs");
    const double avr = static_cast<double>(sum_of_sums) / feasible;
    if (std::abs(avr - r.avr) > 1e-9)
        throw std::logic_error(r.spec.name + ": Avr disagrees with runs");
}

std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

std::string opt_fixed(const std::optional<double>& v, int places) {
    return v ? fixed(*v, places) : "-";
}

}  // namespace

std::string report_csv(const std::vector<RunReport>& reports) {
    std::ostringstream out;
    out << "instance,V,E,K,N,BKR,Best,Avr,sigma,T_b_avr,T_AVR,dev_best,dev_avr\n";
    double dev_best_total = 0, dev_avr_total = 0;
    int dev_count = 0;
    for (const auto& r : reports) {
        verify_report(r);
        out << r.spec.name << ',' << r.graph.vertex_count() << ',' << r.graph.edge_count()
            << ',' << r.spec.num_colors << ',' << r.num_vars << ','
            << (r.spec.bkr ? std::to_string(*r.spec.bkr) : "-") << ',';
        if (r.has_result()) {
            out << r.best << ',' << fixed(r.avr, 2) << ',' << fixed(r.sigma, 2) << ','
                << fixed(r.t_b_avr, 3) << ',' << fixed(r.t_avr, 3) << ','
                << opt_fixed(r.dev_best(), 6) << ',' << opt_fixed(r.dev_avr(), 6) << '\n';
        } else {
            out << "-,-,-,-,-,-,-\n";
        }
        if (r.dev_best()) {
            dev_best_total += *r.dev_best();
            dev_avr_total += *r.dev_avr();
            ++dev_count;
        }
    }
    if (dev_count > 0) {
        out << "Average,,,,,,,,,,," << fixed(dev_best_total / dev_count, 6) << ','
            << fixed(dev_avr_total / dev_count, 6) << '\n';
    }
    return out.str();
}

std::string report_jsonl(const std::vector<RunReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        verify_report(r);
        nlohmann::json j;
        j["instance"] = r.spec.name;
        j["V"] = r.graph.vertex_count();
        j["E"] = r.graph.edge_count();
        j["K"] = r.spec.num_colors;
        j["N"] = r.num_vars;
        j["BKR"] = r.spec.bkr ? nlohmann::json(*r.spec.bkr) : nlohmann::json(nullptr);
        j["feasible_runs"] = r.feasible_runs;
        if (r.has_result()) {
            j["Best"] = r.best;
            j["Avr"] = r.avr;
            j["sigma"] = r.sigma;
            j["T_b_avr"] = r.t_b_avr;
            j["T_AVR"] = r.t_avr;
            j["dev_best"] = r.dev_best() ? nlohmann::json(*r.dev_best()) : nlohmann::json(nullptr);
            j["dev_avr"] = r.dev_avr() ? nlohmann::json(*r.dev_avr()) : nlohmann::json(nullptr);
        }
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& run : r.runs) {
            nlohmann::json jr;
            jr["seed"] = run.seed;
            jr["feasible"] = run.feasible;
            if (run.feasible) {
                jr["sum"] = run.sum;
                nlohmann::json colors = nlohmann::json::array();
                for (int c : run.coloring.colors) colors.push_back(c);
                jr["coloring"] = std::move(colors);
            } else {
                jr["reason"] = run.infeasible_reason;
            }
            jr["time_to_best"] = run.time_to_best;
            jr["iterations"] = run.iterations;
            runs.push_back(std::move(jr));
        }
        j["runs"] = std::move(runs);
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string report_text(const std::vector<RunReport>& reports) {
    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-12s %5s %6s %3s %6s %6s %6s %9s %8s %10s %10s %10s %10s\n",
                  "instance", "V", "E", "K", "N", "BKR", "Best", "Avr", "sigma", "T_b_avr",
                  "T_AVR", "dev_best", "dev_avr");
    out << buf;
    out << "# sigma: population std dev over feasible runs;"
           " T_b_avr: mean time among runs attaining Best\n";
    for (const auto& r : reports) {
        verify_report(r);
        const std::string bkr = r.spec.bkr ? std::to_string(*r.spec.bkr) : "-";
        if (r.has_result()) {
            std::snprintf(buf, sizeof buf,
                          "%-12s %5d %6d %3d %6d %6s %6lld %9s %8s %10s %10s %10s %10s\n",
                          r.spec.name.c_str(), r.graph.vertex_count(), r.graph.edge_count(),
                          r.spec.num_colors, r.num_vars, bkr.c_str(),
                          static_cast<long long>(r.best), fixed(r.avr, 2).c_str(),
                          fixed(r.sigma, 2).c_str(), fixed(r.t_b_avr, 3).c_str(),
                          fixed(r.t_avr, 3).c_str(), opt_fixed(r.dev_best(), 6).c_str(),
                          opt_fixed(r.dev_avr(), 6).c_str());
        } else {
            std::snprintf(buf, sizeof buf,
                          "%-12s %5d %6d %3d %6d %6s %6s %9s %8s %10s %10s %10s %10s\n",
                          r.spec.name.c_str(), r.graph.vertex_count(), r.graph.edge_count(),
                          r.spec.num_colors, r.num_vars, bkr.c_str(), "-", "-", "-", "-", "-",
                          "-", "-");
        }
        out << buf;
        for (const auto& run : r.runs) {
            if (run.feasible) continue;
            std::snprintf(buf, sizeof buf, "    ! seed %llu infeasible: %s\n",
                          static_cast<unsigned long long>(run.seed),
                          run.infeasible_reason.c_str());
            out << buf;
        }
    }
    return out.str();
}

std::string format_report(const std::vector<RunReport>& reports, const std::string& format) {
    if (format == "csv") return report_csv(reports);
    if (format == "json") return report_jsonl(reports);
    if (format == "text") return report_text(reports);
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace mscp
