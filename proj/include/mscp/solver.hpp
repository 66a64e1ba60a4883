#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "mscp/qubo.hpp"

namespace mscp {

/// Deterministic random stream. Bounded draws avoid std::uniform_int_distribution
/// so that identical seeds replay identically across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

struct SolverConfig {
    int refset_size = 10;                 // b
    double time_limit_seconds = 60.0;
    std::int64_t iteration_budget = 0;    // > 0 switches to the deterministic stop
    std::uint64_t seed = 1;

    // tabu tenure ttl = max(tt_base, N/tt_divisor + rand in [1, tt_rand_span])
    int tt_base = 40;
    int tt_divisor = 100;
    int tt_rand_span = 50;

    int mu_initial_factor = 2;            // improvement cutoff 2N for initial solutions
    std::int64_t mu_path = 500;           // improvement cutoff for path solutions
    double path_margin_fraction = 0.3;    // middle-section rule for path selection

    /// Optional early stop once the incumbent reaches this h value.
    std::optional<std::int64_t> target_h;

    void validate(int num_vars) const;    // throws std::invalid_argument

    std::int64_t mu_initial(int num_vars) const {
        return static_cast<std::int64_t>(mu_initial_factor) * num_vars;
    }
};

std::int64_t draw_tenure(int num_vars, const SolverConfig& cfg, Rng& rng);

/// Stop condition shared by every phase of a run: wall-clock deadline or a
/// total tabu-iteration budget, plus the optional target and cancel flag.
/// stamp() is seconds in wall-clock mode and iterations in budget mode, so
/// budget-mode results are bit-reproducible.
class Stopper {
public:
    Stopper(const SolverConfig& cfg, const std::atomic<bool>* cancel = nullptr);

    void count_iteration() { ++iterations_; }
    std::int64_t iterations() const { return iterations_; }

    bool should_stop(std::int64_t best_h) const;
    double stamp() const;

private:
    bool use_budget_;
    std::int64_t budget_ = 0;
    std::chrono::steady_clock::time_point start_;
    double limit_seconds_ = 0;
    std::optional<std::int64_t> target_h_;
    const std::atomic<bool>* cancel_;
    std::int64_t iterations_ = 0;
};

struct TrajectoryPoint {
    double stamp;       // seconds, or iterations in budget mode
    std::int64_t h;
};

/// Incumbent across a whole run; records one trajectory point per improvement.
class BestTracker {
public:
    explicit BestTracker(const Stopper& stopper) : stopper_(&stopper) {}

    void offer(const Assignment& x, std::int64_t h);
    void mark_init_done() { init_done_ = true; }

    bool has_best() const { return best_h_ != std::numeric_limits<std::int64_t>::min(); }
    std::int64_t best_h() const { return best_h_; }
    const Assignment& best() const { return best_; }
    double time_to_best() const { return time_to_best_; }
    const std::vector<TrajectoryPoint>& trajectory() const { return trajectory_; }
    int improvements_after_init() const { return improvements_after_init_; }

private:
    const Stopper* stopper_;
    Assignment best_;
    std::int64_t best_h_ = std::numeric_limits<std::int64_t>::min();
    double time_to_best_ = 0;
    std::vector<TrajectoryPoint> trajectory_;
    bool init_done_ = false;
    int improvements_after_init_ = 0;
};

struct TabuResult {
    Assignment best;
    std::int64_t best_h = 0;
    std::int64_t iterations = 0;
};

/// One-flip tabu search from `start`. Each iteration flips the best-gain
/// non-tabu variable (ties broken uniformly through the stream; a tabu flip
/// is allowed when it beats the best seen by this call), redraws the tenure,
/// and maintains all gains incrementally. Stops after `mu` consecutive
/// iterations without a new call-best, or when the stopper fires.
TabuResult tabu_search(const QuboModel& q, const Assignment& start, std::int64_t mu,
                       const SolverConfig& cfg, Rng& rng, Stopper& stopper,
                       BestTracker* tracker = nullptr);

/// Elite reference set, sorted best-first, members pairwise distinct.
class RefSet {
public:
    struct Entry {
        Assignment x;
        std::int64_t h;
    };

    explicit RefSet(int capacity) : capacity_(capacity) {}

    int size() const { return static_cast<int>(members_.size()); }
    int capacity() const { return capacity_; }
    const Entry& at(int i) const { return members_[i]; }
    const Entry& best() const { return members_.front(); }
    const Entry& worst() const { return members_.back(); }
    bool contains(const Assignment& x) const;

    /// RefSet updating: under capacity a distinct candidate is appended;
    /// at capacity it must strictly beat the worst member, which it evicts.
    /// Returns whether the set changed; sorted order is restored either way.
    bool try_insert(const Assignment& x, std::int64_t h);

    /// Drops everything but the best member.
    void keep_best_only();

private:
    int capacity_;
    std::vector<Entry> members_;
};

/// One-flip trajectory from `start` toward a guiding solution: flips[t] is
/// the variable flipped at step t+1, h_values[t] the objective at step t.
struct PathTrace {
    Assignment start;
    std::vector<int> flips;
    std::vector<std::int64_t> h_values;

    int distance() const { return static_cast<int>(flips.size()); }
    int length() const { return distance() + 1; }
    Assignment at(int t) const;
};

/// Connects xi to xj by flipping, at each step, one randomly chosen
/// not-yet-flipped differing variable. Requires xi != xj.
PathTrace relink(const QuboModel& q, const Assignment& xi, const Assignment& xj, Rng& rng);

/// Picks the interior path position whose distance to both endpoints is at
/// least ceil(margin * d), maximizing h (ties to the earliest). Falls back
/// to the best interior position when the margin empties the candidates;
/// yields nothing when the path has no interior (d = 1).
std::optional<int> select_on_path(const PathTrace& path, double margin_fraction);

struct RoundStats {
    int paths_built = 0;
    int inserted = 0;
};

struct SolveResult {
    Assignment best;
    std::int64_t best_h = 0;
    std::int64_t iterations = 0;
    double time_to_best = 0;                  // stamp units (see Stopper)
    std::vector<TrajectoryPoint> trajectory;  // one point per incumbent improvement
    int rounds = 0;
    int rebuilds = 0;
    int improvements_after_init = 0;
};

/// Path-relinking driver: RefSet initialization, rounds of pairwise
/// relinking with tabu improvement and RefSet updating, and RefSet
/// rebuilding after any round that inserted nothing.
class PathRelinking {
public:
    PathRelinking(const QuboModel& q, const SolverConfig& cfg,
                  const std::atomic<bool>* cancel = nullptr);

    RefSet init_refset();
    RoundStats pr_round(RefSet& rs);
    void rebuild_refset(RefSet& rs);
    SolveResult solve();

    Stopper& stopper() { return stopper_; }
    const BestTracker& tracker() const { return tracker_; }

private:
    Assignment random_assignment();
    void fill_refset(RefSet& rs);

    const QuboModel& q_;
    SolverConfig cfg_;
    Rng rng_;
    Stopper stopper_;
    BestTracker tracker_;
};

/// Convenience entry point.
SolveResult solve(const QuboModel& q, const SolverConfig& cfg,
                  const std::atomic<bool>* cancel = nullptr);

}  // namespace mscp
