#include "mscp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mscp {

void SolverConfig::validate(int num_vars) const {
    if (refset_size < 3) throw std::invalid_argument("refset_size must be at least 3");
    if (iteration_budget == 0 && time_limit_seconds <= 0)
        throw std::invalid_argument("time limit must be positive");
    if (iteration_budget < 0) throw std::invalid_argument("iteration budget must be nonnegative");
    if (path_margin_fraction <= 0 || path_margin_fraction >= 0.5)
        throw std::invalid_argument("path_margin_fraction must lie in (0, 0.5)");
    if (tt_base < 1 || tt_divisor < 1 || tt_rand_span < 1 || mu_path < 1 ||
        mu_initial_factor < 1)
        throw std::invalid_argument("tabu parameters must be positive");
    if (num_vars < 1) throw std::invalid_argument("model has no variables");
}

std::int64_t draw_tenure(int num_vars, const SolverConfig& cfg, Rng& rng) {
    std::int64_t drawn = num_vars / cfg.tt_divisor + rng.uniform_int(1, cfg.tt_rand_span);
    return std::max<std::int64_t>(cfg.tt_base, drawn);
}

Stopper::Stopper(const SolverConfig& cfg, const std::atomic<bool>* cancel)
    : use_budget_(cfg.iteration_budget > 0), budget_(cfg.iteration_budget),
      start_(std::chrono::steady_clock::now()), limit_seconds_(cfg.time_limit_seconds),
      target_h_(cfg.target_h), cancel_(cancel) {}

bool Stopper::should_stop(std::int64_t best_h) const {
    if (target_h_ && best_h >= *target_h_) return true;
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) return true;
    if (use_budget_) return iterations_ >= budget_;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() >=
           limit_seconds_;
}

double Stopper::stamp() const {
    if (use_budget_) return static_cast<double>(iterations_);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

void BestTracker::offer(const Assignment& x, std::int64_t h) {
    if (h <= best_h_) return;
    best_ = x;
    best_h_ = h;
    time_to_best_ = stopper_->stamp();
    trajectory_.push_back({time_to_best_, h});
    if (init_done_) ++improvements_after_init_;
}

TabuResult tabu_search(const QuboModel& q, const Assignment& start, std::int64_t mu,
                       const SolverConfig& cfg, Rng& rng, Stopper& stopper,
                       BestTracker* tracker) {
    const int n = q.dimension();
    if (start.size() != n) throw std::invalid_argument("start length mismatch");
    if (mu < 1) throw std::invalid_argument("improvement cutoff must be positive");

    Assignment x = start;
    std::int64_t h = eval_h(q, x);
    std::vector<std::int64_t> gain(n);
    for (int i = 0; i < n; ++i) gain[i] = flip_gain(q, x, i);

    Assignment best = x;
    std::int64_t best_h = h;
    if (tracker) tracker->offer(x, h);

    std::vector<std::int64_t> tabu_until(n, 0);
    std::int64_t step = 0;          // flips completed
    std::int64_t since_improve = 0;

    const std::int64_t global_for_stop = tracker ? tracker->best_h() : best_h;
    if (stopper.should_stop(std::max(global_for_stop, best_h))) return {best, best_h, 0};

    while (since_improve < mu) {
        // best-gain move over non-tabu variables; a tabu variable competes
        // only when flipping it beats this call's best (aspiration)
        int pick = -1;
        std::int64_t pick_gain = 0;
        int ties = 0;
        for (int i = 0; i < n; ++i) {
            if (step < tabu_until[i] && h + gain[i] <= best_h) continue;
            if (pick < 0 || gain[i] > pick_gain) {
                pick = i;
                pick_gain = gain[i];
                ties = 1;
            } else if (gain[i] == pick_gain) {
                ++ties;
                if (rng.uniform_int(1, ties) == 1) pick = i;
            }
        }
        if (pick < 0) {
            // everything tabu and nothing aspires: ignore the list this step
            for (int i = 0; i < n; ++i) {
                if (pick < 0 || gain[i] > pick_gain) {
                    pick = i;
                    pick_gain = gain[i];
                    ties = 1;
                } else if (gain[i] == pick_gain) {
                    ++ties;
                    if (rng.uniform_int(1, ties) == 1) pick = i;
                }
            }
        }

        const int sign_old = x[pick] ? -1 : 1;  // (1 - 2*x_old)
        x[pick] ^= 1;
        h += gain[pick];
        for (const auto& e : q.row(pick)) {
            const int sign_j = x[e.col] ? -1 : 1;
            gain[e.col] += 2 * e.val * sign_old * sign_j;
        }
        gain[pick] = -gain[pick];
        tabu_until[pick] = step + 1 + draw_tenure(n, cfg, rng);
        ++step;
        stopper.count_iteration();

        if (h > best_h) {
            best_h = h;
            best = x;
            since_improve = 0;
            if (tracker) tracker->offer(x, h);
        } else {
            ++since_improve;
        }

        const std::int64_t global = tracker ? tracker->best_h() : best_h;
        if (stopper.should_stop(global)) break;
    }
    return {best, best_h, step};
}

bool RefSet::contains(const Assignment& x) const {
    for (const auto& m : members_)
        if (m.x == x) return true;
    return false;
}

bool RefSet::try_insert(const Assignment& x, std::int64_t h) {
    if (contains(x)) return false;
    if (size() >= capacity_) {
        if (h <= members_.back().h) return false;
        members_.back() = {x, h};
    } else {
        members_.push_back({x, h});
    }
    std::sort(members_.begin(), members_.end(),
              [](const Entry& a, const Entry& b) { return a.h > b.h; });
    return true;
}

void RefSet::keep_best_only() {
    if (members_.size() > 1) members_.resize(1);
}

Assignment PathTrace::at(int t) const {
    Assignment x = start;
    for (int s = 0; s < t; ++s) x[flips[s]] ^= 1;
    return x;
}

PathTrace relink(const QuboModel& q, const Assignment& xi, const Assignment& xj, Rng& rng) {
    if (xi.size() != q.dimension() || xj.size() != q.dimension())
        throw std::invalid_argument("assignment length mismatch");
    std::vector<int> differing;
    for (int i = 0; i < xi.size(); ++i)
        if (xi[i] != xj[i]) differing.push_back(i);
    if (differing.empty()) throw std::invalid_argument("relink endpoints are identical");

    PathTrace path;
    path.start = xi;
    path.flips.reserve(differing.size());
    path.h_values.reserve(differing.size() + 1);

    Assignment x = xi;
    std::int64_t h = eval_h(q, x);
    path.h_values.push_back(h);
    while (!differing.empty()) {
        const int at = rng.uniform_int(0, static_cast<int>(differing.size()) - 1);
        const int var = differing[at];
        differing[at] = differing.back();
        differing.pop_back();
        h += flip_gain(q, x, var);
        x[var] ^= 1;
        path.flips.push_back(var);
        path.h_values.push_back(h);
    }
    return path;
}

std::optional<int> select_on_path(const PathTrace& path, double margin_fraction) {
    const int d = path.distance();
    if (d < 2) return std::nullopt;  // no interior solution
    const int margin = static_cast<int>(std::ceil(margin_fraction * d));

    auto best_in = [&](int lo, int hi) {
        int best_t = lo;
        for (int t = lo + 1; t <= hi; ++t)
            if (path.h_values[t] > path.h_values[best_t]) best_t = t;  // ties keep earliest
        return best_t;
    };

    const int lo = std::max(1, margin);
    const int hi = std::min(d - 1, d - margin);
    if (lo <= hi) return best_in(lo, hi);
    return best_in(1, d - 1);  // margin emptied the middle: best interior
}

PathRelinking::PathRelinking(const QuboModel& q, const SolverConfig& cfg,
                             const std::atomic<bool>* cancel)
    : q_(q), cfg_(cfg), rng_(cfg.seed), stopper_(cfg, cancel), tracker_(stopper_) {
    cfg_.validate(q.dimension());
}

Assignment PathRelinking::random_assignment() {
    Assignment x(q_.dimension());
    for (int i = 0; i < x.size(); ++i) x[i] = static_cast<std::uint8_t>(rng_.next_u64() & 1u);
    return x;
}

void PathRelinking::fill_refset(RefSet& rs) {
    const std::int64_t mu_init = cfg_.mu_initial(q_.dimension());
    int attempts = 0;
    const int attempt_cap = 50 * cfg_.refset_size;
    while (rs.size() < cfg_.refset_size && attempts < attempt_cap) {
        ++attempts;
        auto improved = tabu_search(q_, random_assignment(), mu_init, cfg_, rng_, stopper_,
                                    &tracker_);
        if (!rs.contains(improved.best)) rs.try_insert(improved.best, improved.best_h);
        if (rs.size() >= 1 && stopper_.should_stop(tracker_.best_h())) break;
    }
}

RefSet PathRelinking::init_refset() {
    RefSet rs(cfg_.refset_size);
    fill_refset(rs);
    return rs;
}

RoundStats PathRelinking::pr_round(RefSet& rs) {
    RoundStats stats;
    // snapshot: updates during the round must not change the pairing
    std::vector<RefSet::Entry> snap;
    snap.reserve(rs.size());
    for (int i = 0; i < rs.size(); ++i) snap.push_back(rs.at(i));

    for (std::size_t i = 0; i < snap.size() && !stopper_.should_stop(tracker_.best_h()); ++i) {
        for (std::size_t j = i + 1; j < snap.size(); ++j) {
            for (int dir = 0; dir < 2; ++dir) {
                if (stopper_.should_stop(tracker_.best_h())) return stats;
                const Assignment& from = dir == 0 ? snap[i].x : snap[j].x;
                const Assignment& to = dir == 0 ? snap[j].x : snap[i].x;
                PathTrace path = relink(q_, from, to, rng_);
                ++stats.paths_built;
                auto sel = select_on_path(path, cfg_.path_margin_fraction);
                if (!sel) continue;
                auto improved = tabu_search(q_, path.at(*sel), cfg_.mu_path, cfg_, rng_,
                                            stopper_, &tracker_);
                if (rs.try_insert(improved.best, improved.best_h)) ++stats.inserted;
            }
        }
    }
    return stats;
}

void PathRelinking::rebuild_refset(RefSet& rs) {
    rs.keep_best_only();
    fill_refset(rs);
}

SolveResult PathRelinking::solve() {
    RefSet rs = init_refset();
    tracker_.mark_init_done();

    SolveResult result;
    while (!stopper_.should_stop(tracker_.best_h())) {
        if (rs.size() >= 2) {
            RoundStats stats = pr_round(rs);
            ++result.rounds;
            if (stopper_.should_stop(tracker_.best_h())) break;
            if (stats.inserted == 0) {
                rebuild_refset(rs);
                ++result.rebuilds;
            }
        } else {
            rebuild_refset(rs);
            ++result.rebuilds;
        }
    }

    result.best = tracker_.best();
    result.best_h = tracker_.best_h();
    result.iterations = stopper_.iterations();
    result.time_to_best = tracker_.time_to_best();
    result.trajectory = tracker_.trajectory();
    result.improvements_after_init = tracker_.improvements_after_init();
    return result;
}

SolveResult solve(const QuboModel& q, const SolverConfig& cfg, const std::atomic<bool>* cancel) {
    PathRelinking engine(q, cfg, cancel);
    return engine.solve();
}

}  // namespace mscp
