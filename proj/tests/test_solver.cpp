#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mscp/oracle.hpp"
#include "mscp/solver.hpp"
#include "support.hpp"

using mscp::Assignment;
using mscp::QuboModel;
using mscp::Rng;
using mscp::SolverConfig;
using mscp::Stopper;

namespace {

SolverConfig budget_config(std::int64_t budget, std::uint64_t seed = 1) {
    SolverConfig cfg;
    cfg.iteration_budget = budget;
    cfg.seed = seed;
    return cfg;
}

QuboModel worked_example_qubo() {
    return mscp::to_qubo(mscp::build_linear_model(testsupport::four_cycle(), 2), -5);
}

}  // namespace

TEST_CASE("config validation rejects nonsense") {
    SolverConfig cfg;
    CHECK_NOTHROW(cfg.validate(10));
    SolverConfig bad = cfg;
    bad.refset_size = 2;
    CHECK_THROWS_AS(bad.validate(10), std::invalid_argument);
    bad = cfg;
    bad.time_limit_seconds = 0;
    CHECK_THROWS_AS(bad.validate(10), std::invalid_argument);
    bad.iteration_budget = 100;  // a budget substitutes for the clock
    CHECK_NOTHROW(bad.validate(10));
    bad = cfg;
    bad.path_margin_fraction = 0.5;
    CHECK_THROWS_AS(bad.validate(10), std::invalid_argument);
    bad = cfg;
    bad.mu_path = 0;
    CHECK_THROWS_AS(bad.validate(10), std::invalid_argument);
    CHECK_THROWS_AS(cfg.validate(0), std::invalid_argument);
}

TEST_CASE("tenure draws stay inside the documented band") {
    SolverConfig cfg;
    Rng rng(99);
    for (int n : {10, 1000, 20000}) {
        const std::int64_t lo = std::max<std::int64_t>(40, n / 100 + 1);
        const std::int64_t hi = std::max<std::int64_t>(40, n / 100 + 50);
        for (int rep = 0; rep < 500; ++rep) {
            const std::int64_t ttl = mscp::draw_tenure(n, cfg, rng);
            CHECK(ttl >= lo);
            CHECK(ttl <= hi);
        }
    }
}

TEST_CASE("stopper in budget mode counts iterations as its clock") {
    SolverConfig cfg = budget_config(5);
    Stopper stopper(cfg);
    CHECK(!stopper.should_stop(0));
    for (int i = 0; i < 5; ++i) stopper.count_iteration();
    CHECK(stopper.should_stop(0));
    CHECK(stopper.iterations() == 5);
    CHECK(stopper.stamp() == doctest::Approx(5.0));
}

TEST_CASE("stopper honors target and cancellation") {
    SolverConfig cfg = budget_config(1'000'000);
    cfg.target_h = -6;
    Stopper stopper(cfg);
    CHECK(!stopper.should_stop(-7));
    CHECK(stopper.should_stop(-6));
    CHECK(stopper.should_stop(-5));

    std::atomic<bool> cancel{false};
    SolverConfig cfg2 = budget_config(1'000'000);
    Stopper stopper2(cfg2, &cancel);
    CHECK(!stopper2.should_stop(0));
    cancel = true;
    CHECK(stopper2.should_stop(0));
}

TEST_CASE("tracker records strictly improving trajectory") {
    SolverConfig cfg = budget_config(100);
    Stopper stopper(cfg);
    mscp::BestTracker tracker(stopper);
    CHECK(!tracker.has_best());
    Assignment a(3);
    tracker.offer(a, -10);
    tracker.offer(a, -12);  // worse: ignored
    tracker.offer(a, -10);  // equal: ignored
    tracker.mark_init_done();
    tracker.offer(a, -8);
    tracker.offer(a, -5);
    CHECK(tracker.best_h() == -5);
    CHECK(tracker.improvements_after_init() == 2);
    const auto& tr = tracker.trajectory();
    REQUIRE(tr.size() == 3);
    for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i].h > tr[i - 1].h);
}

TEST_CASE("tabu search finds the worked-example optimum from zero") {
    QuboModel q = worked_example_qubo();
    SolverConfig cfg = budget_config(10'000);
    Rng rng(3);
    Stopper stopper(cfg);
    auto res = mscp::tabu_search(q, Assignment(8), 200, cfg, rng, stopper);
    CHECK(res.best_h == -6);
    CHECK(mscp::eval_h(q, res.best) == -6);
}

TEST_CASE("tabu search maximizes a separable model exactly") {
    // +1 on every diagonal, no interactions: optimum is all ones
    QuboModel q(30, 5);
    for (int i = 0; i < 30; ++i) q.add_diag(i, 1);
    q.finalize();
    SolverConfig cfg = budget_config(5'000);
    Rng rng(17);
    Stopper stopper(cfg);
    auto res = mscp::tabu_search(q, Assignment(30), 60, cfg, rng, stopper);
    CHECK(res.best_h == 35);
    for (int i = 0; i < 30; ++i) CHECK(res.best[i] == 1);
}

TEST_CASE("tabu search stops after mu non-improving iterations") {
    QuboModel q = worked_example_qubo();
    SolverConfig cfg = budget_config(1'000'000);
    Rng rng(3);
    Stopper stopper(cfg);
    auto res = mscp::tabu_search(q, Assignment(8), 50, cfg, rng, stopper);
    // ends with exactly mu consecutive non-improving steps; h climbs from
    // -20 toward -6, so at most 14 improving steps partition the rest
    CHECK(res.iterations >= 50);
    CHECK(res.iterations <= 15 * 51);
    CHECK(stopper.iterations() == res.iterations);
}

TEST_CASE("reference set keeps distinct members sorted by value") {
    mscp::RefSet rs(3);
    Assignment a(4), b(4), c(4), d(4);
    b[0] = 1;
    c[1] = 1;
    d[2] = 1;
    CHECK(rs.try_insert(a, -10));
    CHECK(!rs.try_insert(a, -10));  // duplicate assignment
    CHECK(rs.try_insert(b, -5));
    CHECK(rs.try_insert(c, -7));
    CHECK(rs.size() == 3);
    CHECK(rs.best().h == -5);
    CHECK(rs.worst().h == -10);

    CHECK(!rs.try_insert(d, -10));  // does not beat the worst
    Assignment e(4);
    e[3] = 1;
    CHECK(rs.try_insert(e, -6));    // evicts the -10 member
    CHECK(rs.worst().h == -7);
    CHECK(rs.size() == 3);
    for (int i = 1; i < rs.size(); ++i) CHECK(rs.at(i - 1).h >= rs.at(i).h);

    rs.keep_best_only();
    CHECK(rs.size() == 1);
    CHECK(rs.best().h == -5);
}

TEST_CASE("relink walks exactly the differing coordinates") {
    std::mt19937_64 gen(523);
    QuboModel q = testsupport::random_qubo(20, 0.4, 100, gen);
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Assignment from = testsupport::random_assignment(20, gen);
        Assignment to = testsupport::random_assignment(20, gen);
        if (from == to) continue;
        auto path = mscp::relink(q, from, to, rng);
        const int d = mscp::hamming_distance(from, to);
        CHECK(path.distance() == d);
        CHECK(path.at(0) == from);
        CHECK(path.at(d) == to);
        REQUIRE(static_cast<int>(path.h_values.size()) == d + 1);
        for (int t = 0; t <= d; ++t)
            CHECK(path.h_values[t] == mscp::eval_h(q, path.at(t)));
    }
    Assignment same(20);
    CHECK_THROWS_AS(mscp::relink(q, same, same, rng), std::invalid_argument);
}

TEST_CASE("path selection picks the best value inside the middle section") {
    mscp::PathTrace path;
    path.flips = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    path.h_values = {100, 99, 98, 50, 60, 55, 52, 97, 96, 95, 100};
    // d = 10, margin = ceil(0.3 * 10) = 3: candidates are t in [3, 7];
    // the endpoint-adjacent 99/98/96/95 are excluded by construction
    auto sel = mscp::select_on_path(path, 0.3);
    REQUIRE(sel.has_value());
    CHECK(*sel == 7);  // 97 is the largest among positions 3..7
}

TEST_CASE("path selection falls back when the margin empties the middle") {
    mscp::PathTrace path;
    path.flips = {4, 9, 2};
    path.h_values = {10, 3, 8, 11};  // d = 3
    // margin ceil(0.45 * 3) = 2: [2, 1] is empty, fall back to best interior
    auto sel = mscp::select_on_path(path, 0.45);
    REQUIRE(sel.has_value());
    CHECK(*sel == 2);  // h = 8 beats h = 3

    mscp::PathTrace short_path;
    short_path.flips = {0};
    short_path.h_values = {5, 6};
    CHECK(!mscp::select_on_path(short_path, 0.3).has_value());  // no interior
}

TEST_CASE("path selection breaks ties toward the earlier position") {
    mscp::PathTrace path;
    path.flips = {0, 1, 2, 3};
    path.h_values = {0, 7, 9, 9, 0};  // d = 4, margin 2: candidates t in [2, 2]
    auto sel = mscp::select_on_path(path, 0.3);  // ceil(1.2) = 2
    REQUIRE(sel.has_value());
    CHECK(*sel == 2);
}

TEST_CASE("path relinking solves the worked example to optimality") {
    QuboModel q = worked_example_qubo();
    SolverConfig cfg = budget_config(20'000, 5);
    cfg.refset_size = 4;  // only 2^8 assignments exist; a full elite set of 10 is unreachable
    auto res = mscp::solve(q, cfg);
    CHECK(res.best_h == -6);
    CHECK(mscp::eval_h(q, res.best) == -6);
    CHECK(res.iterations <= 20'000);
    CHECK(!res.trajectory.empty());
    for (std::size_t i = 1; i < res.trajectory.size(); ++i)
        CHECK(res.trajectory[i].h > res.trajectory[i - 1].h);
}

TEST_CASE("path relinking matches the exhaustive optimum on small models") {
    std::mt19937_64 gen(733);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 10 + static_cast<int>(gen() % 7);  // 10..16
        QuboModel q = testsupport::random_qubo(n, 0.5, 200, gen);
        CAPTURE(trial);
        auto exact = mscp::brute_force_qubo(q);
        SolverConfig cfg = budget_config(30'000, 1000 + trial);
        cfg.refset_size = 5;
        auto res = mscp::solve(q, cfg);
        CHECK(res.best_h == exact.optimum);
    }
}

TEST_CASE("a round relinks every snapshot pair in both directions") {
    QuboModel q = worked_example_qubo();
    SolverConfig cfg = budget_config(1'000'000, 9);
    cfg.refset_size = 3;
    mscp::PathRelinking engine(q, cfg);
    mscp::RefSet rs = engine.init_refset();
    REQUIRE(rs.size() >= 2);
    const int b = rs.size();  // the round pairs its snapshot, not live membership
    auto stats = engine.pr_round(rs);
    // b members give b*(b-1) directed paths when nothing interrupts
    CHECK(stats.paths_built == b * (b - 1));
}

TEST_CASE("solve stops early once the target is reached") {
    QuboModel q = worked_example_qubo();
    SolverConfig cfg = budget_config(1'000'000'000, 2);
    cfg.refset_size = 4;
    cfg.target_h = -6;
    auto res = mscp::solve(q, cfg);
    CHECK(res.best_h == -6);
    CHECK(res.iterations < 1'000'000);  // the budget alone would run far longer
}

TEST_CASE("identical seeds reproduce the full result in budget mode") {
    std::mt19937_64 gen(881);
    QuboModel q = testsupport::random_qubo(40, 0.3, 400, gen);
    SolverConfig cfg = budget_config(15'000, 4242);
    auto r1 = mscp::solve(q, cfg);
    auto r2 = mscp::solve(q, cfg);
    CHECK(r1.best_h == r2.best_h);
    CHECK(r1.best == r2.best);
    CHECK(r1.iterations == r2.iterations);
    CHECK(r1.time_to_best == r2.time_to_best);
    CHECK(r1.rounds == r2.rounds);
    CHECK(r1.rebuilds == r2.rebuilds);
    REQUIRE(r1.trajectory.size() == r2.trajectory.size());
    for (std::size_t i = 0; i < r1.trajectory.size(); ++i) {
        CHECK(r1.trajectory[i].stamp == r2.trajectory[i].stamp);
        CHECK(r1.trajectory[i].h == r2.trajectory[i].h);
    }

    SolverConfig other = cfg;
    other.seed = 4243;  // different stream, same budget
    auto r3 = mscp::solve(q, other);
    CHECK(r3.iterations == r1.iterations);  // budget is exact either way
}

TEST_CASE("incremental gains equal full recomputation across random flips") {
    std::mt19937_64 gen(997);
    QuboModel q = testsupport::random_qubo(200, 0.05, 1000, gen);
    Assignment x = testsupport::random_assignment(200, gen);
    std::int64_t h = mscp::eval_h(q, x);
    for (int flip = 0; flip < 1000; ++flip) {
        const int i = static_cast<int>(gen() % 200);
        const std::int64_t gain = mscp::flip_gain(q, x, i);
        x[i] ^= 1;
        h += gain;
        CHECK(h == mscp::eval_h(q, x));
    }
}
