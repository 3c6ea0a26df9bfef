#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <cstdint>
#include <cstring>
#include <limits>
#include <span>
#include <vector>

#include "ffopt/objectives.hpp"
#include "ffopt/trials.hpp"

using namespace ffopt;

namespace {

RunRecord record_with(double best, std::uint64_t evals, bool success) {
    RunRecord r;
    r.best_value = best;
    r.evaluations_used = evals;
    r.success = success;
    return r;
}

bool same_records(const RunRecord& a, const RunRecord& b) {
    if (a.algorithm != b.algorithm || a.objective_name != b.objective_name ||
        a.seed != b.seed || a.evaluations_used != b.evaluations_used ||
        a.success != b.success)
        return false;
    if (std::memcmp(&a.best_value, &b.best_value, sizeof(double)) != 0) return false;
    if (a.best_point != b.best_point) return false;
    if (a.trace.size() != b.trace.size()) return false;
    for (std::size_t i = 0; i < a.trace.size(); ++i)
        if (a.trace[i].evaluations != b.trace[i].evaluations ||
            a.trace[i].best != b.trace[i].best)
            return false;
    return true;
}

}  // namespace

TEST_CASE("success checking against known optima") {
    const Objective sphere = make_objective("dejong", 2);  // optimum 0, tol 1e-3

    CHECK(is_success(record_with(0.0, 10, false), sphere));
    CHECK(is_success(record_with(1e-3, 10, false), sphere));  // boundary included
    CHECK(!is_success(record_with(0.002, 10, false), sphere));
    CHECK(!is_success(record_with(-5.0, 10, false), sphere));  // far off either way

    const Objective wave = make_objective("yang", 2);  // optimum -1
    CHECK(is_success(record_with(-0.9995, 10, false), wave));
    CHECK(!is_success(record_with(-0.998, 10, false), wave));

    Objective anon;
    anon.name = "mystery";
    anon.space = uniform_space(1, 0.0, 1.0);
    anon.eval = [](std::span<const double> x) { return x[0]; };
    CHECK_THROWS_AS(is_success(record_with(0.0, 10, false), anon),
                    std::invalid_argument);
}

TEST_CASE("cell statistics summarize successful runs only") {
    std::vector<RunRecord> records;
    records.push_back(record_with(0.0, 100, true));
    records.push_back(record_with(0.0, 200, true));
    records.push_back(record_with(0.0, 300, true));

    SUBCASE("all successes: sample mean and std") {
        const SummaryRow row = summarize(Algorithm::FA, "dejong", records);
        CHECK(row.algorithm == Algorithm::FA);
        CHECK(row.objective == "dejong");
        CHECK(row.runs == 3);
        CHECK(row.successes == 3);
        CHECK(row.success_rate == 1.0);
        CHECK(row.mean_evaluations == 200.0);
        CHECK(row.std_evaluations == 100.0);  // divisor is successes-1
    }

    SUBCASE("failures are excluded from the evaluation statistics") {
        records.push_back(record_with(7.0, 99999, false));
        const SummaryRow row = summarize(Algorithm::GA, "dejong", records);
        CHECK(row.runs == 4);
        CHECK(row.successes == 3);
        CHECK(row.success_rate == 0.75);
        CHECK(row.mean_evaluations == 200.0);
        CHECK(row.std_evaluations == 100.0);
    }

    SUBCASE("a single success has zero spread") {
        const std::vector<RunRecord> one{record_with(0.0, 400, true)};
        const SummaryRow row = summarize(Algorithm::PSO, "dejong", one);
        CHECK(row.successes == 1);
        CHECK(row.mean_evaluations == 400.0);
        CHECK(row.std_evaluations == 0.0);
    }

    SUBCASE("no successes leaves the statistics at zero") {
        const std::vector<RunRecord> none{record_with(9.0, 500, false),
                                          record_with(8.0, 600, false)};
        const SummaryRow row = summarize(Algorithm::GA, "dejong", none);
        CHECK(row.successes == 0);
        CHECK(row.success_rate == 0.0);
        CHECK(row.mean_evaluations == 0.0);
        CHECK(row.std_evaluations == 0.0);
    }
}

TEST_CASE("default evaluation caps come from the per-pair table") {
    CHECK(default_evaluation_cap(Algorithm::GA, "michalewicz") == 893250);
    CHECK(default_evaluation_cap(Algorithm::PSO, "michalewicz") == 69220);
    CHECK(default_evaluation_cap(Algorithm::FA, "michalewicz") == 37520);
    CHECK(default_evaluation_cap(Algorithm::FA, "schwefel") == 99020);
    CHECK(default_evaluation_cap(Algorithm::GA, "rastrigin") == 1105230);
    CHECK(default_evaluation_cap(Algorithm::PSO, "easom") == 172730);
    CHECK(default_evaluation_cap(Algorithm::FA, "yang") == 73900);

    for (Algorithm a : {Algorithm::GA, Algorithm::PSO, Algorithm::FA})
        CHECK(default_evaluation_cap(a, "not-in-the-catalog") == 500000);
}

TEST_CASE("trials use consecutive seeds starting at the base seed") {
    TrialPlan plan;
    plan.algorithm = Algorithm::FA;
    plan.objective = "rastrigin";
    plan.dim = 2;
    plan.runs = 5;
    plan.base_seed = 42;
    plan.fa.n = 8;
    plan.fa.max_generations = 5;
    plan.stop.window = 0;

    const TrialResult res = run_trials(plan, false);
    REQUIRE(res.records.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(res.records[i].seed == 42 + i);
        CHECK(res.records[i].algorithm == Algorithm::FA);
        CHECK(res.records[i].objective_name == "rastrigin");
        CHECK(res.records[i].best_point.size() == 2);
    }
    CHECK(res.summary.runs == 5);
}

TEST_CASE("parallel and serial trial execution produce identical results") {
    TrialPlan plan;
    plan.algorithm = Algorithm::GA;
    plan.objective = "ackley";
    plan.dim = 3;
    plan.runs = 16;
    plan.base_seed = 7;
    plan.ga.n = 10;
    plan.ga.max_generations = 30;
    plan.evaluation_cap = 2000;
    plan.stop.window = 0;

    const TrialResult serial = run_trials(plan, false);
    const TrialResult parallel = run_trials(plan, true);
    const TrialResult parallel2 = run_trials(plan, true);

    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(same_records(serial.records[i], parallel.records[i]));
        CHECK(same_records(parallel.records[i], parallel2.records[i]));
    }
    CHECK(serial.summary.successes == parallel.summary.successes);
    CHECK(serial.summary.success_rate == parallel.summary.success_rate);
    CHECK(serial.summary.mean_evaluations == parallel.summary.mean_evaluations);
    CHECK(serial.summary.std_evaluations == parallel.summary.std_evaluations);
}

TEST_CASE("the evaluation cap is enforced exactly when runs exhaust it") {
    TrialPlan plan;
    plan.algorithm = Algorithm::FA;
    plan.objective = "dejong";
    plan.dim = 2;
    plan.runs = 1;
    plan.stop.window = 0;  // nothing else can stop the run

    SUBCASE("explicit override") {
        plan.evaluation_cap = 1234;
        const TrialResult res = run_trials(plan, false);
        CHECK(res.records[0].evaluations_used == 1234);
    }

    SUBCASE("table default for the pair") {
        const TrialResult res = run_trials(plan, false);
        CHECK(res.records[0].evaluations_used ==
              default_evaluation_cap(Algorithm::FA, "dejong"));
    }
}

TEST_CASE("the plan's success tolerance reaches the objective") {
    TrialPlan plan;
    plan.algorithm = Algorithm::PSO;
    plan.objective = "rastrigin";
    plan.dim = 4;
    plan.runs = 3;
    plan.pso.n = 8;
    plan.pso.max_generations = 3;
    plan.evaluation_cap = 100;
    plan.success_tolerance = 1e9;  // everything counts as a success

    const TrialResult res = run_trials(plan, false);
    CHECK(res.summary.successes == 3);
    CHECK(res.summary.success_rate == 1.0);
}

TEST_CASE("hopeless budgets give a zero-success summary") {
    TrialPlan plan;
    plan.algorithm = Algorithm::GA;
    plan.objective = "michalewicz";  // d=16, optimum near -15.64
    plan.runs = 4;
    plan.evaluation_cap = 200;
    plan.stop.window = 0;

    const TrialResult res = run_trials(plan, false);
    CHECK(res.summary.successes == 0);
    CHECK(res.summary.success_rate == 0.0);
    CHECK(res.summary.mean_evaluations == 0.0);
    CHECK(res.summary.std_evaluations == 0.0);
}

TEST_CASE("invalid plans are rejected") {
    TrialPlan plan;
    plan.runs = 0;
    CHECK_THROWS_AS(run_trials(plan, false), std::invalid_argument);

    TrialPlan bad_tol;
    bad_tol.stop.tolerance = 0.0;
    CHECK_THROWS_AS(run_trials(bad_tol, false), std::invalid_argument);

    TrialPlan bad_obj;
    bad_obj.objective = "nope";
    CHECK_THROWS_AS(run_trials(bad_obj, false), std::invalid_argument);
}
