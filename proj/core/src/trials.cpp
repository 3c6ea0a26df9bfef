#include "ffopt/trials.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "ffopt/objectives.hpp"

namespace ffopt {

namespace {

// 10x the published per-cell mean evaluation counts, GA/PSO/FA order.
const std::map<std::string, std::array<std::uint64_t, 3>> kCapTable = {
    {"michalewicz", {893250, 69220, 37520}},
    {"rosenbrock", {557230, 327560, 77920}},
    {"dejong", {254120, 170400, 72170}},
    {"schwefel", {2273290, 145220, 99020}},
    {"ackley", {327200, 234070, 52930}},
    {"rastrigin", {1105230, 794910, 155730}},
    {"easom", {192390, 172730, 79250}},
    {"griewank", {709250, 559700, 125920}},
    {"shubert", {540770, 239920, 125770}},
    {"yang", {279230, 141160, 73900}},
};

std::size_t algorithm_column(Algorithm a) {
    switch (a) {
        case Algorithm::GA: return 0;
        case Algorithm::PSO: return 1;
        case Algorithm::FA: return 2;
    }
    return 2;
}

RunRecord run_one(const TrialPlan& plan, const Objective& objective,
                  std::uint64_t seed) {
    RandomSource rng(seed);
    const std::uint64_t cap = plan.evaluation_cap != 0
                                  ? plan.evaluation_cap
                                  : default_evaluation_cap(plan.algorithm, plan.objective);
    switch (plan.algorithm) {
        case Algorithm::FA: {
            FaConfig cfg = plan.fa;
            cfg.max_evaluations = cap;
            return fa_run(objective, cfg, rng, plan.stop);
        }
        case Algorithm::PSO: {
            PsoConfig cfg = plan.pso;
            cfg.max_evaluations = cap;
            return pso_run(objective, cfg, rng, plan.stop);
        }
        case Algorithm::GA: {
            GaConfig cfg = plan.ga;
            cfg.max_evaluations = cap;
            return ga_run(objective, cfg, rng, plan.stop);
        }
    }
    throw std::logic_error("unreachable algorithm");
}

}  // namespace

std::uint64_t default_evaluation_cap(Algorithm algorithm, const std::string& objective) {
    auto it = kCapTable.find(objective);
    if (it == kCapTable.end()) return 500000;
    return it->second[algorithm_column(algorithm)];
}

bool is_success(const RunRecord& record, const Objective& objective) {
    if (!objective.known_best_value)
        throw std::invalid_argument("is_success: objective '" + objective.name +
                                    "' has no known optimum");
    return within_success_tolerance(objective, record.best_value);
}

SummaryRow summarize(Algorithm algorithm, const std::string& objective,
                     const std::vector<RunRecord>& records) {
    SummaryRow row;
    row.algorithm = algorithm;
    row.objective = objective;
    row.runs = records.size();
    double sum = 0.0;
    for (const RunRecord& r : records) {
        if (!r.success) continue;
        ++row.successes;
        sum += static_cast<double>(r.evaluations_used);
    }
    row.success_rate = row.runs == 0
                           ? 0.0
                           : static_cast<double>(row.successes) /
                                 static_cast<double>(row.runs);
    if (row.successes > 0) {
        row.mean_evaluations = sum / static_cast<double>(row.successes);
        if (row.successes > 1) {
            double ss = 0.0;
            for (const RunRecord& r : records) {
                if (!r.success) continue;
                const double d =
                    static_cast<double>(r.evaluations_used) - row.mean_evaluations;
                ss += d * d;
            }
            row.std_evaluations =
                std::sqrt(ss / static_cast<double>(row.successes - 1));
        }
    }
    return row;
}

TrialResult run_trials(const TrialPlan& plan, bool parallel) {
    if (plan.runs < 1) throw std::invalid_argument("run_trials: runs must be >= 1");
    if (plan.stop.tolerance <= 0.0)
        throw std::invalid_argument("run_trials: tolerance must be > 0");

    Objective objective = make_objective(plan.objective, plan.dim);
    objective.success_tolerance = plan.success_tolerance;

    std::vector<RunRecord> records(plan.runs);
    auto work = [&](std::size_t first, std::size_t last) {
        for (std::size_t r = first; r < last; ++r)
            records[r] = run_one(plan, objective, plan.base_seed + r);
    };

    const std::size_t hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        parallel ? std::min<std::size_t>(std::max<std::size_t>(hw, 1), plan.runs) : 1;
    if (workers <= 1) {
        work(0, plan.runs);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (plan.runs + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t first = w * chunk;
            const std::size_t last = std::min(first + chunk, plan.runs);
            if (first >= last) break;
            pool.emplace_back(work, first, last);
        }
        for (auto& t : pool) t.join();
    }

    TrialResult result;
    result.summary = summarize(plan.algorithm, plan.objective, records);
    result.records = std::move(records);
    return result;
}

}  // namespace ffopt
