#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffopt/baselines.hpp"
#include "ffopt/firefly.hpp"
#include "ffopt/objective.hpp"
#include "ffopt/stopping.hpp"

namespace ffopt {

// One benchmark cell: `runs` seeded trials of a single algorithm on a
// single objective. Seeds are base_seed + 0 .. base_seed + runs - 1.
// evaluation_cap = 0 picks the default cap for the (algorithm, objective)
// pair; it overrides the per-algorithm max_evaluations when set.
struct TrialPlan {
    Algorithm algorithm = Algorithm::FA;
    std::string objective = "michalewicz";
    std::size_t dim = 0;  // 0 = the objective's default dimension
    std::size_t runs = 100;
    std::uint64_t base_seed = 1;
    StopRule stop{};
    double success_tolerance = 1e-3;
    std::uint64_t evaluation_cap = 0;
    FaConfig fa{};
    PsoConfig pso{};
    GaConfig ga{};
};

// Table-style cell statistics. Evaluation mean/std are computed over the
// successful runs only (sample std, divisor successes-1; 0 when fewer
// than two successes); success_rate is over all runs.
struct SummaryRow {
    Algorithm algorithm = Algorithm::FA;
    std::string objective;
    std::size_t runs = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    double mean_evaluations = 0.0;
    double std_evaluations = 0.0;
};

struct TrialResult {
    SummaryRow summary;
    std::vector<RunRecord> records;
};

// Caps used when TrialPlan.evaluation_cap is 0: generous per-pair budgets
// for the ten cataloged objectives, 500000 otherwise.
std::uint64_t default_evaluation_cap(Algorithm algorithm, const std::string& objective);

// Throws std::invalid_argument when the objective has no known optimum
// (success is undefined there).
bool is_success(const RunRecord& record, const Objective& objective);

SummaryRow summarize(Algorithm algorithm, const std::string& objective,
                     const std::vector<RunRecord>& records);

// Runs the plan's trials (in parallel unless parallel=false), each with an
// independent RandomSource; records come back ordered by seed index, so
// the result is identical no matter how many threads ran.
TrialResult run_trials(const TrialPlan& plan, bool parallel = true);

}  // namespace ffopt
