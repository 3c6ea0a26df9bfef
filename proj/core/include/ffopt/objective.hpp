#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffopt/search_space.hpp"

namespace ffopt {

enum class Algorithm { FA, PSO, GA };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);  // throws on unknown

// A box-constrained minimization target. known_best_value/points are
// metadata for success checking; absent when no reliable optimum is known
// for the chosen dimension.
struct Objective {
    std::string name;
    SearchSpace space;
    std::function<double(std::span<const double>)> eval;
    std::optional<double> known_best_value;
    std::vector<std::vector<double>> known_best_points;
    double success_tolerance = 1e-3;
};

struct TraceEntry {
    std::uint64_t evaluations = 0;  // total objective calls so far
    double best = 0.0;              // best value seen so far
};

struct RunRecord {
    Algorithm algorithm = Algorithm::FA;
    std::string objective_name;
    std::uint64_t seed = 0;
    std::uint64_t evaluations_used = 0;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_point;
    bool success = false;
    std::vector<TraceEntry> trace;
};

// False when the objective has no known optimum; otherwise whether value
// lies within success_tolerance of it.
bool within_success_tolerance(const Objective& objective, double value);

// Counts every objective call, enforces the evaluation budget, tracks the
// best point/value seen, and maps non-finite results to +infinity so
// ranking stays total.
class Evaluator {
public:
    Evaluator(const Objective& objective, std::uint64_t max_evaluations)
        : objective_(&objective), budget_(max_evaluations) {}

    double operator()(std::span<const double> point);

    bool exhausted() const { return count_ >= budget_; }
    std::uint64_t count() const { return count_; }
    std::uint64_t budget() const { return budget_; }
    double best_value() const { return best_value_; }
    const std::vector<double>& best_point() const { return best_point_; }
    const Objective& objective() const { return *objective_; }

private:
    const Objective* objective_;
    std::uint64_t budget_;
    std::uint64_t count_ = 0;
    double best_value_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_point_;
};

}  // namespace ffopt
