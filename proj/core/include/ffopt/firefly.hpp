#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ffopt/objective.hpp"
#include "ffopt/stopping.hpp"

namespace ffopt {

// Firefly algorithm parameters. Attractiveness between two agents at
// distance r is beta0*exp(-gamma*r^m_exponent) (gaussian form) or
// beta0/(1+gamma*r^2) (rational form, ignores m_exponent). gamma shapes
// the visibility range: small gamma -> long-range pull, huge gamma ->
// agents barely see each other and the walk dominates. gamma=0 is
// accepted as the degenerate constant-attractiveness edge case.
struct FaConfig {
    std::size_t n = 40;
    double alpha = 0.2;     // randomization weight, [0,1]
    double beta0 = 1.0;     // attractiveness at r=0
    double gamma = 1.0;     // absorption coefficient, typically 0.01-100
    double m_exponent = 2.0;

    enum class Attractiveness { gaussian, rational };
    enum class Noise { uniform_centered, normal };
    Attractiveness attractiveness_form = Attractiveness::gaussian;
    Noise noise = Noise::uniform_centered;

    // when set, the noise weight for dimension k is alpha * (upper_k - lower_k)
    bool scale_alpha_per_dim = true;

    // optional per-generation multiplicative decay of alpha; 1.0 = constant alpha
    double alpha_decay = 1.0;

    std::size_t max_generations = 1000;
    std::uint64_t max_evaluations = 500000;

    void validate() const;  // throws std::invalid_argument
};

struct FireflyState {
    std::vector<std::vector<double>> positions;
    std::vector<double> intensities;  // brightness = -f(position)
    std::vector<double> best_point;
    double best_value = 0.0;
};

double distance(std::span<const double> xi, std::span<const double> xj);
double attractiveness(double r, const FaConfig& cfg);

// One attraction move of xi toward the brighter xj: full movement formula
// plus per-coordinate noise, clamped to the box. The noise draw happens
// for every coordinate even when alpha is 0, so draw streams do not
// depend on parameter values.
std::vector<double> move(std::span<const double> xi, std::span<const double> xj,
                         const FaConfig& cfg, const SearchSpace& space,
                         RandomSource& rng);

// The brightest firefly's behavior: noise-only displacement, clamped.
std::vector<double> random_walk(std::span<const double> xi, const FaConfig& cfg,
                                const SearchSpace& space, RandomSource& rng);

// One generation, sequential in-place sweep: for each i, for each j <= i,
// a brighter j pulls i via move() and i is re-evaluated immediately (the
// updated position and brightness take part in the rest of the sweep).
// Afterwards the currently brightest agent random-walks, and the
// incumbent best is refreshed from the evaluator. Stops early only when
// the evaluation budget runs out. cfg.alpha is used as passed; fa_run
// owns the decay schedule.
void fa_step(FireflyState& state, Evaluator& ev, const FaConfig& cfg,
             RandomSource& rng);

using GenerationObserver =
    std::function<void(std::size_t generation, const FireflyState& state)>;

// Full run: uniform initialization, then fa_step generations until the
// stall rule fires, max_generations are done, or the evaluation budget is
// exhausted. The observer (optional) sees the state after initialization
// (generation 0) and after every step.
RunRecord fa_run(const Objective& objective, const FaConfig& cfg, RandomSource& rng,
                 const StopRule& stop = {}, const GenerationObserver& observer = {});

}  // namespace ffopt
