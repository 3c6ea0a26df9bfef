#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffopt/objective.hpp"
#include "ffopt/stopping.hpp"

namespace ffopt {

// Standard particle swarm. Velocity update:
//   v' = theta*v + alpha*eps1 (gbest - x) + beta*eps2 (pbest - x)
// with eps1/eps2 fresh uniform [0,1) per coordinate. theta absent means
// no inertia correction (factor 1). v_max_scale, when present, caps each
// velocity component to +/- v_max_scale * (upper_k - lower_k).
struct PsoConfig {
    std::size_t n = 40;
    double alpha = 2.0;  // pull toward the global best
    double beta = 2.0;   // pull toward the particle's own best
    std::optional<double> theta;
    std::optional<double> v_max_scale = 0.5;
    std::size_t max_generations = 1000;
    std::uint64_t max_evaluations = 500000;

    void validate() const;  // throws std::invalid_argument
};

struct PsoState {
    std::vector<std::vector<double>> positions;
    std::vector<std::vector<double>> velocities;
    std::vector<std::vector<double>> personal_best_points;
    std::vector<double> personal_best_values;
    std::vector<double> global_best_point;
    double global_best_value = 0.0;
};

// Pure form of the velocity rule with the random vectors supplied by the
// caller; the rng overload draws eps1 then eps2, each coordinate-ordered.
std::vector<double> pso_velocity(std::span<const double> v, std::span<const double> x,
                                 std::span<const double> pbest,
                                 std::span<const double> gbest, const PsoConfig& cfg,
                                 const SearchSpace& space,
                                 std::span<const double> eps1,
                                 std::span<const double> eps2);
std::vector<double> pso_velocity_update(const PsoState& state, std::size_t i,
                                        const PsoConfig& cfg, const SearchSpace& space,
                                        RandomSource& rng);

// Synchronous generation: every particle's velocity is updated against the
// same incumbent global best, positions move and clamp, then everyone is
// re-evaluated and the bests refresh (ties keep the earlier holder).
void pso_step(PsoState& state, Evaluator& ev, const PsoConfig& cfg, RandomSource& rng);

RunRecord pso_run(const Objective& objective, const PsoConfig& cfg, RandomSource& rng,
                  const StopRule& stop = {});

// Real-coded GA: binary tournament selection, whole-arithmetic crossover
// with probability p_c (one shared weight per pair), per-gene Gaussian
// mutation with probability p_m and sigma = mutation_sigma_frac * range.
// No elitism by default; when enabled, the previous best individual
// replaces the worst offspring.
struct GaConfig {
    std::size_t n = 40;
    double p_m = 0.05;
    double p_c = 0.95;
    bool elitism = false;
    double mutation_sigma_frac = 0.1;
    std::size_t max_generations = 1000;
    std::uint64_t max_evaluations = 500000;

    void validate() const;  // throws std::invalid_argument
};

struct GaPopulation {
    std::vector<std::vector<double>> individuals;
    std::vector<double> fitness;
};

void ga_step(GaPopulation& pop, Evaluator& ev, const GaConfig& cfg, RandomSource& rng);

RunRecord ga_run(const Objective& objective, const GaConfig& cfg, RandomSource& rng,
                 const StopRule& stop = {});

}  // namespace ffopt
