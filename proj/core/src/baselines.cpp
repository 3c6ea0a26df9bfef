#include "ffopt/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ffopt {

void PsoConfig::validate() const {
    if (n < 2) throw std::invalid_argument("pso: n must be >= 2");
    if (alpha <= 0.0 || beta <= 0.0)
        throw std::invalid_argument("pso: alpha and beta must be > 0");
    if (theta && (*theta <= 0.0 || *theta > 1.0))
        throw std::invalid_argument("pso: theta must be in (0,1]");
    if (v_max_scale && *v_max_scale <= 0.0)
        throw std::invalid_argument("pso: v_max_scale must be > 0");
}

void GaConfig::validate() const {
    if (n < 2) throw std::invalid_argument("ga: n must be >= 2");
    if (p_m < 0.0 || p_m > 1.0) throw std::invalid_argument("ga: p_m must be in [0,1]");
    if (p_c < 0.0 || p_c > 1.0) throw std::invalid_argument("ga: p_c must be in [0,1]");
    if (mutation_sigma_frac < 0.0)
        throw std::invalid_argument("ga: mutation_sigma_frac must be >= 0");
}

std::vector<double> pso_velocity(std::span<const double> v, std::span<const double> x,
                                 std::span<const double> pbest,
                                 std::span<const double> gbest, const PsoConfig& cfg,
                                 const SearchSpace& space,
                                 std::span<const double> eps1,
                                 std::span<const double> eps2) {
    const double theta = cfg.theta.value_or(1.0);
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        double vk = theta * v[k] + cfg.alpha * eps1[k] * (gbest[k] - x[k]) +
                    cfg.beta * eps2[k] * (pbest[k] - x[k]);
        if (cfg.v_max_scale) {
            const double cap = *cfg.v_max_scale * space.width(k);
            vk = std::clamp(vk, -cap, cap);
        }
        out[k] = vk;
    }
    return out;
}

std::vector<double> pso_velocity_update(const PsoState& state, std::size_t i,
                                        const PsoConfig& cfg, const SearchSpace& space,
                                        RandomSource& rng) {
    const std::size_t d = space.dim;
    std::vector<double> eps1(d), eps2(d);
    for (std::size_t k = 0; k < d; ++k) eps1[k] = rng.next_double();
    for (std::size_t k = 0; k < d; ++k) eps2[k] = rng.next_double();
    return pso_velocity(state.velocities[i], state.positions[i],
                        state.personal_best_points[i], state.global_best_point, cfg,
                        space, eps1, eps2);
}

void pso_step(PsoState& state, Evaluator& ev, const PsoConfig& cfg, RandomSource& rng) {
    const SearchSpace& space = ev.objective().space;
    const std::size_t n = state.positions.size();

    for (std::size_t i = 0; i < n; ++i)
        state.velocities[i] = pso_velocity_update(state, i, cfg, space, rng);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < space.dim; ++k)
            state.positions[i][k] += state.velocities[i][k];
        clamp_in_place(state.positions[i], space);
    }

    for (std::size_t i = 0; i < n && !ev.exhausted(); ++i) {
        const double f = ev(state.positions[i]);
        if (f < state.personal_best_values[i]) {
            state.personal_best_values[i] = f;
            state.personal_best_points[i] = state.positions[i];
        }
    }

    std::size_t g = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (state.personal_best_values[i] < state.personal_best_values[g]) g = i;
    state.global_best_value = state.personal_best_values[g];
    state.global_best_point = state.personal_best_points[g];
}

RunRecord pso_run(const Objective& objective, const PsoConfig& cfg, RandomSource& rng,
                  const StopRule& stop) {
    cfg.validate();
    objective.space.validate();

    Evaluator ev(objective, cfg.max_evaluations);
    const std::size_t d = objective.space.dim;
    PsoState state;
    for (std::size_t i = 0; i < cfg.n; ++i) {
        state.positions.push_back(uniform_point(objective.space, rng));
        state.velocities.emplace_back(d, 0.0);
        state.personal_best_points.push_back(state.positions.back());
        state.personal_best_values.push_back(ev(state.positions.back()));
    }
    std::size_t g = 0;
    for (std::size_t i = 1; i < cfg.n; ++i)
        if (state.personal_best_values[i] < state.personal_best_values[g]) g = i;
    state.global_best_value = state.personal_best_values[g];
    state.global_best_point = state.personal_best_points[g];

    RunRecord rec;
    rec.algorithm = Algorithm::PSO;
    rec.objective_name = objective.name;
    rec.seed = rng.seed();
    rec.trace.push_back({ev.count(), ev.best_value()});

    for (std::size_t gen = 1; gen <= cfg.max_generations; ++gen) {
        if (ev.exhausted()) break;
        if (window_stalled(rec.trace, stop)) break;
        pso_step(state, ev, cfg, rng);
        rec.trace.push_back({ev.count(), ev.best_value()});
    }

    rec.evaluations_used = ev.count();
    rec.best_value = ev.best_value();
    rec.best_point = ev.best_point();
    rec.success = within_success_tolerance(objective, rec.best_value);
    return rec;
}

namespace {

std::size_t tournament_pick(const GaPopulation& pop, RandomSource& rng) {
    const std::size_t n = pop.individuals.size();
    const auto i = static_cast<std::size_t>(rng.next_double() * static_cast<double>(n));
    const auto j = static_cast<std::size_t>(rng.next_double() * static_cast<double>(n));
    return pop.fitness[i] <= pop.fitness[j] ? i : j;
}

}  // namespace

void ga_step(GaPopulation& pop, Evaluator& ev, const GaConfig& cfg, RandomSource& rng) {
    const SearchSpace& space = ev.objective().space;
    const std::size_t n = pop.individuals.size();
    const std::size_t d = space.dim;

    std::size_t best_parent = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (pop.fitness[i] < pop.fitness[best_parent]) best_parent = i;
    const std::vector<double> elite = pop.individuals[best_parent];
    const double elite_fitness = pop.fitness[best_parent];

    // selection + crossover
    std::vector<std::vector<double>> offspring;
    offspring.reserve(n);
    while (offspring.size() < n) {
        const std::vector<double>& a = pop.individuals[tournament_pick(pop, rng)];
        const std::vector<double>& b = pop.individuals[tournament_pick(pop, rng)];
        if (rng.next_double() < cfg.p_c) {
            const double w = rng.next_double();
            std::vector<double> c1(d), c2(d);
            for (std::size_t k = 0; k < d; ++k) {
                c1[k] = w * a[k] + (1.0 - w) * b[k];
                c2[k] = w * b[k] + (1.0 - w) * a[k];
            }
            offspring.push_back(std::move(c1));
            if (offspring.size() < n) offspring.push_back(std::move(c2));
        } else {
            offspring.push_back(a);
            if (offspring.size() < n) offspring.push_back(b);
        }
    }

    // per-gene mutation; the gate uniform is drawn for every gene, the
    // normal only when the gate fires
    for (auto& child : offspring) {
        for (std::size_t k = 0; k < d; ++k)
            if (rng.next_double() < cfg.p_m)
                child[k] += cfg.mutation_sigma_frac * space.width(k) * rng.next_normal();
        clamp_in_place(child, space);
    }

    pop.individuals = std::move(offspring);
    pop.fitness.assign(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n && !ev.exhausted(); ++i)
        pop.fitness[i] = ev(pop.individuals[i]);

    if (cfg.elitism) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (pop.fitness[i] > pop.fitness[worst]) worst = i;
        if (elite_fitness < pop.fitness[worst]) {
            pop.individuals[worst] = elite;
            pop.fitness[worst] = elite_fitness;
        }
    }
}

RunRecord ga_run(const Objective& objective, const GaConfig& cfg, RandomSource& rng,
                 const StopRule& stop) {
    cfg.validate();
    objective.space.validate();

    Evaluator ev(objective, cfg.max_evaluations);
    GaPopulation pop;
    for (std::size_t i = 0; i < cfg.n; ++i) {
        pop.individuals.push_back(uniform_point(objective.space, rng));
        pop.fitness.push_back(ev(pop.individuals.back()));
    }

    RunRecord rec;
    rec.algorithm = Algorithm::GA;
    rec.objective_name = objective.name;
    rec.seed = rng.seed();
    rec.trace.push_back({ev.count(), ev.best_value()});

    for (std::size_t gen = 1; gen <= cfg.max_generations; ++gen) {
        if (ev.exhausted()) break;
        if (window_stalled(rec.trace, stop)) break;
        ga_step(pop, ev, cfg, rng);
        rec.trace.push_back({ev.count(), ev.best_value()});
    }

    rec.evaluations_used = ev.count();
    rec.best_value = ev.best_value();
    rec.best_point = ev.best_point();
    rec.success = within_success_tolerance(objective, rec.best_value);
    return rec;
}

}  // namespace ffopt
