#include "ffopt/firefly.hpp"

#include <cmath>
#include <stdexcept>

namespace ffopt {

namespace {

double noise_draw(const FaConfig& cfg, RandomSource& rng) {
    if (cfg.noise == FaConfig::Noise::normal) return rng.next_normal();
    return rng.next_double() - 0.5;
}

double noise_weight(const FaConfig& cfg, const SearchSpace& space, std::size_t k,
                    double alpha) {
    return cfg.scale_alpha_per_dim ? alpha * space.width(k) : alpha;
}

// shared by move/random_walk so both displace identically
void add_noise(std::vector<double>& x, const FaConfig& cfg, const SearchSpace& space,
               RandomSource& rng, double alpha) {
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] += noise_weight(cfg, space, k, alpha) * noise_draw(cfg, rng);
}

}  // namespace

void FaConfig::validate() const {
    if (n < 2) throw std::invalid_argument("fa: n must be >= 2");
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("fa: alpha must be in [0,1]");
    if (beta0 <= 0.0) throw std::invalid_argument("fa: beta0 must be > 0");
    if (gamma < 0.0) throw std::invalid_argument("fa: gamma must be >= 0");
    if (m_exponent < 1.0) throw std::invalid_argument("fa: m_exponent must be >= 1");
    if (alpha_decay <= 0.0 || alpha_decay > 1.0)
        throw std::invalid_argument("fa: alpha_decay must be in (0,1]");
}

double distance(std::span<const double> xi, std::span<const double> xj) {
    if (xi.size() != xj.size())
        throw std::invalid_argument("distance: length mismatch");
    double sq = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        const double d = xi[k] - xj[k];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double attractiveness(double r, const FaConfig& cfg) {
    if (cfg.attractiveness_form == FaConfig::Attractiveness::rational)
        return cfg.beta0 / (1.0 + cfg.gamma * r * r);
    const double rm = cfg.m_exponent == 2.0 ? r * r : std::pow(r, cfg.m_exponent);
    return cfg.beta0 * std::exp(-cfg.gamma * rm);
}

std::vector<double> move(std::span<const double> xi, std::span<const double> xj,
                         const FaConfig& cfg, const SearchSpace& space,
                         RandomSource& rng) {
    const double beta = attractiveness(distance(xi, xj), cfg);
    std::vector<double> out(xi.begin(), xi.end());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += beta * (xj[k] - xi[k]);
    add_noise(out, cfg, space, rng, cfg.alpha);
    clamp_in_place(out, space);
    return out;
}

std::vector<double> random_walk(std::span<const double> xi, const FaConfig& cfg,
                                const SearchSpace& space, RandomSource& rng) {
    std::vector<double> out(xi.begin(), xi.end());
    add_noise(out, cfg, space, rng, cfg.alpha);
    clamp_in_place(out, space);
    return out;
}

void fa_step(FireflyState& state, Evaluator& ev, const FaConfig& cfg,
             RandomSource& rng) {
    const SearchSpace& space = ev.objective().space;
    const std::size_t n = state.positions.size();

    for (std::size_t i = 0; i < n && !ev.exhausted(); ++i) {
        for (std::size_t j = 0; j <= i && !ev.exhausted(); ++j) {
            if (state.intensities[j] > state.intensities[i]) {
                state.positions[i] =
                    move(state.positions[i], state.positions[j], cfg, space, rng);
                state.intensities[i] = -ev(state.positions[i]);
            }
        }
    }

    if (!ev.exhausted()) {
        std::size_t brightest = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (state.intensities[i] > state.intensities[brightest]) brightest = i;
        state.positions[brightest] =
            random_walk(state.positions[brightest], cfg, space, rng);
        state.intensities[brightest] = -ev(state.positions[brightest]);
    }

    state.best_value = ev.best_value();
    state.best_point = ev.best_point();
}

RunRecord fa_run(const Objective& objective, const FaConfig& cfg, RandomSource& rng,
                 const StopRule& stop, const GenerationObserver& observer) {
    cfg.validate();
    objective.space.validate();

    Evaluator ev(objective, cfg.max_evaluations);
    FireflyState state;
    state.positions.reserve(cfg.n);
    state.intensities.reserve(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        state.positions.push_back(uniform_point(objective.space, rng));
        state.intensities.push_back(-ev(state.positions.back()));
    }
    state.best_value = ev.best_value();
    state.best_point = ev.best_point();

    RunRecord rec;
    rec.algorithm = Algorithm::FA;
    rec.objective_name = objective.name;
    rec.seed = rng.seed();
    rec.trace.push_back({ev.count(), ev.best_value()});
    if (observer) observer(0, state);

    FaConfig stepped = cfg;
    for (std::size_t gen = 1; gen <= cfg.max_generations; ++gen) {
        if (ev.exhausted()) break;
        if (window_stalled(rec.trace, stop)) break;
        fa_step(state, ev, stepped, rng);
        rec.trace.push_back({ev.count(), ev.best_value()});
        if (observer) observer(gen, state);
        stepped.alpha *= cfg.alpha_decay;
    }

    rec.evaluations_used = ev.count();
    rec.best_value = ev.best_value();
    rec.best_point = ev.best_point();
    rec.success = within_success_tolerance(objective, rec.best_value);
    return rec;
}

}  // namespace ffopt
