#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffopt/objective.hpp"
#include "ffopt/search_space.hpp"
#include "ffopt/stopping.hpp"

namespace ffopt {

void SearchSpace::validate() const {
    if (dim == 0) throw std::invalid_argument("search space: dim must be >= 1");
    if (lower.size() != dim || upper.size() != dim)
        throw std::invalid_argument("search space: bounds length != dim");
    for (std::size_t k = 0; k < dim; ++k)
        if (!(lower[k] < upper[k]))
            throw std::invalid_argument("search space: lower[k] must be < upper[k]");
}

SearchSpace make_space(std::vector<double> lower, std::vector<double> upper) {
    SearchSpace s{lower.size(), std::move(lower), std::move(upper)};
    s.validate();
    return s;
}

SearchSpace uniform_space(std::size_t dim, double lo, double hi) {
    return make_space(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

std::vector<double> uniform_point(const SearchSpace& space, RandomSource& rng) {
    std::vector<double> p(space.dim);
    for (std::size_t k = 0; k < space.dim; ++k)
        p[k] = space.lower[k] + rng.next_double() * space.width(k);
    return p;
}

std::vector<double> clamp(std::span<const double> point, const SearchSpace& space) {
    if (point.size() != space.dim)
        throw std::invalid_argument("clamp: point length != space dim");
    std::vector<double> out(point.begin(), point.end());
    clamp_in_place(out, space);
    return out;
}

void clamp_in_place(std::vector<double>& point, const SearchSpace& space) {
    if (point.size() != space.dim)
        throw std::invalid_argument("clamp: point length != space dim");
    for (std::size_t k = 0; k < space.dim; ++k)
        point[k] = std::clamp(point[k], space.lower[k], space.upper[k]);
}

bool contains(const SearchSpace& space, std::span<const double> point) {
    if (point.size() != space.dim) return false;
    for (std::size_t k = 0; k < space.dim; ++k)
        if (point[k] < space.lower[k] || point[k] > space.upper[k]) return false;
    return true;
}

double RandomSource::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 nudged away from 0 so log stays finite
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::FA: return "fa";
        case Algorithm::PSO: return "pso";
        case Algorithm::GA: return "ga";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "fa") return Algorithm::FA;
    if (name == "pso") return Algorithm::PSO;
    if (name == "ga") return Algorithm::GA;
    throw std::invalid_argument("unknown algorithm '" + name + "' (valid: fa, pso, ga)");
}

bool within_success_tolerance(const Objective& objective, double value) {
    if (!objective.known_best_value) return false;
    return std::fabs(value - *objective.known_best_value) <= objective.success_tolerance;
}

double Evaluator::operator()(std::span<const double> point) {
    double value = objective_->eval(point);
    if (!std::isfinite(value)) value = std::numeric_limits<double>::infinity();
    ++count_;
    if (value < best_value_) {
        best_value_ = value;
        best_point_.assign(point.begin(), point.end());
    }
    return value;
}

bool window_stalled(const std::vector<TraceEntry>& trace, const StopRule& rule) {
    if (rule.window == 0) return false;
    if (trace.size() < rule.window) return false;
    const double then = trace[trace.size() - rule.window].best;
    const double now = trace.back().best;
    return then - now < rule.tolerance;
}

}  // namespace ffopt
