#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ffopt/random.hpp"

namespace ffopt {

// Axis-aligned box the algorithms search inside. width(k) is the scaling
// factor S_k used to size per-dimension noise.
struct SearchSpace {
    std::size_t dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;

    double width(std::size_t k) const { return upper[k] - lower[k]; }

    // throws std::invalid_argument when dim/bounds are inconsistent
    void validate() const;
};

SearchSpace make_space(std::vector<double> lower, std::vector<double> upper);
SearchSpace uniform_space(std::size_t dim, double lo, double hi);

// One coordinate drawn uniformly in [lower[k], upper[k]) per dimension,
// in dimension order.
std::vector<double> uniform_point(const SearchSpace& space, RandomSource& rng);

// Coordinate-wise projection into the box. Throws on length mismatch.
std::vector<double> clamp(std::span<const double> point, const SearchSpace& space);
void clamp_in_place(std::vector<double>& point, const SearchSpace& space);

bool contains(const SearchSpace& space, std::span<const double> point);

}  // namespace ffopt
