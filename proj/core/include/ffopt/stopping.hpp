#pragma once

#include <cstddef>
#include <vector>

#include "ffopt/objective.hpp"

namespace ffopt {

// Termination on stalled progress: stop once the best value has improved
// by less than `tolerance` over the last `window` recorded generations
// (i.e. between trace[L-window] and trace[L-1]). window = 0 disables the
// rule, for fixed-generation experiments.
struct StopRule {
    double tolerance = 1e-5;
    std::size_t window = 10;
};

bool window_stalled(const std::vector<TraceEntry>& trace, const StopRule& rule);

}  // namespace ffopt
