#pragma once

#include "cyclebound/systems.hpp"

namespace cyclebound {

struct ProbeResult {
    double max_abs_w = 0;
    long steps = 0;
    bool diverged = false;
    std::vector<double> start; // after Newton refinement onto w = 0
};

/// RK4 along f (or -f when backward) from a point refined onto w = 0; max |w| is sampled every step.
/// Throws UsageError when the refinement does not reach |w| <= 1e-8 in 50 iterations.
ProbeResult probe_invariance(const OdeSystem &s, const Polynomial &w, std::vector<double> start, double horizon,
                             double step, bool backward = false);

} // namespace cyclebound
