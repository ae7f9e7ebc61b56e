#pragma once

#include <vector>

#include "convoy/simplify.hpp"

namespace convoy {

// Ascending deviations recorded during a tolerance-zero split-to-exhaustion
// run of the simplifier on one trajectory; one value per interior point.
std::vector<double> tolerance_trace(const Trajectory& o, Simplifier s);

struct DeltaChoice {
    double delta = 0.0;
    bool fallback = false;  // no usable gap anywhere in the sample; e/2 policy
};

// Tolerance selection: over a deterministic sample of trajectories (first
// ceil(fraction*N) ids in sorted order), take each trace restricted to
// values < e, pick the lower value of the adjacent pair with the largest
// gap, and average the picks.
DeltaChoice compute_delta(const std::vector<Trajectory>& O, double e,
                          double sample_fraction = 0.10);

// Partition length from reduction ratio and trajectory density, averaged
// over objects, rounded and clamped to [2, T]. Durations count ticks
// inclusively.
Tick compute_lambda(const std::vector<Trajectory>& O,
                    const std::vector<SimplifiedTrajectory>& simplified, Tick T);

}  // namespace convoy
