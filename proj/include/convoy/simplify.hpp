#pragma once

#include <string>
#include <vector>

#include "convoy/trajectory.hpp"

namespace convoy {

enum class Simplifier { DP, DPPlus, DPStar };

Simplifier parse_simplifier(const std::string& name);  // "dp" | "dp+" | "dp*"
std::string simplifier_name(Simplifier s);

// One chord of a simplified trajectory. actual_tolerance is the maximum
// deviation of the covered original samples from this chord, under the
// metric of the simplifier that produced it (perpendicular for DP/DP+,
// time-ratio for DP*).
struct Segment {
    TimedSegment geom;
    std::string owner;
    double actual_tolerance = 0.0;
    std::size_t index = 0;
};

struct SimplifiedTrajectory {
    std::string owner;
    std::vector<Segment> segments;

    Tick t_first() const { return static_cast<Tick>(segments.front().geom.t_start); }
    Tick t_last() const { return static_cast<Tick>(segments.back().geom.t_end); }
    std::size_t vertex_count() const {
        return segments.size() == 1 && segments[0].geom.t_start == segments[0].geom.t_end
                   ? 1
                   : segments.size() + 1;
    }
    double actual_tolerance() const {
        double m = 0.0;
        for (const auto& s : segments) m = std::max(m, s.actual_tolerance);
        return m;
    }
};

SimplifiedTrajectory dp(const Trajectory& o, double delta);
SimplifiedTrajectory dp_plus(const Trajectory& o, double delta);
SimplifiedTrajectory dp_star(const Trajectory& o, double delta);

SimplifiedTrajectory simplify(const Trajectory& o, double delta, Simplifier s);

// (sum |o| - sum |o'|) / sum |o|
double reduction_ratio(const std::vector<Trajectory>& orig,
                       const std::vector<SimplifiedTrajectory>& simp);

// Deviation of original sample p (at tick t) from chord l, under the metric
// the given simplifier uses. Exposed for the post-hoc bound checks; inline
// because it is the inner loop of every simplification pass.
inline double deviation(Point2 p, Tick t, const TimedSegment& chord, Simplifier s) {
    if (s == Simplifier::DPStar) return dist_pp(p, location_at(chord, double(t)));
    return dist_ps(p, chord);
}

}  // namespace convoy
