#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convoy/geometry.hpp"

namespace convoy {

using Tick = std::int64_t;

struct TimedPoint {
    double x = 0.0;
    double y = 0.0;
    Tick t = 0;
};

// Time-ordered samples of one object. Timestamps are strictly increasing
// integer ticks; gaps are allowed and preserved at load time.
struct Trajectory {
    std::string id;
    std::vector<TimedPoint> points;

    Tick t_first() const { return points.front().t; }
    Tick t_last() const { return points.back().t; }
    bool covers(Tick t) const { return t >= t_first() && t <= t_last(); }
    std::size_t size() const { return points.size(); }
};

struct CsvError : std::runtime_error {
    std::size_t line;
    CsvError(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Parses `obj,t,x,y` rows (optional header), groups them by object id and
// sorts by tick. Duplicate (id, t) pairs and non-finite coordinates are
// rejected with the offending line number.
std::vector<Trajectory> load_trajectories(std::istream& in);

void write_trajectories(std::ostream& out, const std::vector<Trajectory>& trajs);

// Position of o at tick t: the stored sample if present, a linearly
// interpolated virtual point if t falls in a gap inside o's lifetime,
// and nullopt outside the lifetime. No extrapolation.
std::optional<Point2> sample_at(const Trajectory& o, Tick t);

// [min tick, max tick] over all trajectories.
std::pair<Tick, Tick> time_domain(const std::vector<Trajectory>& trajs);

}  // namespace convoy
