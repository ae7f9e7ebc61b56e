#pragma once

#include <map>

#include "convoy/simplify.hpp"

namespace convoy {

// One lambda-length slice of the time domain. Consecutive partitions share
// their boundary tick; a segment belongs to every partition its interval
// intersects, so no segment pair is ever missed across a boundary.
struct Partition {
    std::size_t index = 0;
    Tick t_lo = 0;
    Tick t_hi = 0;
    // Object id -> that object's segments overlapping this partition,
    // ordered by time (one polyline per object).
    std::map<std::string, std::vector<Segment>> polylines;
};

std::vector<Partition> partition_domain(const std::vector<SimplifiedTrajectory>& simplified,
                                        Tick lambda);

}  // namespace convoy
