#include "convoy/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace convoy {

std::vector<Partition> partition_domain(const std::vector<SimplifiedTrajectory>& simplified,
                                        Tick lambda) {
    if (lambda < 2) throw std::invalid_argument("partition_domain: lambda must be >= 2");
    std::vector<Partition> out;
    if (simplified.empty()) return out;
    Tick lo = simplified.front().t_first();
    Tick hi = simplified.front().t_last();
    for (const auto& s : simplified) {
        lo = std::min(lo, s.t_first());
        hi = std::max(hi, s.t_last());
    }
    // Each partition spans lambda ticks; adjacent partitions share their
    // boundary tick, so partition z covers [lo + z(lambda-1), .. + lambda-1].
    Tick step = lambda - 1;
    for (Tick start = lo; start < hi || out.empty(); start += step) {
        Partition p;
        p.index = out.size();
        p.t_lo = start;
        p.t_hi = std::min(start + step, hi);
        out.push_back(std::move(p));
        if (out.back().t_hi >= hi) break;
    }
    for (const auto& s : simplified) {
        for (const auto& seg : s.segments) {
            for (auto& p : out) {
                if (seg.geom.t_start <= double(p.t_hi) && seg.geom.t_end >= double(p.t_lo))
                    p.polylines[s.owner].push_back(seg);
            }
        }
    }
    return out;
}

}  // namespace convoy
