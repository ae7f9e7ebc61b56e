#include "convoy/autoparam.hpp"

#include <algorithm>
#include <cmath>

namespace convoy {

namespace {

// Split-to-exhaustion recursion: record the farthest deviation of each
// division step, splitting even when that deviation is zero, so every
// interior point contributes one value.
void trace_rec(const Trajectory& o, Simplifier s, std::size_t i, std::size_t j,
               std::vector<double>& out) {
    if (j - i < 2) return;
    TimedSegment chord{{o.points[i].x, o.points[i].y},
                       {o.points[j].x, o.points[j].y},
                       double(o.points[i].t),
                       double(o.points[j].t)};
    double max_dev = -1.0;
    std::size_t max_idx = i + 1;
    double mid = (double(i) + double(j)) / 2.0;
    for (std::size_t u = i + 1; u < j; ++u) {
        double d = deviation({o.points[u].x, o.points[u].y}, o.points[u].t, chord, s);
        // Ties break toward the middle: any tied point is equally "farthest",
        // and a balanced split keeps the recursion O(n log n) on runs where
        // every deviation is identical (e.g. a long stationary stretch).
        if (d > max_dev ||
            (d == max_dev && std::abs(double(u) - mid) < std::abs(double(max_idx) - mid))) {
            max_dev = d;
            max_idx = u;
        }
    }
    out.push_back(max_dev);
    trace_rec(o, s, i, max_idx, out);
    trace_rec(o, s, max_idx, j, out);
}

}  // namespace

std::vector<double> tolerance_trace(const Trajectory& o, Simplifier s) {
    std::vector<double> out;
    if (o.points.size() >= 3) trace_rec(o, s, 0, o.points.size() - 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

DeltaChoice compute_delta(const std::vector<Trajectory>& O, double e,
                          double sample_fraction) {
    std::vector<const Trajectory*> sorted;
    for (const auto& o : O) sorted.push_back(&o);
    std::sort(sorted.begin(), sorted.end(),
              [](const Trajectory* a, const Trajectory* b) { return a->id < b->id; });
    std::size_t take = std::size_t(std::ceil(sample_fraction * double(sorted.size())));
    take = std::clamp<std::size_t>(take, 1, sorted.size());

    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < take; ++i) {
        auto trace = tolerance_trace(*sorted[i], Simplifier::DP);
        std::erase_if(trace, [e](double v) { return v >= e; });
        if (trace.size() < 2) continue;
        double best_gap = -1.0;
        double pick = 0.0;
        for (std::size_t j = 0; j + 1 < trace.size(); ++j) {
            double gap = trace[j + 1] - trace[j];
            if (gap > best_gap) {
                best_gap = gap;
                pick = trace[j];  // the smaller of the adjacent pair
            }
        }
        sum += pick;
        ++used;
    }
    if (used == 0) return {e / 2.0, true};
    return {sum / double(used), false};
}

Tick compute_lambda(const std::vector<Trajectory>& O,
                    const std::vector<SimplifiedTrajectory>& simplified, Tick T) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& s : simplified) {
        const Trajectory* orig = nullptr;
        for (const auto& o : O)
            if (o.id == s.owner) {
                orig = &o;
                break;
            }
        if (!orig || orig->points.empty()) continue;
        double tau = double(orig->t_last() - orig->t_first() + 1);
        double ratio = double(s.vertex_count()) / double(orig->size());
        double lam = tau * (ratio * (1.0 - tau / double(T)) + 2.0 / double(T));
        sum += lam;
        ++n;
    }
    if (n == 0) return 2;
    Tick lam = Tick(std::llround(sum / double(n)));
    return std::clamp<Tick>(lam, 2, std::max<Tick>(2, T));
}

}  // namespace convoy
