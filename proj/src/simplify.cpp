#include "convoy/simplify.hpp"

#include <cmath>
#include <stdexcept>

namespace convoy {

Simplifier parse_simplifier(const std::string& name) {
    if (name == "dp") return Simplifier::DP;
    if (name == "dp+") return Simplifier::DPPlus;
    if (name == "dp*") return Simplifier::DPStar;
    throw std::invalid_argument("unknown simplifier '" + name + "'");
}

std::string simplifier_name(Simplifier s) {
    switch (s) {
        case Simplifier::DP: return "dp";
        case Simplifier::DPPlus: return "dp+";
        default: return "dp*";
    }
}

namespace {

TimedSegment chord_of(const Trajectory& o, std::size_t i, std::size_t j) {
    const TimedPoint& a = o.points[i];
    const TimedPoint& b = o.points[j];
    return {{a.x, a.y}, {b.x, b.y}, double(a.t), double(b.t)};
}

struct Builder {
    const Trajectory& o;
    double delta;
    Simplifier kind;
    std::vector<Segment> segments;

    void emit(std::size_t i, std::size_t j, double tol) {
        Segment s;
        s.geom = chord_of(o, i, j);
        s.owner = o.id;
        s.actual_tolerance = tol;
        s.index = segments.size();
        segments.push_back(s);
    }

    // Recursion on index ranges of the original point sequence. When the
    // chord is accepted, the max deviation already computed for its interior
    // points becomes the segment's actual tolerance; no second pass.
    void run(std::size_t i, std::size_t j) {
        if (j - i < 2) {
            emit(i, j, 0.0);
            return;
        }
        TimedSegment chord = chord_of(o, i, j);
        double max_dev = -1.0;
        std::size_t max_idx = 0;
        double mid = (double(i) + double(j)) / 2.0;
        double best_mid_gap = -1.0;
        std::size_t mid_idx = 0;
        for (std::size_t u = i + 1; u < j; ++u) {
            const TimedPoint& p = o.points[u];
            double d = deviation({p.x, p.y}, p.t, chord, kind);
            if (d > max_dev) {
                max_dev = d;
                max_idx = u;  // ties break toward the lower index
            }
            if (d > delta) {
                double gap = std::abs(double(u) - mid);
                if (best_mid_gap < 0.0 || gap < best_mid_gap) {
                    best_mid_gap = gap;
                    mid_idx = u;
                }
            }
        }
        if (max_dev <= delta) {
            emit(i, j, max_dev);
            return;
        }
        std::size_t split = (kind == Simplifier::DPPlus) ? mid_idx : max_idx;
        run(i, split);
        run(split, j);
    }
};

}  // namespace

static SimplifiedTrajectory simplify_impl(const Trajectory& o, double delta, Simplifier kind) {
    if (o.points.empty()) throw std::invalid_argument("simplify: empty trajectory");
    SimplifiedTrajectory out;
    out.owner = o.id;
    if (o.points.size() == 1) {
        const TimedPoint& p = o.points[0];
        out.segments.push_back(
            {{{p.x, p.y}, {p.x, p.y}, double(p.t), double(p.t)}, o.id, 0.0, 0});
        return out;
    }
    Builder b{o, delta, kind, {}};
    b.run(0, o.points.size() - 1);
    out.segments = std::move(b.segments);
    return out;
}

SimplifiedTrajectory dp(const Trajectory& o, double delta) {
    return simplify_impl(o, delta, Simplifier::DP);
}
SimplifiedTrajectory dp_plus(const Trajectory& o, double delta) {
    return simplify_impl(o, delta, Simplifier::DPPlus);
}
SimplifiedTrajectory dp_star(const Trajectory& o, double delta) {
    return simplify_impl(o, delta, Simplifier::DPStar);
}

SimplifiedTrajectory simplify(const Trajectory& o, double delta, Simplifier s) {
    return simplify_impl(o, delta, s);
}

double reduction_ratio(const std::vector<Trajectory>& orig,
                       const std::vector<SimplifiedTrajectory>& simp) {
    std::size_t before = 0, after = 0;
    for (const auto& o : orig) before += o.size();
    for (const auto& s : simp) after += s.vertex_count();
    if (before == 0) return 0.0;
    return double(before - after) / double(before);
}

}  // namespace convoy
