#include "convoy/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace convoy {

namespace {

double unit(std::mt19937_64& g) {  // [0, 1)
    return double(g() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * unit(g);
}

std::string pad_id(std::size_t i, std::size_t width) {
    std::string n = std::to_string(i);
    return "o" + std::string(width > n.size() ? width - n.size() : 0, '0') + n;
}

}  // namespace

SyntheticScene generate(const SyntheticSpec& spec, std::uint64_t seed) {
    std::size_t planted_total = 0;
    for (const auto& c : spec.convoys) {
        if (c.member_count < 2 || c.start > c.end || c.end >= spec.ticks)
            throw std::invalid_argument("generate: infeasible planted convoy");
        planted_total += c.member_count;
    }
    if (planted_total > spec.n_objects)
        throw std::invalid_argument("generate: planted members exceed object count");

    const double e = spec.e;
    const Tick T = spec.ticks;
    std::size_t width = std::to_string(spec.n_objects).size();
    std::mt19937_64 root(seed);

    SyntheticScene scene;
    std::size_t next_id = 0;

    // Planted convoys: each gets a spatially isolated band. Members orbit a
    // shared random-walking anchor within e/4 during the interval and
    // disperse radially outside it, so the interval boundaries are sharp.
    for (std::size_t ci = 0; ci < spec.convoys.size(); ++ci) {
        const auto& pc = spec.convoys[ci];
        std::mt19937_64 g(root());
        double band_y = 10000.0 * double(ci + 1);
        std::vector<Point2> anchor(T);
        anchor[0] = {uniform(g, -10.0, 10.0), band_y};
        for (Tick t = 1; t < T; ++t)
            anchor[t] = {anchor[t - 1].x + uniform(g, -e / 16, e / 16),
                         anchor[t - 1].y + uniform(g, -e / 16, e / 16)};

        std::size_t n = pc.member_count;
        double speed = 3.0 * e * std::max(1.0, double(n) / 12.0);
        Convoy truth;
        truth.start = pc.start;
        truth.end = pc.end;
        for (std::size_t mi = 0; mi < n; ++mi) {
            std::mt19937_64 gm(root());
            std::string id = pad_id(next_id++, width);
            truth.members.insert(id);
            double angle = 2.0 * M_PI * double(mi) / double(n);
            Point2 dir{std::cos(angle), std::sin(angle)};
            double r = uniform(gm, 0.0, e / 8.0);
            double phi = uniform(gm, 0.0, 2.0 * M_PI);
            Point2 offset{r * std::cos(phi), r * std::sin(phi)};

            Tick lt_lo = 0, lt_hi = T - 1;
            if (spec.irregular_lifetimes) {
                lt_lo = Tick(uniform(gm, 0.0, double(pc.start) + 0.999));
                lt_hi = Tick(uniform(gm, double(pc.end), double(T - 1) + 0.999));
                lt_lo = std::clamp<Tick>(lt_lo, 0, pc.start);
                lt_hi = std::clamp<Tick>(lt_hi, pc.end, T - 1);
            }
            Trajectory traj;
            traj.id = id;
            for (Tick t = lt_lo; t <= lt_hi; ++t) {
                Point2 p;
                // outside the interval members head to (or come from) a
                // distant parking spot; bounding the travel keeps the
                // trajectory from sweeping the whole band
                const Tick kTravel = 8;
                if (t < pc.start) {
                    double d = speed * double(std::min(pc.start - t, kTravel));
                    p = anchor[pc.start] + d * dir;
                } else if (t > pc.end) {
                    double d = speed * double(std::min(t - pc.end, kTravel));
                    p = anchor[pc.end] + d * dir;
                } else {
                    double jx = uniform(gm, -pc.jitter * e / 16, pc.jitter * e / 16);
                    double jy = uniform(gm, -pc.jitter * e / 16, pc.jitter * e / 16);
                    p = anchor[t] + offset + Point2{jx, jy};
                }
                traj.points.push_back({p.x, p.y, t});
            }
            scene.trajectories.push_back(std::move(traj));
        }
        scene.planted.push_back(std::move(truth));
    }

    // Noise objects: well separated random walkers near y = 0.
    std::size_t noise_count = spec.n_objects - planted_total;
    for (std::size_t ni = 0; ni < noise_count; ++ni) {
        std::mt19937_64 g(root());
        std::string id = pad_id(next_id++, width);
        double cx = 1000.0 * double(ni + 1);
        Tick lt_lo = 0, lt_hi = T - 1;
        if (spec.irregular_lifetimes && T >= 6) {
            lt_lo = Tick(uniform(g, 0.0, double(T) / 3.0));
            lt_hi = Tick(uniform(g, 2.0 * double(T) / 3.0, double(T - 1) + 0.999));
            lt_hi = std::clamp<Tick>(lt_hi, lt_lo + 2, T - 1);
        }
        Trajectory traj;
        traj.id = id;
        Point2 p{cx + uniform(g, -5.0, 5.0), uniform(g, -5.0, 5.0)};
        for (Tick t = lt_lo; t <= lt_hi; ++t) {
            traj.points.push_back({p.x, p.y, t});
            p = p + Point2{uniform(g, -e / 4, e / 4), uniform(g, -e / 4, e / 4)};
        }
        scene.trajectories.push_back(std::move(traj));
    }

    // Missing samples: drop interior points, never an endpoint.
    if (spec.missing_prob > 0.0) {
        std::mt19937_64 g(root());
        for (auto& traj : scene.trajectories) {
            if (traj.points.size() < 3) continue;
            std::vector<TimedPoint> kept;
            kept.push_back(traj.points.front());
            for (std::size_t i = 1; i + 1 < traj.points.size(); ++i)
                if (unit(g) >= spec.missing_prob) kept.push_back(traj.points[i]);
            kept.push_back(traj.points.back());
            traj.points = std::move(kept);
        }
    }

    std::sort(scene.trajectories.begin(), scene.trajectories.end(),
              [](const Trajectory& a, const Trajectory& b) { return a.id < b.id; });
    return scene;
}

}  // namespace convoy
