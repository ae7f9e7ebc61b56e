#include <doctest.h>

#include <random>

#include "convoy/simplify.hpp"

using namespace convoy;

namespace {

Trajectory random_walk(std::mt19937_64& rng, std::size_t n, double step = 1.0) {
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
    };
    Trajectory o;
    o.id = "w";
    double x = uni(-5, 5), y = uni(-5, 5);
    for (std::size_t i = 0; i < n; ++i) {
        o.points.push_back({x, y, Tick(i)});
        x += uni(-step, step);
        y += uni(-step, step);
    }
    return o;
}

std::vector<Tick> kept_ticks(const SimplifiedTrajectory& s) {
    std::vector<Tick> out;
    out.push_back(Tick(s.segments.front().geom.t_start));
    for (const auto& seg : s.segments) out.push_back(Tick(seg.geom.t_end));
    return out;
}

// Post-hoc deviation scan: max deviation of the original samples covered by
// each segment, recomputed independently of the recursion.
double recomputed_tolerance(const Trajectory& o, const Segment& seg, Simplifier kind) {
    double worst = 0.0;
    for (const auto& p : o.points) {
        if (double(p.t) <= seg.geom.t_start || double(p.t) >= seg.geom.t_end) continue;
        worst = std::max(worst, deviation({p.x, p.y}, p.t, seg.geom, kind));
    }
    return worst;
}

const Trajectory kSevenPoint{"p", {{0, 0, 1},
                                   {1, 0.2, 2},
                                   {2, 0.3, 3},
                                   {3, 1.6, 4},
                                   {4, 0.9, 5},
                                   {5, 1.9, 6},
                                   {6, 0, 7}}};

}  // namespace

TEST_CASE("dp keeps everything at delta 0") {
    std::mt19937_64 rng(3);
    auto o = random_walk(rng, 40);
    auto s = dp(o, 0.0);
    CHECK(s.vertex_count() == o.size());
    for (const auto& seg : s.segments) CHECK(seg.actual_tolerance == 0.0);
}

TEST_CASE("dp collapses a near-straight polyline") {
    Trajectory o{"a", {{0, 0, 1}, {1, 0.1, 2}, {2, 0, 3}}};
    auto s = dp(o, 0.5);
    REQUIRE(s.segments.size() == 1);
    CHECK(s.segments[0].actual_tolerance == doctest::Approx(0.1));
    CHECK(s.segments[0].geom.start == Point2{0, 0});
    CHECK(s.segments[0].geom.end == Point2{2, 0});
}

TEST_CASE("dp splits the seven-point polyline at the largest deviation") {
    auto s = dp(kSevenPoint, 1.0);
    CHECK(kept_ticks(s) == std::vector<Tick>{1, 6, 7});  // split at p6
}

TEST_CASE("dp_plus splits at the middle-most offending point") {
    auto s = dp_plus(kSevenPoint, 1.0);
    CHECK(kept_ticks(s) == std::vector<Tick>{1, 4, 6, 7});  // p4 first, then p6
}

TEST_CASE("dp_plus equals dp when no point exceeds delta") {
    Trajectory o{"a", {{0, 0, 1}, {1, 0.1, 2}, {2, 0, 3}}};
    auto a = dp(o, 0.5);
    auto b = dp_plus(o, 0.5);
    REQUIRE(a.segments.size() == b.segments.size());
    CHECK(a.segments[0].actual_tolerance == b.segments[0].actual_tolerance);
}

TEST_CASE("dp_star uses the time-ratio deviation") {
    // straight path, wildly non-uniform speed: dp sees nothing, dp* splits
    Trajectory o{"a", {{0, 0, 0}, {9, 0, 1}, {10, 0, 10}}};
    auto plain = dp(o, 0.5);
    CHECK(plain.segments.size() == 1);
    auto star = dp_star(o, 0.5);
    CHECK(star.segments.size() == 2);  // p2 kept
    // deviation of (9,0)@1 from the chord's time-ratio point (1,0) is 8
    CHECK(deviation({9, 0}, 1, {{0, 0}, {10, 0}, 0, 10}, Simplifier::DPStar) ==
          doctest::Approx(8.0));
}

TEST_CASE("dp_star is exact for constant-speed straight motion") {
    Trajectory o{"a", {}};
    for (int i = 0; i < 20; ++i) o.points.push_back({double(i), 2.0 * i, Tick(i)});
    auto s = dp_star(o, 1e-9);
    REQUIRE(s.segments.size() == 1);
    CHECK(s.segments[0].actual_tolerance == doctest::Approx(0.0));
}

TEST_CASE("degenerate inputs") {
    Trajectory single{"a", {{1, 2, 5}}};
    auto s = dp(single, 1.0);
    REQUIRE(s.segments.size() == 1);
    CHECK(s.segments[0].geom.t_start == 5);
    CHECK(s.segments[0].geom.t_end == 5);
    CHECK(s.vertex_count() == 1);

    Trajectory two{"a", {{0, 0, 0}, {1, 1, 1}}};
    auto s2 = dp_plus(two, 0.0);
    REQUIRE(s2.segments.size() == 1);
    CHECK(s2.vertex_count() == 2);
}

TEST_CASE("deviation bounds and exact recorded tolerances") {
    std::mt19937_64 rng(17);
    for (auto kind : {Simplifier::DP, Simplifier::DPPlus, Simplifier::DPStar}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto o = random_walk(rng, 30 + trial);
            double delta = 0.5 + 0.1 * trial;
            auto s = simplify(o, delta, kind);

            CHECK(Tick(s.segments.front().geom.t_start) == o.t_first());
            CHECK(Tick(s.segments.back().geom.t_end) == o.t_last());
            CHECK(s.vertex_count() <= o.size());

            for (const auto& seg : s.segments) {
                CHECK(seg.actual_tolerance <= delta);
                double recomputed = recomputed_tolerance(o, seg, kind);
                CHECK(seg.actual_tolerance == doctest::Approx(recomputed).epsilon(1e-12));
            }
            // consecutive segments share an endpoint and a timestamp
            for (std::size_t i = 1; i < s.segments.size(); ++i) {
                CHECK(s.segments[i].geom.t_start == s.segments[i - 1].geom.t_end);
                CHECK(s.segments[i].geom.start == s.segments[i - 1].geom.end);
            }
        }
    }
}

TEST_CASE("mean reduction ratio: dp >= dp*") {
    std::mt19937_64 rng(23);
    double red_dp = 0.0, red_star = 0.0;
    const int n = 60;
    for (int i = 0; i < n; ++i) {
        auto o = random_walk(rng, 60, 1.0);
        std::vector<Trajectory> orig{o};
        red_dp += reduction_ratio(orig, {dp(o, 1.5)});
        red_star += reduction_ratio(orig, {dp_star(o, 1.5)});
    }
    CHECK(red_dp / n >= red_star / n);
}
