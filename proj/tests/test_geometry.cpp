#include <doctest.h>

#include <random>

#include "convoy/geometry.hpp"

using namespace convoy;

namespace {

std::mt19937_64 rng(42);

double uni(double lo, double hi) {
    return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
}

Point2 rand_point() { return {uni(-10, 10), uni(-10, 10)}; }

TimedSegment rand_segment() {
    double t0 = uni(0, 10);
    return {rand_point(), rand_point(), t0, t0 + uni(0.1, 10)};
}

// Dense-sampling oracle: min distance over sampled points of l.
double sampled_dist_ps(Point2 p, const TimedSegment& l, int n = 100000) {
    double best = kInfDistance;
    for (int i = 0; i <= n; ++i) {
        double r = double(i) / n;
        best = std::min(best, dist_pp(p, l.start + r * (l.end - l.start)));
    }
    return best;
}

}  // namespace

TEST_CASE("dist_pp basics and formula oracle") {
    CHECK(dist_pp({0, 0}, {0, 0}) == 0.0);
    CHECK(dist_pp({0, 0}, {3, 4}) == 5.0);
    for (int i = 0; i < 1000; ++i) {
        Point2 a = rand_point(), b = rand_point();
        double expect = std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
        CHECK(dist_pp(a, b) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("dist_pp metric properties") {
    for (int i = 0; i < 100000; ++i) {
        Point2 a = rand_point(), b = rand_point(), c = rand_point();
        double ab = dist_pp(a, b);
        CHECK(ab >= 0.0);
        CHECK(ab == dist_pp(b, a));
        CHECK(ab <= dist_pp(a, c) + dist_pp(c, b) + 1e-12);
    }
}

TEST_CASE("dist_ps examples and oracle") {
    TimedSegment l{{0, 0}, {2, 0}, 0, 1};
    CHECK(dist_ps({1, 1}, l) == doctest::Approx(1.0));
    CHECK(dist_ps({3, 0}, l) == doctest::Approx(1.0));
    for (int i = 0; i < 50; ++i) {
        Point2 p = rand_point();
        TimedSegment s = rand_segment();
        CHECK(dist_ps(p, s) == doctest::Approx(sampled_dist_ps(p, s)).epsilon(1e-4));
        CHECK(dist_ps(p, s) <= dist_pp(p, s.start) + 1e-12);
        CHECK(dist_ps(p, s) <= dist_pp(p, s.end) + 1e-12);
    }
}

TEST_CASE("dist_ss examples") {
    TimedSegment a{{0, 0}, {4, 0}, 0, 1};
    TimedSegment b{{2, 0}, {6, 0}, 0, 1};
    CHECK(dist_ss(a, b) == 0.0);  // collinear overlap
    TimedSegment c{{0, 2}, {1, 2}, 0, 1};
    TimedSegment d{{0, 0}, {1, 0}, 0, 1};
    CHECK(dist_ss(c, d) == doctest::Approx(2.0));
    CHECK(dist_ss(c, d) == dist_ss(d, c));
}

TEST_CASE("dist_ss dense-sampling oracle") {
    for (int i = 0; i < 30; ++i) {
        TimedSegment a = rand_segment(), b = rand_segment();
        double best = kInfDistance;
        const int n = 400;
        for (int u = 0; u <= n; ++u) {
            Point2 pa = a.start + (double(u) / n) * (a.end - a.start);
            best = std::min(best, sampled_dist_ps(pa, b, n));
        }
        // sampled points are feasible, so the true minimum is never above the
        // sampled one; grid resolution bounds the error the other way
        double grid = (dist_pp(a.start, a.end) + dist_pp(b.start, b.end)) / n;
        CHECK(dist_ss(a, b) <= best + 1e-9);
        CHECK(best - dist_ss(a, b) <= grid);
    }
}

TEST_CASE("mbb and dist_bb") {
    TimedSegment pt{{1, 1}, {1, 1}, 0, 0};
    auto box = mbb(std::span(&pt, 1));
    CHECK(box.lo == Point2{1, 1});
    CHECK(box.hi == Point2{1, 1});

    std::vector<TimedSegment> segs = {{{0, 0}, {1, 0}, 0, 1}, {{0, 2}, {3, 2}, 1, 2}};
    box = mbb(segs);
    CHECK(box.lo == Point2{0, 0});
    CHECK(box.hi == Point2{3, 2});
    CHECK_THROWS_AS(mbb(std::span<const TimedSegment>{}), std::invalid_argument);

    BoundingBox u{{0, 0}, {1, 1}};
    BoundingBox v{{3, 3}, {4, 4}};
    CHECK(dist_bb(u, v) == doctest::Approx(2.0 * std::sqrt(2.0)));
    BoundingBox w{{0.5, 0.5}, {2, 2}};
    CHECK(dist_bb(u, w) == 0.0);
}

TEST_CASE("box distance lower-bounds segment distance") {
    for (int i = 0; i < 5000; ++i) {
        TimedSegment a = rand_segment(), b = rand_segment();
        auto ba = mbb(std::span(&a, 1));
        auto bb = mbb(std::span(&b, 1));
        CHECK(dist_bb(ba, bb) <= dist_ss(a, b) + 1e-12);
    }
}

TEST_CASE("location_at") {
    TimedSegment l{{0, 0}, {2, 2}, 0, 10};
    CHECK(location_at(l, 0) == l.start);
    CHECK(location_at(l, 10) == l.end);
    CHECK(location_at(l, 5) == Point2{1, 1});
    CHECK_THROWS_AS(location_at(l, 11), std::out_of_range);
    for (int i = 0; i < 1000; ++i) {
        TimedSegment s = rand_segment();
        double t = uni(s.t_start, s.t_end);
        Point2 p = location_at(s, t);
        double len = dist_pp(s.start, s.end);
        if (len > 1e-9) {
            double ratio = (t - s.t_start) / (s.t_end - s.t_start);
            CHECK(dist_pp(p, s.start) / len == doctest::Approx(ratio).epsilon(1e-9));
            CHECK(dist_ps(p, s) == doctest::Approx(0.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("cpa_time") {
    TimedSegment a{{0, 0}, {2, 0}, 0, 1};
    CHECK(cpa_time(a, a) == 0.0);  // identical: interval start, distance 0
    CHECK(dist_star(a, a) == 0.0);

    TimedSegment b{{2, 0}, {0, 0}, 0, 1};
    CHECK(cpa_time(a, b) == doctest::Approx(0.5));
    CHECK(dist_star(a, b) == doctest::Approx(0.0));

    // parallel, same velocity: constant distance, clamp picks interval start
    TimedSegment c{{0, 1}, {2, 1}, 0, 1};
    CHECK(cpa_time(a, c) == 0.0);
    CHECK(dist_star(a, c) == doctest::Approx(1.0));

    TimedSegment d{{0, 0}, {1, 0}, 5, 6};
    CHECK_THROWS_AS(cpa_time(a, d), std::invalid_argument);
    CHECK(dist_star(a, d) == kInfDistance);
}

TEST_CASE("cpa result stays in the common interval") {
    for (int i = 0; i < 100000; ++i) {
        TimedSegment a = rand_segment();
        TimedSegment b = rand_segment();
        double lo = std::max(a.t_start, b.t_start);
        double hi = std::min(a.t_end, b.t_end);
        if (lo > hi) continue;
        double t = cpa_time(a, b);
        CHECK(t >= lo);
        CHECK(t <= hi);
    }
}

TEST_CASE("dist_star time-sampling oracle and lower-bound chain") {
    int checked = 0;
    while (checked < 200) {
        TimedSegment a = rand_segment(), b = rand_segment();
        double lo = std::max(a.t_start, b.t_start);
        double hi = std::min(a.t_end, b.t_end);
        if (lo > hi) continue;
        ++checked;
        double ds = dist_star(a, b);
        double best = kInfDistance;
        const int n = 100000;
        for (int u = 0; u <= n; ++u) {
            double t = lo + (hi - lo) * double(u) / n;
            best = std::min(best, dist_pp(location_at(a, t), location_at(b, t)));
        }
        CHECK(ds == doctest::Approx(best).epsilon(1e-4));
        CHECK(ds >= dist_ss(a, b) - 1e-9);
    }
}

TEST_CASE("lower-bound chain fuzz") {
    int done = 0;
    while (done < 100000) {
        TimedSegment a = rand_segment(), b = rand_segment();
        double lo = std::max(a.t_start, b.t_start);
        double hi = std::min(a.t_end, b.t_end);
        if (lo > hi) continue;
        ++done;
        double bbd = dist_bb(mbb(std::span(&a, 1)), mbb(std::span(&b, 1)));
        double ss = dist_ss(a, b);
        double st = dist_star(a, b);
        double t = uni(lo, hi);
        double pp = dist_pp(location_at(a, t), location_at(b, t));
        CHECK(bbd <= ss + 1e-9);
        CHECK(ss <= st + 1e-9);
        CHECK(st <= pp + 1e-9);
    }
}
