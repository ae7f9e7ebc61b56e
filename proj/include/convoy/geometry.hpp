#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

namespace convoy {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Point2 a) { return dot(a, a); }

// Line segment whose endpoints carry timestamps; the object moves linearly
// from start at t_start to end at t_end. A degenerate segment (single sample)
// has start == end and t_start == t_end.
struct TimedSegment {
    Point2 start;
    Point2 end;
    double t_start = 0.0;
    double t_end = 0.0;

    double t_lo() const { return t_start; }
    double t_hi() const { return t_end; }
};

struct BoundingBox {
    Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Point2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    void expand(Point2 p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    void expand(const TimedSegment& s) {
        expand(s.start);
        expand(s.end);
    }
    bool contains(Point2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
};

constexpr double kInfDistance = std::numeric_limits<double>::infinity();

// dist_pp, dist_ps and location_at are inline: they sit on the inner loops
// of simplification and the auto-delta trace.
inline double dist_pp(Point2 a, Point2 b) { return std::sqrt(norm2(a - b)); }

namespace detail {

// Squared distance from p to the closest point on segment [a, b].
inline double dist2_ps(Point2 p, Point2 a, Point2 b) {
    Point2 v = b - a;
    double len2 = norm2(v);
    if (len2 == 0.0) return norm2(p - a);
    double t = dot(p - a, v) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    Point2 c = a + t * v;
    return norm2(p - c);
}

}  // namespace detail

inline double dist_ps(Point2 p, const TimedSegment& l) {
    return std::sqrt(detail::dist2_ps(p, l.start, l.end));
}

double dist_ss(const TimedSegment& a, const TimedSegment& b);

BoundingBox mbb(std::span<const TimedSegment> segments);
double dist_bb(const BoundingBox& u, const BoundingBox& v);

// Interpolated position of the segment's object at time t, t in [t_start, t_end].
inline Point2 location_at(const TimedSegment& l, double t) {
    if (t < l.t_start || t > l.t_end)
        throw std::out_of_range("location_at: time outside segment interval");
    if (l.t_end == l.t_start) return l.start;
    double r = (t - l.t_start) / (l.t_end - l.t_start);
    return l.start + r * (l.end - l.start);
}

// Time of closest approach of two linearly moving points, clamped into the
// common time interval. Both intervals must intersect.
double cpa_time(const TimedSegment& a, const TimedSegment& b);

// Distance at the CPA time; +infinity when the time intervals are disjoint.
double dist_star(const TimedSegment& a, const TimedSegment& b);

}  // namespace convoy
