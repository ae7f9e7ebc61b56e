#include "convoy/geometry.hpp"

#include <algorithm>

namespace convoy {

using detail::dist2_ps;

namespace {

double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    auto orient = [](Point2 p, Point2 q, Point2 r) { return cross(q - p, r - p); };
    double o1 = orient(a, b, c);
    double o2 = orient(a, b, d);
    double o3 = orient(c, d, a);
    double o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
        o4 != 0)
        return true;
    auto on_segment = [](Point2 p, Point2 q, Point2 r) {
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

double dist_ss(const TimedSegment& a, const TimedSegment& b) {
    if (segments_intersect(a.start, a.end, b.start, b.end)) return 0.0;
    double d2 = dist2_ps(a.start, b.start, b.end);
    d2 = std::min(d2, dist2_ps(a.end, b.start, b.end));
    d2 = std::min(d2, dist2_ps(b.start, a.start, a.end));
    d2 = std::min(d2, dist2_ps(b.end, a.start, a.end));
    return std::sqrt(d2);
}

BoundingBox mbb(std::span<const TimedSegment> segments) {
    if (segments.empty()) throw std::invalid_argument("mbb: empty segment set");
    BoundingBox box;
    for (const auto& s : segments) box.expand(s);
    return box;
}

double dist_bb(const BoundingBox& u, const BoundingBox& v) {
    double dx = std::max({0.0, u.lo.x - v.hi.x, v.lo.x - u.hi.x});
    double dy = std::max({0.0, u.lo.y - v.hi.y, v.lo.y - u.hi.y});
    return std::sqrt(dx * dx + dy * dy);
}

double cpa_time(const TimedSegment& a, const TimedSegment& b) {
    double lo = std::max(a.t_start, b.t_start);
    double hi = std::min(a.t_end, b.t_end);
    if (lo > hi) throw std::invalid_argument("cpa_time: disjoint time intervals");
    // Relative position of the two moving points is linear in t; the squared
    // distance is a quadratic whose unconstrained minimizer is clamped into
    // the common interval. Zero relative velocity picks the interval start.
    Point2 pa = location_at(a, lo);
    Point2 pb = location_at(b, lo);
    Point2 va = (a.t_end > a.t_start)
                    ? (1.0 / (a.t_end - a.t_start)) * (a.end - a.start)
                    : Point2{};
    Point2 vb = (b.t_end > b.t_start)
                    ? (1.0 / (b.t_end - b.t_start)) * (b.end - b.start)
                    : Point2{};
    Point2 dp = pa - pb;
    Point2 dv = va - vb;
    double dv2 = norm2(dv);
    if (dv2 == 0.0) return lo;
    double t = lo - dot(dp, dv) / dv2;
    return std::clamp(t, lo, hi);
}

double dist_star(const TimedSegment& a, const TimedSegment& b) {
    double lo = std::max(a.t_start, b.t_start);
    double hi = std::min(a.t_end, b.t_end);
    if (lo > hi) return kInfDistance;
    double t = cpa_time(a, b);
    return dist_pp(location_at(a, t), location_at(b, t));
}

}  // namespace convoy
