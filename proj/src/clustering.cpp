#include "convoy/clustering.hpp"

#include <algorithm>
#include <deque>

#include "convoy/kernels.hpp"

namespace convoy {

std::vector<Cluster> dbscan_points(const std::vector<std::pair<std::string, Point2>>& points,
                                   double e, std::size_t m) {
    const std::size_t n = points.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].first < points[b].first;
    });

    std::vector<double> xs(n), ys(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = points[order[i]].second.x;
        ys[i] = points[order[i]].second.y;
    }

    const double e2 = e * e;
    auto kernel = kernels::dist2_kernel();
    std::vector<std::vector<std::size_t>> nh(n);
    std::vector<bool> core(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        kernel(xs.data(), ys.data(), n, xs[i], ys[i], d2.data());
        for (std::size_t j = 0; j < n; ++j)
            if (d2[j] <= e2) nh[i].push_back(j);
        core[i] = nh[i].size() >= m;  // NH includes the point itself
    }

    std::vector<int> label(n, -1);
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] != -1 || !core[i]) continue;
        int cid = int(clusters.size());
        clusters.emplace_back();
        std::deque<std::size_t> queue{i};
        label[i] = cid;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            clusters[cid].members.insert(points[order[u]].first);
            if (!core[u]) continue;  // border points do not expand
            for (std::size_t v : nh[u]) {
                if (label[v] == -1) {
                    label[v] = cid;
                    queue.push_back(v);
                }
            }
        }
    }
    std::erase_if(clusters, [m](const Cluster& c) { return c.members.size() < m; });
    return clusters;
}

namespace {

double pair_bound_distance(const Segment& a, const Segment& b, RangeSearchMode mode) {
    return mode == RangeSearchMode::Star ? dist_star(a.geom, b.geom)
                                         : dist_ss(a.geom, b.geom);
}

bool time_overlap(const TimedSegment& a, const TimedSegment& b) {
    return a.t_start <= b.t_end && b.t_start <= a.t_end;
}

// Detailed segment-pair test between two polylines, with a per-query-segment
// box prune against the candidate polyline's precomputed box.
bool pair_within(const std::vector<Segment>& qs, const std::vector<Segment>& ps,
                 const BoundingBox& ps_box, double ps_dmax, double e,
                 RangeSearchMode mode) {
    for (const auto& q : qs) {
        if (q.geom.t_start > ps.back().geom.t_end ||
            q.geom.t_end < ps.front().geom.t_start)
            continue;
        BoundingBox q_box;
        q_box.expand(q.geom);
        if (dist_bb(q_box, ps_box) > e + q.actual_tolerance + ps_dmax) continue;
        for (const auto& s : ps) {
            if (!time_overlap(q.geom, s.geom)) continue;
            if (pair_bound_distance(q, s, mode) <=
                e + q.actual_tolerance + s.actual_tolerance)
                return true;
        }
    }
    return false;
}

struct PolyInfo {
    BoundingBox box;
    double dmax = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
};

PolyInfo poly_info(const std::vector<Segment>& poly) {
    PolyInfo info;
    for (const auto& s : poly) {
        info.box.expand(s.geom);
        info.dmax = std::max(info.dmax, s.actual_tolerance);
    }
    info.t_lo = poly.front().geom.t_start;
    info.t_hi = poly.back().geom.t_end;
    return info;
}

}  // namespace

std::set<std::string> neighborhood_polylines(const std::vector<Segment>& query,
                                             const Partition& part, double e,
                                             RangeSearchMode mode) {
    std::set<std::string> result;
    if (query.empty()) return result;
    const std::string& owner = query.front().owner;
    double q_tlo = query.front().geom.t_start;
    double q_thi = query.back().geom.t_end;

    for (const auto& [id, poly] : part.polylines) {
        if (id == owner) {
            result.insert(id);
            continue;
        }
        // trajectories with disjoint time intervals cannot interact
        if (poly.front().geom.t_start > q_thi || poly.back().geom.t_end < q_tlo) continue;
        auto info = poly_info(poly);
        if (pair_within(query, poly, info.box, info.dmax, e, mode)) result.insert(id);
    }
    return result;
}

double omega(const std::vector<Segment>& a, const std::vector<Segment>& b) {
    double w = kInfDistance;
    for (const auto& sa : a)
        for (const auto& sb : b) {
            if (!time_overlap(sa.geom, sb.geom)) continue;
            w = std::min(w, dist_ss(sa.geom, sb.geom) - sa.actual_tolerance -
                                sb.actual_tolerance);
        }
    return w;
}

std::vector<Cluster> traj_dbscan(const Partition& part, double e, std::size_t m,
                                 RangeSearchMode mode) {
    std::vector<std::string> ids;
    std::vector<const std::vector<Segment>*> polys;
    for (const auto& [id, poly] : part.polylines) {  // already sorted by id
        ids.push_back(id);
        polys.push_back(&poly);
    }

    const std::size_t n = ids.size();
    std::vector<PolyInfo> info(n);
    for (std::size_t i = 0; i < n; ++i) info[i] = poly_info(*polys[i]);

    // The reachability test is symmetric, so fill both neighborhoods from one
    // pair check; the whole-polyline box prune rejects far-apart objects
    // before any segment work.
    std::vector<std::set<std::string>> nh(n);
    std::vector<bool> core(n, false);
    for (std::size_t i = 0; i < n; ++i) nh[i].insert(ids[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (info[i].t_lo > info[j].t_hi || info[j].t_lo > info[i].t_hi) continue;
            if (dist_bb(info[i].box, info[j].box) > e + info[i].dmax + info[j].dmax)
                continue;
            if (pair_within(*polys[i], *polys[j], info[j].box, info[j].dmax, e, mode)) {
                nh[i].insert(ids[j]);
                nh[j].insert(ids[i]);
            }
        }
    for (std::size_t i = 0; i < n; ++i) core[i] = nh[i].size() >= m;
    auto idx = [&](const std::string& id) {
        return std::size_t(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };

    std::vector<int> label(n, -1);
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] != -1 || !core[i]) continue;
        int cid = int(clusters.size());
        clusters.emplace_back();
        std::deque<std::size_t> queue{i};
        label[i] = cid;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            clusters[cid].members.insert(ids[u]);
            if (!core[u]) continue;
            for (const auto& vid : nh[u]) {
                std::size_t v = idx(vid);
                if (label[v] == -1) {
                    label[v] = cid;
                    queue.push_back(v);
                }
            }
        }
    }
    std::erase_if(clusters, [m](const Cluster& c) { return c.members.size() < m; });
    return clusters;
}

}  // namespace convoy
