#pragma once

#include <set>
#include <string>
#include <vector>

#include "convoy/partition.hpp"

namespace convoy {

struct Cluster {
    std::set<std::string> members;
};

// Which lower bound drives the segment-pair range search: D_LL (shortest
// spatial distance, sound for DP/DP+ output) or D_* (distance at the CPA
// time, sound for DP* output and never smaller than D_LL).
enum class RangeSearchMode { LL, Star };

// Snapshot DBSCAN over labelled points. Neighborhood is D <= e including the
// point itself; clusters with fewer than m members are never emitted.
// Deterministic: points are processed in ascending id order.
std::vector<Cluster> dbscan_points(const std::vector<std::pair<std::string, Point2>>& points,
                                   double e, std::size_t m);

// Objects of the partition whose polyline has some time-overlapping segment
// pair with the query polyline within the bound-expanded radius
// e + delta(l'_q) + delta(l'_i). Conservative superset of the objects truly
// within e of the query object at some covered timestamp. Includes the query
// object itself.
std::set<std::string> neighborhood_polylines(const std::vector<Segment>& query,
                                             const Partition& part, double e,
                                             RangeSearchMode mode);

// min over time-overlapping segment pairs of D_LL - delta_q - delta_i;
// +infinity when no pair shares time. omega > e proves the originals are
// never within e of each other.
double omega(const std::vector<Segment>& a, const std::vector<Segment>& b);

// DBSCAN where a "point" is one object's polyline within the partition and
// the e-neighborhood is neighborhood_polylines.
std::vector<Cluster> traj_dbscan(const Partition& part, double e, std::size_t m,
                                 RangeSearchMode mode);

}  // namespace convoy
