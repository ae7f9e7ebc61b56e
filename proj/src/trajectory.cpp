#include "convoy/trajectory.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace convoy {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Trajectory> load_trajectories(std::istream& in) {
    std::map<std::string, Trajectory> by_id;
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (first) {
            first = false;
            if (stripped == "obj,t,x,y") continue;  // optional header
        }
        auto fields = split_csv(stripped);
        if (fields.size() != 4) throw CsvError(lineno, "expected 4 fields obj,t,x,y");
        std::string id = trim(fields[0]);
        if (id.empty()) throw CsvError(lineno, "empty object id");
        Tick t;
        {
            std::string f = trim(fields[1]);
            auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), t);
            if (ec != std::errc{} || p != f.data() + f.size() || t < 0)
                throw CsvError(lineno, "bad tick value '" + f + "'");
        }
        double x, y;
        try {
            std::size_t pos = 0;
            x = std::stod(trim(fields[2]), &pos);
            if (pos != trim(fields[2]).size()) throw std::invalid_argument("");
            y = std::stod(trim(fields[3]), &pos);
            if (pos != trim(fields[3]).size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw CsvError(lineno, "bad coordinate");
        }
        if (!std::isfinite(x) || !std::isfinite(y))
            throw CsvError(lineno, "non-finite coordinate");
        auto& traj = by_id[id];
        traj.id = id;
        traj.points.push_back({x, y, t});
    }
    std::vector<Trajectory> out;
    out.reserve(by_id.size());
    for (auto& [id, traj] : by_id) {
        std::sort(traj.points.begin(), traj.points.end(),
                  [](const TimedPoint& a, const TimedPoint& b) { return a.t < b.t; });
        for (std::size_t i = 1; i < traj.points.size(); ++i)
            if (traj.points[i].t == traj.points[i - 1].t)
                throw CsvError(0, "duplicate timestamp " + std::to_string(traj.points[i].t) +
                                      " for object " + id);
        out.push_back(std::move(traj));
    }
    return out;
}

void write_trajectories(std::ostream& out, const std::vector<Trajectory>& trajs) {
    out << "obj,t,x,y\n";
    char buf[64];
    for (const auto& o : trajs)
        for (const auto& p : o.points) {
            std::snprintf(buf, sizeof(buf), "%s,%lld,%.6f,%.6f\n", o.id.c_str(),
                          static_cast<long long>(p.t), p.x, p.y);
            out << buf;
        }
}

std::optional<Point2> sample_at(const Trajectory& o, Tick t) {
    if (o.points.empty() || !o.covers(t)) return std::nullopt;
    auto it = std::lower_bound(o.points.begin(), o.points.end(), t,
                               [](const TimedPoint& p, Tick v) { return p.t < v; });
    if (it != o.points.end() && it->t == t) return Point2{it->x, it->y};
    // t lies in a gap: interpolate between the bracketing samples
    const TimedPoint& hi = *it;
    const TimedPoint& lo = *(it - 1);
    double r = double(t - lo.t) / double(hi.t - lo.t);
    return Point2{lo.x + r * (hi.x - lo.x), lo.y + r * (hi.y - lo.y)};
}

std::pair<Tick, Tick> time_domain(const std::vector<Trajectory>& trajs) {
    if (trajs.empty()) return {0, 0};
    Tick lo = trajs.front().t_first();
    Tick hi = trajs.front().t_last();
    for (const auto& o : trajs) {
        lo = std::min(lo, o.t_first());
        hi = std::max(hi, o.t_last());
    }
    return {lo, hi};
}

}  // namespace convoy
