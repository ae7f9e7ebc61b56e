#include <doctest.h>

#include <random>
#include <sstream>

#include "convoy/partition.hpp"
#include "convoy/trajectory.hpp"

using namespace convoy;

TEST_CASE("load_trajectories groups and sorts") {
    std::istringstream in(
        "obj,t,x,y\n"
        "a,3,2.0,0.0\n"
        "a,1,0.0,0.0\n"
        "a,2,1.0,0.0\n");
    auto trajs = load_trajectories(in);
    REQUIRE(trajs.size() == 1);
    CHECK(trajs[0].id == "a");
    REQUIRE(trajs[0].points.size() == 3);
    CHECK(trajs[0].points[0].t == 1);
    CHECK(trajs[0].points[2].t == 3);
    CHECK(trajs[0].t_first() == 1);
    CHECK(trajs[0].t_last() == 3);
}

TEST_CASE("gaps are preserved at load time") {
    std::istringstream in("o1,1,0,0\no1,3,2,0\n");
    auto trajs = load_trajectories(in);
    REQUIRE(trajs.size() == 1);
    CHECK(trajs[0].points.size() == 2);  // no synthesis
}

TEST_CASE("load errors cite line numbers") {
    {
        std::istringstream in("a,1,0,0\nbadline\n");
        CHECK_THROWS_WITH_AS(load_trajectories(in), doctest::Contains("line 2"), CsvError);
    }
    {
        std::istringstream in("a,1,0,0\na,1,1,1\n");
        CHECK_THROWS_AS(load_trajectories(in), CsvError);  // duplicate (id, t)
    }
    {
        std::istringstream in("a,1,nan,0\n");
        CHECK_THROWS_AS(load_trajectories(in), CsvError);
    }
    {
        std::istringstream in("a,-1,0,0\n");
        CHECK_THROWS_AS(load_trajectories(in), CsvError);
    }
}

TEST_CASE("load is permutation invariant and round-trips") {
    std::mt19937_64 rng(11);
    std::vector<std::string> rows;
    for (int o = 0; o < 5; ++o)
        for (int t = 0; t < 20; ++t) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "o%d,%d,%f,%f", o, t,
                          double(rng() % 1000) / 10, double(rng() % 1000) / 10);
            rows.push_back(buf);
        }
    std::string sorted_input;
    for (const auto& r : rows) sorted_input += r + "\n";
    std::shuffle(rows.begin(), rows.end(), rng);
    std::string shuffled_input;
    for (const auto& r : rows) shuffled_input += r + "\n";

    std::istringstream a(sorted_input), b(shuffled_input);
    auto ta = load_trajectories(a);
    auto tb = load_trajectories(b);
    REQUIRE(ta.size() == tb.size());
    for (std::size_t i = 0; i < ta.size(); ++i) {
        CHECK(ta[i].id == tb[i].id);
        REQUIRE(ta[i].points.size() == tb[i].points.size());
        for (std::size_t j = 0; j < ta[i].points.size(); ++j) {
            CHECK(ta[i].points[j].t == tb[i].points[j].t);
            CHECK(ta[i].points[j].x == tb[i].points[j].x);
        }
    }

    std::ostringstream out;
    write_trajectories(out, ta);
    std::istringstream back(out.str());
    auto tc = load_trajectories(back);
    REQUIRE(tc.size() == ta.size());
    for (std::size_t i = 0; i < ta.size(); ++i) {
        REQUIRE(tc[i].points.size() == ta[i].points.size());
        for (std::size_t j = 0; j < ta[i].points.size(); ++j)
            CHECK(tc[i].points[j].t == ta[i].points[j].t);
    }
}

TEST_CASE("sample_at") {
    Trajectory o{"a", {{0, 0, 1}, {2, 0, 3}, {5, 1, 4}}};
    SUBCASE("stored point is returned bit-identical") {
        auto p = sample_at(o, 3);
        REQUIRE(p);
        CHECK(p->x == 2.0);
        CHECK(p->y == 0.0);
    }
    SUBCASE("interior gap interpolates") {
        auto p = sample_at(o, 2);
        REQUIRE(p);
        CHECK(p->x == doctest::Approx(1.0));
        CHECK(p->y == doctest::Approx(0.0));
    }
    SUBCASE("outside lifetime is absent") {
        CHECK(!sample_at(o, 0));
        CHECK(!sample_at(o, 5));
    }
}

namespace {

std::vector<SimplifiedTrajectory> one_segment_per_span(
    const std::vector<std::pair<Tick, Tick>>& spans) {
    std::vector<SimplifiedTrajectory> out;
    int i = 0;
    for (auto [a, b] : spans) {
        SimplifiedTrajectory s;
        s.owner = "o" + std::to_string(i++);
        s.segments.push_back({{{0, 0}, {1, 0}, double(a), double(b)}, s.owner, 0.0, 0});
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("partition_domain boundary layout") {
    // T = 8 ticks, lambda = 4: [1,4], [4,7], [7,8]; boundary tick shared
    auto simp = one_segment_per_span({{1, 8}});
    auto parts = partition_domain(simp, 4);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].t_lo == 1);
    CHECK(parts[0].t_hi == 4);
    CHECK(parts[1].t_lo == 4);
    CHECK(parts[1].t_hi == 7);
    CHECK(parts[2].t_lo == 7);
    CHECK(parts[2].t_hi == 8);
}

TEST_CASE("segment joins every partition its interval intersects") {
    auto simp = one_segment_per_span({{1, 7}, {3, 7}});
    auto parts = partition_domain(simp, 4);  // [1,4], [4,7]
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].polylines.count("o1") == 1);  // [3,7] overlaps [1,4]
    CHECK(parts[1].polylines.count("o1") == 1);
    CHECK(parts[0].polylines.count("o0") == 1);
    CHECK(parts[1].polylines.count("o0") == 1);
}

TEST_CASE("lambda >= T gives a single partition") {
    auto simp = one_segment_per_span({{1, 5}});
    auto parts = partition_domain(simp, 50);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].t_lo == 1);
    CHECK(parts[0].t_hi == 5);
    CHECK_THROWS_AS(partition_domain(simp, 1), std::invalid_argument);
}

TEST_CASE("partition membership matches interval intersection exhaustively") {
    std::mt19937_64 rng(5);
    std::vector<SimplifiedTrajectory> simp;
    for (int i = 0; i < 10; ++i) {
        SimplifiedTrajectory s;
        s.owner = "o" + std::to_string(i);
        Tick t = Tick(rng() % 10);
        for (int j = 0; j < 4; ++j) {
            Tick span = 1 + Tick(rng() % 6);
            s.segments.push_back(
                {{{0, 0}, {1, 1}, double(t), double(t + span)}, s.owner, 0.0, std::size_t(j)});
            t += span;
        }
        simp.push_back(std::move(s));
    }
    auto parts = partition_domain(simp, 5);
    for (const auto& s : simp) {
        std::size_t covered = 0;
        for (const auto& seg : s.segments) {
            for (const auto& p : parts) {
                bool intersects = seg.geom.t_start <= double(p.t_hi) &&
                                  seg.geom.t_end >= double(p.t_lo);
                bool member = false;
                auto it = p.polylines.find(s.owner);
                if (it != p.polylines.end())
                    for (const auto& ps : it->second)
                        if (ps.geom.t_start == seg.geom.t_start &&
                            ps.geom.t_end == seg.geom.t_end)
                            member = true;
                CHECK(member == intersects);
                if (member) ++covered;
            }
            CHECK(covered >= 1);
        }
    }
}
