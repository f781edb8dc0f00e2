#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octcover/geom.hpp"
#include "support.hpp"

#include <limits>
#include <set>

using namespace octcover;

namespace {

// Values per axis are pairwise distinct.
bool axis_distinct(const PointSet3 &ps, double Point3::*axis) {
  std::set<double> seen;
  for (const auto &p : ps)
    if (!seen.insert(p.*axis).second)
      return false;
  return true;
}

// Relative order per axis is preserved where the input was strict.
bool keeps_strict_order(const PointSet3 &in, const PointSet3 &out) {
  for (double Point3::*axis : {&Point3::x, &Point3::y, &Point3::z})
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = 0; j < in.size(); ++j)
        if (in[i].*axis < in[j].*axis && !(out[i].*axis < out[j].*axis))
          return false;
  return true;
}

} // namespace

TEST_CASE("strict dominance") {
  CHECK(sw_of({0, 0}, {1, 1}));
  CHECK_FALSE(sw_of({0, 1}, {1, 0}));
  CHECK_FALSE(sw_of({1, 1}, {1, 2}));
}

TEST_CASE("incomparability") {
  CHECK(incomparable({0, 1}, {1, 0}));
  CHECK_FALSE(incomparable({0, 0}, {1, 1}));
  CHECK(incomparable({0, 0}, {0, 0}));
}

TEST_CASE("closed wedges and octants") {
  CHECK(wedge_contains(Wedge{{1, 1}}, {1, 1}));
  CHECK_FALSE(wedge_contains(Wedge{{1, 1}}, {2, 0}));
  CHECK(octant_contains(Octant{{0, 0, 0}}, {-1, -1, -1}));
  CHECK(octant_contains(Octant{{0, 0, 0}}, {0, 0, 0}));
  CHECK_FALSE(octant_contains(Octant{{0, 0, 0}}, {0, 0, 1e-12}));
}

TEST_CASE("generalize leaves distinct sets alone") {
  const PointSet3 ps{{0, 5, 2}, {1, 3, 7}, {2, 4, 1}};
  CHECK(generalize(ps) == ps);
}

TEST_CASE("generalize breaks a single tie by index") {
  const PointSet3 ps{{0, 0, 0}, {0, 1, 2}};
  const auto g = generalize(ps);
  CHECK(has_distinct_coordinates(g));
  CHECK(g[0].x < g[1].x);
  CHECK(g[0].z < g[1].z);
  CHECK(g[0].y == 0);
  CHECK(g[1].y == 1);
}

TEST_CASE("generalize orders ten copies by index") {
  const PointSet3 ps(10, Point3{3, 3, 3});
  const auto g = generalize(ps);
  REQUIRE(g.size() == 10);
  for (std::size_t i = 1; i < 10; ++i) {
    CHECK(g[i - 1].x < g[i].x);
    CHECK(g[i - 1].y < g[i].y);
    CHECK(g[i - 1].z < g[i].z);
  }
}

TEST_CASE("generalize rejects non-finite coordinates") {
  const PointSet3 ps{{0, 0, 0}, {std::numeric_limits<double>::quiet_NaN(), 1, 1}};
  CHECK_THROWS_AS(generalize(ps), std::invalid_argument);
}

TEST_CASE("project_z sorts by z") {
  const PointSet3 ps{{5, 5, 2}, {0, 0, 1}};
  const auto q = project_z(ps);
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Point2{0, 0});
  CHECK(q[1] == Point2{5, 5});
  CHECK(project_z(PointSet3{{1, 2, 3}}) == std::vector<Point2>{{1, 2}});
  CHECK(z_order(ps) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("property: generalize separates, preserves strict order, is idempotent") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto raw = testing::grid(rng, 1 + round % 40);
    const auto g = generalize(raw);
    REQUIRE(g.size() == raw.size());
    CHECK(axis_distinct(g, &Point3::x));
    CHECK(axis_distinct(g, &Point3::y));
    CHECK(axis_distinct(g, &Point3::z));
    CHECK(has_distinct_coordinates(g));
    CHECK(keeps_strict_order(raw, g));
    CHECK(generalize(g) == g);
  }
}

TEST_CASE("property: exactly one dominance relation holds on distinct coordinates") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 100; ++round) {
    const auto ps = project_z(generalize(testing::grid(rng, 12)));
    for (const auto &p : ps)
      for (const auto &q : ps) {
        if (p == q)
          continue;
        const int holds = int(sw_of(p, q)) + int(sw_of(q, p)) + int(incomparable(p, q));
        CHECK(holds == 1);
      }
  }
}

TEST_CASE("property: project_z keeps distinctness and reverses y on antichains") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    const auto ps = generalize(testing::uniform_cube(rng, 1 + round % 30));
    const auto q = project_z(ps);
    REQUIRE(q.size() == ps.size());
    std::set<double> xs, ys;
    for (const auto &p : q) {
      xs.insert(p.x);
      ys.insert(p.y);
    }
    CHECK(xs.size() == q.size());
    CHECK(ys.size() == q.size());

    const auto chain = testing::random_antichain(rng, 1 + round % 30);
    PointSet3 lifted;
    for (std::size_t i = 0; i < chain.size(); ++i)
      lifted.push_back({chain[i].x, chain[i].y, double(i)});
    auto planar = project_z(lifted);
    std::sort(planar.begin(), planar.end(), [](auto a, auto b) { return a.x < b.x; });
    for (std::size_t i = 1; i < planar.size(); ++i)
      CHECK(planar[i - 1].y > planar[i].y);
  }
}
