// Random inputs shared by the test binaries.

#pragma once

#include "octcover/duality.hpp"
#include "octcover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace octcover::testing {

enum class Distribution { Uniform, Clustered, Grid };

inline PointSet3 uniform_cube(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointSet3 ps(n);
  for (auto &p : ps)
    p = {u(rng), u(rng), u(rng)};
  return ps;
}

inline PointSet3 clustered(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> jitter(0.0, 0.03);
  const std::size_t k = 1 + n / 25;
  PointSet3 centers(k);
  for (auto &c : centers)
    c = {u(rng), u(rng), u(rng)};
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  PointSet3 ps(n);
  for (auto &p : ps) {
    const auto &c = centers[pick(rng)];
    p = {c.x + jitter(rng), c.y + jitter(rng), c.z + jitter(rng)};
  }
  return ps;
}

// Coordinates on a small integer grid, so ties and repeated points are
// common; callers run them through generalize.
inline PointSet3 grid(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<int> g(0, 4);
  PointSet3 ps(n);
  for (auto &p : ps)
    p = {double(g(rng)), double(g(rng)), double(g(rng))};
  return ps;
}

inline PointSet3 sample(std::mt19937_64 &rng, Distribution d, std::size_t n) {
  switch (d) {
  case Distribution::Uniform:
    return uniform_cube(rng, n);
  case Distribution::Clustered:
    return clustered(rng, n);
  case Distribution::Grid:
    return generalize(grid(rng, n));
  }
  return {};
}

inline OctantFamily random_octants(std::mt19937_64 &rng, std::size_t m) {
  OctantFamily f;
  for (const auto &p : uniform_cube(rng, m))
    f.push_back(Octant{p});
  return f;
}

// Antichain in the plane: x ascending, y descending, then shuffled into a
// random arrival order.
inline std::vector<Point2> random_antichain(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(n), ys(n);
  for (auto &x : xs)
    x = u(rng);
  for (auto &y : ys)
    y = u(rng);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  std::vector<Point2> seq(n);
  for (std::size_t i = 0; i < n; ++i)
    seq[i] = {xs[i], ys[i]};
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

inline TriangleFrame random_frame(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const std::array<Point2, 3> v{{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}};
    const double det = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x);
    if (std::abs(det) > 0.5)
      return TriangleFrame::from_vertices(v);
  }
}

inline Homothet random_homothet(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> scale(0.5, 2.5);
  std::uniform_real_distribution<double> shift(-1.0, 1.0);
  return {scale(rng), {shift(rng), shift(rng)}};
}

inline HomothetFamily random_homothets(std::mt19937_64 &rng, std::size_t m) {
  HomothetFamily f{random_frame(rng), {}};
  for (std::size_t i = 0; i < m; ++i)
    f.homothets.push_back(random_homothet(rng));
  return f;
}

inline std::size_t count_color(std::span<const Color> colors, Color c) {
  return static_cast<std::size_t>(std::count(colors.begin(), colors.end(), c));
}

} // namespace octcover::testing
