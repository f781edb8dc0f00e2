// Coordinate types and dominance predicates shared by every module.
//
// Ranges are closed: an octant (wedge) with apex a contains q iff q <= a
// componentwise. Dominance (SW/NE) is strict.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace octcover {

struct Point2 {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point2 &, const Point2 &) = default;
};

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;

  friend bool operator==(const Point3 &, const Point3 &) = default;
};

using PointSet3 = std::vector<Point3>;

enum class Color : std::uint8_t { Red, Blue };

using Coloring = std::vector<Color>;

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

constexpr std::string_view to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected graph on point indices 0..n-1.
struct ColorGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const ColorGraph &, const ColorGraph &) = default;
};

struct Wedge {
  Point2 apex;
};

struct Octant {
  Point3 apex;
};

/// p is strictly south-west of q.
constexpr bool sw_of(const Point2 &p, const Point2 &q) {
  return p.x < q.x && p.y < q.y;
}

constexpr bool incomparable(const Point2 &p, const Point2 &q) {
  return !sw_of(p, q) && !sw_of(q, p);
}

constexpr bool wedge_contains(const Wedge &w, const Point2 &p) {
  return p.x <= w.apex.x && p.y <= w.apex.y;
}

constexpr bool octant_contains(const Octant &o, const Point3 &p) {
  return p.x <= o.apex.x && p.y <= o.apex.y && p.z <= o.apex.z;
}

constexpr Point3 operator-(const Point3 &p) { return {-p.x, -p.y, -p.z}; }

/// True iff no two points share a coordinate value on any axis.
bool has_distinct_coordinates(std::span<const Point3> ps);

/// Breaks coordinate ties deterministically by input index.
///
/// Per axis, a group of k points sharing value v is spread to
/// v + j * g / (2k) for j = 0..k-1 in index order, where g is the smallest
/// nonzero gap on that axis (1 if the axis has a single value). Every
/// strict comparison between non-tied coordinates is preserved, so every
/// closed-octant trace of the input is also a trace of the output. Sets
/// without ties are returned unchanged. Throws std::invalid_argument on a
/// non-finite coordinate.
PointSet3 generalize(std::span<const Point3> ps);

/// Indices of ps sorted by increasing z (ties by index).
std::vector<std::size_t> z_order(std::span<const Point3> ps);

/// Projections onto z = 0, in increasing z order of the originals.
std::vector<Point2> project_z(std::span<const Point3> ps);

} // namespace octcover
