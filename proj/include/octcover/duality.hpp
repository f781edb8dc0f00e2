// Covers by octants and by triangle homothets, and their reduction to
// coloring points against octants.
//
// A point p lies in the octant with apex w iff -w lies in the octant with
// apex -p, so splitting a family of octants is the same as coloring the
// negated apexes. Homothets of a triangle become octants after an affine map
// onto the plane x + y + z = 0, where {x <= a, y <= b, z <= c} cuts out an
// equilateral triangle of size a + b + c.
//
// Coloring a planar point set against homothets needs no separate entry
// point: embed the points with plane_point_to_3d and call color_points.

#pragma once

#include "octcover/geom.hpp"

#include <array>
#include <span>
#include <vector>

namespace octcover {

using OctantFamily = std::vector<Octant>;

/// Two classes partitioning a family's index range.
struct Decomposition {
  std::vector<std::size_t> red;
  std::vector<std::size_t> blue;

  friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

/// {x <= a, y <= b, z <= c} on the plane x + y + z = 0.
struct TriangleHomothetCanonical {
  double a = 1;
  double b = 1;
  double c = 1;

  /// Throws std::invalid_argument unless a + b + c > 0.
  static TriangleHomothetCanonical checked(double a, double b, double c);
};

/// Base triangle of a homothet family together with the affine map taking
/// its vertices to the canonical triangle {x, y, z <= 1}.
class TriangleFrame {
public:
  /// Throws std::invalid_argument for (near-)collinear or non-finite vertices.
  static TriangleFrame from_vertices(const std::array<Point2, 3> &vertices);

  const std::array<Point2, 3> &vertices() const { return vertices_; }

  /// Frame coordinates -> canonical plane coordinates (s, t).
  Point2 to_canonical(Point2 p) const;
  Point2 from_canonical(Point2 q) const;

private:
  std::array<Point2, 3> vertices_{};
  std::array<double, 4> linear_{};  // row-major 2x2
  std::array<double, 4> inverse_{}; // row-major 2x2
  Point2 offset_{};
};

/// The image of the base triangle under q -> scale * q + translation.
struct Homothet {
  double scale = 1;
  Point2 translation;
};

struct HomothetFamily {
  TriangleFrame frame;
  std::vector<Homothet> homothets;
};

PointSet3 dualize_family(std::span<const Octant> family);

/// Splits the family so that every point covered at least 12 times is
/// covered by both classes.
Decomposition decompose_cover(std::span<const Octant> family);

/// Canonical plane coordinates (s, t) -> 3D, orthonormal basis
/// (1,-1,0)/sqrt2 and (1,1,-2)/sqrt6.
Point3 embed_plane(Point2 st);

/// Orthogonal projection of a 3D point onto the canonical plane coordinates.
Point2 unembed_plane(Point3 p);

Point3 plane_point_to_3d(const TriangleFrame &frame, Point2 p);

/// Throws std::invalid_argument for a non-positive or non-finite scale.
Octant homothet_to_octant(const TriangleFrame &frame, const Homothet &h);

/// Inverse of homothet_to_octant. Throws std::invalid_argument when the
/// apex coordinates sum to a non-positive value (empty triangle).
Homothet octant_to_homothet(const TriangleFrame &frame, const Octant &o);

TriangleHomothetCanonical canonical_bounds(const TriangleFrame &frame, const Homothet &h);

std::array<Point2, 3> homothet_vertices(const TriangleFrame &frame, const Homothet &h);

/// Recovers (scale, translation) from three vertices listed in the frame's
/// vertex order. Throws std::invalid_argument when they are not a positive
/// homothet of the base triangle (relative tolerance `tol`).
Homothet homothet_from_vertices(const TriangleFrame &frame, const std::array<Point2, 3> &vertices,
                                double tol = 1e-9);

/// Closed containment computed in frame coordinates via barycentric
/// coordinates; independent of the canonical embedding.
bool homothet_contains(const TriangleFrame &frame, const Homothet &h, Point2 p);

Decomposition decompose_triangle_cover(const HomothetFamily &family);

} // namespace octcover
