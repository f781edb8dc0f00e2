#include "octcover/duality.hpp"

#include "octcover/staircase.hpp"

#include <cmath>
#include <stdexcept>

namespace octcover {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);

// Vertices of {x, y, z <= 1} in (s, t) coordinates, in the order
// (x = y = 1), (x = z = 1), (y = z = 1).
std::array<Point2, 3> canonical_vertices() {
  return {Point2{0.0, kSqrt6}, Point2{3.0 / kSqrt2, -3.0 / kSqrt6}, Point2{-3.0 / kSqrt2, -3.0 / kSqrt6}};
}

Point2 apply(const std::array<double, 4> &m, Point2 p) {
  return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
}

double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

Point2 sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

void check_scale(double scale) {
  if (!std::isfinite(scale) || !(scale > 0))
    throw std::invalid_argument("homothet scale must be positive, got " + std::to_string(scale));
}

} // namespace

TriangleHomothetCanonical TriangleHomothetCanonical::checked(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !(a + b + c > 0))
    throw std::invalid_argument("canonical triangle needs a + b + c > 0");
  return {a, b, c};
}

TriangleFrame TriangleFrame::from_vertices(const std::array<Point2, 3> &v) {
  for (const auto &p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("triangle frame: non-finite vertex");
  }
  const Point2 e1 = sub(v[1], v[0]);
  const Point2 e2 = sub(v[2], v[0]);
  const double det = cross(e1, e2);
  const double scale = std::max(e1.x * e1.x + e1.y * e1.y, e2.x * e2.x + e2.y * e2.y);
  if (!(std::abs(det) > 1e-12 * scale))
    throw std::invalid_argument("triangle frame: vertices are collinear");

  const auto c = canonical_vertices();
  const Point2 f1 = sub(c[1], c[0]);
  const Point2 f2 = sub(c[2], c[0]);

  // linear * [e1 e2] = [f1 f2]  =>  linear = [f1 f2] * [e1 e2]^-1
  const std::array<double, 4> e_inv{e2.y / det, -e2.x / det, -e1.y / det, e1.x / det};
  TriangleFrame frame;
  frame.vertices_ = v;
  frame.linear_ = {f1.x * e_inv[0] + f2.x * e_inv[2], f1.x * e_inv[1] + f2.x * e_inv[3],
                   f1.y * e_inv[0] + f2.y * e_inv[2], f1.y * e_inv[1] + f2.y * e_inv[3]};
  const auto &l = frame.linear_;
  const double ldet = l[0] * l[3] - l[1] * l[2];
  frame.inverse_ = {l[3] / ldet, -l[1] / ldet, -l[2] / ldet, l[0] / ldet};
  const Point2 lv0 = apply(l, v[0]);
  frame.offset_ = sub(c[0], lv0);
  return frame;
}

Point2 TriangleFrame::to_canonical(Point2 p) const {
  const Point2 q = apply(linear_, p);
  return {q.x + offset_.x, q.y + offset_.y};
}

Point2 TriangleFrame::from_canonical(Point2 q) const { return apply(inverse_, sub(q, offset_)); }

PointSet3 dualize_family(std::span<const Octant> family) {
  PointSet3 out;
  out.reserve(family.size());
  for (const auto &o : family)
    out.push_back(-o.apex);
  return out;
}

Decomposition decompose_cover(std::span<const Octant> family) {
  const auto result = color_points(dualize_family(family));
  Decomposition d;
  for (std::size_t i = 0; i < family.size(); ++i)
    (result.colors[i] == Color::Red ? d.red : d.blue).push_back(i);
  return d;
}

Point3 embed_plane(Point2 st) {
  return {st.x / kSqrt2 + st.y / kSqrt6, -st.x / kSqrt2 + st.y / kSqrt6, -2.0 * st.y / kSqrt6};
}

Point2 unembed_plane(Point3 p) { return {(p.x - p.y) / kSqrt2, (p.x + p.y - 2.0 * p.z) / kSqrt6}; }

Point3 plane_point_to_3d(const TriangleFrame &frame, Point2 p) { return embed_plane(frame.to_canonical(p)); }

TriangleHomothetCanonical canonical_bounds(const TriangleFrame &frame, const Homothet &h) {
  check_scale(h.scale);
  // M(scale * q + t) = scale * M(q) + (L t + (1 - scale) m)
  const Point2 origin_image = frame.to_canonical({0, 0});
  const Point2 lt = sub(frame.to_canonical(h.translation), origin_image);
  const Point2 shift{lt.x + (1.0 - h.scale) * origin_image.x, lt.y + (1.0 - h.scale) * origin_image.y};
  const Point3 e = embed_plane(shift);
  return {h.scale + e.x, h.scale + e.y, h.scale + e.z};
}

Octant homothet_to_octant(const TriangleFrame &frame, const Homothet &h) {
  const auto c = canonical_bounds(frame, h);
  return Octant{{c.a, c.b, c.c}};
}

Homothet octant_to_homothet(const TriangleFrame &frame, const Octant &o) {
  const auto c = TriangleHomothetCanonical::checked(o.apex.x, o.apex.y, o.apex.z);
  const double scale = (c.a + c.b + c.c) / 3.0;
  const Point2 shift = unembed_plane({c.a - scale, c.b - scale, c.c - scale});
  const Point2 origin_image = frame.to_canonical({0, 0});
  const Point2 lt{shift.x - (1.0 - scale) * origin_image.x, shift.y - (1.0 - scale) * origin_image.y};
  const Point2 t = frame.from_canonical({lt.x + origin_image.x, lt.y + origin_image.y});
  return Homothet{scale, t};
}

std::array<Point2, 3> homothet_vertices(const TriangleFrame &frame, const Homothet &h) {
  check_scale(h.scale);
  std::array<Point2, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point2 v = frame.vertices()[i];
    out[i] = {h.scale * v.x + h.translation.x, h.scale * v.y + h.translation.y};
  }
  return out;
}

Homothet homothet_from_vertices(const TriangleFrame &frame, const std::array<Point2, 3> &v, double tol) {
  const auto &base = frame.vertices();
  const Point2 be = sub(base[1], base[0]);
  const Point2 ve = sub(v[1], v[0]);
  const double be2 = be.x * be.x + be.y * be.y;
  const double scale = (ve.x * be.x + ve.y * be.y) / be2;
  check_scale(scale);
  const Homothet h{scale, {v[0].x - scale * base[0].x, v[0].y - scale * base[0].y}};
  const auto expect = homothet_vertices(frame, h);
  const double extent = std::sqrt(be2) * scale;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::hypot(expect[i].x - v[i].x, expect[i].y - v[i].y) > tol * std::max(1.0, extent))
      throw std::invalid_argument("vertices are not a positive homothet of the base triangle");
  }
  return h;
}

bool homothet_contains(const TriangleFrame &frame, const Homothet &h, Point2 p) {
  check_scale(h.scale);
  const auto &b = frame.vertices();
  // Pull p back into the base triangle.
  const Point2 q{(p.x - h.translation.x) / h.scale, (p.y - h.translation.y) / h.scale};
  const double area = cross(sub(b[1], b[0]), sub(b[2], b[0]));
  const double w0 = cross(sub(b[1], q), sub(b[2], q)) / area;
  const double w1 = cross(sub(b[2], q), sub(b[0], q)) / area;
  const double w2 = 1.0 - w0 - w1;
  return w0 >= 0 && w1 >= 0 && w2 >= 0;
}

Decomposition decompose_triangle_cover(const HomothetFamily &family) {
  OctantFamily octants;
  octants.reserve(family.homothets.size());
  for (const auto &h : family.homothets)
    octants.push_back(homothet_to_octant(family.frame, h));
  return decompose_cover(octants);
}

} // namespace octcover
