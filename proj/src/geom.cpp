#include "octcover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace octcover {

namespace {

std::vector<std::size_t> sorted_by(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  return order;
}

// Separates tied values in place. Falls back to plain ranks when the
// offsets are not representable (ties closer together than a few ulps).
void separate_axis(std::vector<double> &values) {
  const auto order = sorted_by(values);
  const std::size_t n = values.size();
  if (n < 2)
    return;

  double gap = std::numeric_limits<double>::infinity();
  bool tied = false;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = values[order[i]] - values[order[i - 1]];
    if (d > 0)
      gap = std::min(gap, d);
    else
      tied = true;
  }
  if (!tied)
    return;
  if (!std::isfinite(gap))
    gap = 1.0;

  std::vector<double> out(values);
  bool ok = true;
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && values[order[end]] == values[order[begin]])
      ++end;
    const double base = values[order[begin]];
    const double k = static_cast<double>(end - begin);
    for (std::size_t j = begin; j < end; ++j) {
      const double shifted = base + static_cast<double>(j - begin) * gap / (2.0 * k);
      if (j > begin && shifted <= out[order[j - 1]])
        ok = false;
      out[order[j]] = shifted;
    }
    begin = end;
  }
  if (!ok) {
    for (std::size_t r = 0; r < n; ++r)
      out[order[r]] = static_cast<double>(r);
  }
  values = std::move(out);
}

} // namespace

bool has_distinct_coordinates(std::span<const Point3> ps) {
  const auto distinct = [&](auto get) {
    std::vector<double> v;
    v.reserve(ps.size());
    for (const auto &p : ps)
      v.push_back(get(p));
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return distinct([](const Point3 &p) { return p.x; }) &&
         distinct([](const Point3 &p) { return p.y; }) &&
         distinct([](const Point3 &p) { return p.z; });
}

PointSet3 generalize(std::span<const Point3> ps) {
  for (const auto &p : ps) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
      throw std::invalid_argument("generalize: non-finite coordinate");
  }
  std::vector<double> xs, ys, zs;
  xs.reserve(ps.size());
  ys.reserve(ps.size());
  zs.reserve(ps.size());
  for (const auto &p : ps) {
    xs.push_back(p.x);
    ys.push_back(p.y);
    zs.push_back(p.z);
  }
  separate_axis(xs);
  separate_axis(ys);
  separate_axis(zs);

  PointSet3 out(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    out[i] = {xs[i], ys[i], zs[i]};
  return out;
}

std::vector<std::size_t> z_order(std::span<const Point3> ps) {
  std::vector<double> zs;
  zs.reserve(ps.size());
  for (const auto &p : ps)
    zs.push_back(p.z);
  return sorted_by(zs);
}

std::vector<Point2> project_z(std::span<const Point3> ps) {
  std::vector<Point2> out;
  out.reserve(ps.size());
  for (std::size_t i : z_order(ps))
    out.push_back({ps[i].x, ps[i].y});
  return out;
}

} // namespace octcover
