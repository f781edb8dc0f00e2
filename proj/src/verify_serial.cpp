// Serial brute-force oracles. Every candidate range is checked point by
// point with the plain containment predicates.

#include "octcover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace octcover::reference {

namespace {

std::vector<double> unique_sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class T, class Get>
std::vector<double> axis_values(std::span<const T> items, Get get) {
  std::vector<double> v;
  for (const auto &it : items)
    v.push_back(get(it));
  return unique_sorted(std::move(v));
}

} // namespace

TraceSet enumerate_traces(std::span<const Point3> ps) {
  const auto xs = axis_values(ps, [](const Point3 &p) { return p.x; });
  const auto ys = axis_values(ps, [](const Point3 &p) { return p.y; });
  const auto zs = axis_values(ps, [](const Point3 &p) { return p.z; });

  std::set<std::vector<std::size_t>> seen;
  for (double x : xs) {
    for (double y : ys) {
      for (double z : zs) {
        const Octant o{{x, y, z}};
        std::vector<std::size_t> members;
        for (std::size_t q = 0; q < ps.size(); ++q) {
          if (octant_contains(o, ps[q]))
            members.push_back(q);
        }
        if (!members.empty())
          seen.insert(std::move(members));
      }
    }
  }

  TraceSet out;
  for (const auto &members : seen) {
    OctantTrace t{ps[members.front()], members};
    for (std::size_t q : members) {
      t.apex.x = std::max(t.apex.x, ps[q].x);
      t.apex.y = std::max(t.apex.y, ps[q].y);
      t.apex.z = std::max(t.apex.z, ps[q].z);
    }
    out.traces.push_back(std::move(t));
  }
  std::sort(out.traces.begin(), out.traces.end(), [](const OctantTrace &a, const OctantTrace &b) {
    return std::tie(a.apex.x, a.apex.y, a.apex.z) < std::tie(b.apex.x, b.apex.y, b.apex.z);
  });
  return out;
}

VerifyReport verify_coloring(std::span<const Point3> ps, std::span<const Color> colors, std::size_t threshold) {
  if (colors.size() != ps.size())
    throw std::invalid_argument("verify_coloring: color count differs from point count");
  const auto xs = axis_values(ps, [](const Point3 &p) { return p.x; });
  const auto ys = axis_values(ps, [](const Point3 &p) { return p.y; });
  const auto zs = axis_values(ps, [](const Point3 &p) { return p.z; });

  VerifyReport report;
  std::set<std::vector<std::size_t>> traces;
  for (double z : zs) {
    for (double x : xs) {
      for (double y : ys) {
        const Octant o{{x, y, z}};
        VerifyWitness w;
        w.location = {x, y, z};
        for (std::size_t q = 0; q < ps.size(); ++q) {
          if (!octant_contains(o, ps[q]))
            continue;
          w.members.push_back(q);
          ++(colors[q] == Color::Red ? w.red : w.blue);
        }
        const std::size_t total = w.members.size();
        if (total == 0)
          continue;
        traces.insert(w.members);
        if (w.red == 0 || w.blue == 0) {
          report.max_monochromatic = std::max(report.max_monochromatic, total);
          if (total >= threshold && report.ok) {
            report.ok = false;
            report.witness = std::move(w);
          }
        }
      }
    }
  }
  report.ranges = traces.size();
  return report;
}

VerifyReport verify_decomposition(std::span<const Octant> family, const Decomposition &d, std::size_t threshold) {
  check_partition(d, family.size());
  std::vector<Color> cls(family.size(), Color::Red);
  for (std::size_t i : d.blue)
    cls[i] = Color::Blue;

  const auto xs = axis_values(family, [](const Octant &o) { return o.apex.x; });
  const auto ys = axis_values(family, [](const Octant &o) { return o.apex.y; });
  const auto zs = axis_values(family, [](const Octant &o) { return o.apex.z; });
  const auto delta = [](const std::vector<double> &v) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < v.size(); ++i)
      gap = std::min(gap, v[i] - v[i - 1]);
    return std::isfinite(gap) ? gap / 2.0 : 0.5;
  };
  const double dx = delta(xs), dy = delta(ys), dz = delta(zs);

  VerifyReport report;
  for (double z : zs) {
    for (double x : xs) {
      for (double y : ys) {
        const Point3 c{x - dx, y - dy, z - dz};
        VerifyWitness w;
        w.location = {c.x, c.y, c.z};
        for (std::size_t q = 0; q < family.size(); ++q) {
          if (!octant_contains(family[q], c))
            continue;
          w.members.push_back(q);
          ++(cls[q] == Color::Red ? w.red : w.blue);
        }
        ++report.ranges;
        const std::size_t depth = w.members.size();
        report.max_depth = std::max(report.max_depth, depth);
        if (depth > 0 && (w.red == 0 || w.blue == 0)) {
          report.max_monochromatic = std::max(report.max_monochromatic, depth);
          if (depth >= threshold && report.ok) {
            report.ok = false;
            report.witness = std::move(w);
          }
        }
      }
    }
  }
  return report;
}

namespace {

struct Line {
  Point2 through;
  Point2 dir;
};

Point2 sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }

bool inside_tolerant(const std::array<Point2, 3> &t, Point2 q) {
  const double area = cross(sub(t[1], t[0]), sub(t[2], t[0]));
  const double w0 = cross(sub(t[1], q), sub(t[2], q)) / area;
  const double w1 = cross(sub(t[2], q), sub(t[0], q)) / area;
  const double w2 = 1.0 - w0 - w1;
  constexpr double tol = -1e-10;
  return w0 >= tol && w1 >= tol && w2 >= tol;
}

double distance(const Line &l, Point2 p) { return std::abs(cross(l.dir, sub(p, l.through))) / norm(l.dir); }

} // namespace

VerifyReport verify_triangle_decomposition(const HomothetFamily &family, const Decomposition &d,
                                           std::size_t threshold) {
  const std::size_t m = family.homothets.size();
  check_partition(d, m);
  std::vector<Color> cls(m, Color::Red);
  for (std::size_t i : d.blue)
    cls[i] = Color::Blue;

  std::vector<std::array<Point2, 3>> tris;
  for (const auto &h : family.homothets)
    tris.push_back(homothet_vertices(family.frame, h));

  // side[k][i]: side k of homothet i, from vertex k to vertex k+1.
  std::array<std::vector<Line>, 3> side;
  for (std::size_t k = 0; k < 3; ++k) {
    for (const auto &t : tris)
      side[k].push_back({t[k], sub(t[(k + 1) % 3], t[k])});
  }

  VerifyReport report;
  const auto probe = [&](Point2 q) {
    VerifyWitness w;
    w.location = {q.x, q.y};
    for (std::size_t i = 0; i < m; ++i) {
      if (!inside_tolerant(tris[i], q))
        continue;
      w.members.push_back(i);
      ++(cls[i] == Color::Red ? w.red : w.blue);
    }
    ++report.ranges;
    const std::size_t depth = w.members.size();
    report.max_depth = std::max(report.max_depth, depth);
    if (depth > 0 && (w.red == 0 || w.blue == 0)) {
      report.max_monochromatic = std::max(report.max_monochromatic, depth);
      if (depth >= threshold && report.ok) {
        report.ok = false;
        report.witness = std::move(w);
      }
    }
  };

  for (std::size_t ka = 0; ka < 3; ++ka) {
    for (std::size_t kb = ka + 1; kb < 3; ++kb) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const Line &la = side[ka][i];
          const Line &lb = side[kb][j];
          const double den = cross(la.dir, lb.dir);
          const double s = cross(sub(lb.through, la.through), lb.dir) / den;
          const Point2 v{la.through.x + s * la.dir.x, la.through.y + s * la.dir.y};

          const double scale = std::max({1.0, std::abs(v.x), std::abs(v.y)});
          double clearance = std::numeric_limits<double>::infinity();
          for (const auto &family_sides : side) {
            for (const auto &l : family_sides) {
              const double dist = distance(l, v);
              if (dist > 1e-9 * scale)
                clearance = std::min(clearance, dist);
            }
          }
          if (!std::isfinite(clearance))
            clearance = 1.0;

          // Unit steps across each line: moving by ga changes the signed
          // offset from la only, and gb from lb only.
          const Point2 na{-la.dir.y, la.dir.x}, nb{-lb.dir.y, lb.dir.x};
          const double det = na.x * nb.y - na.y * nb.x;
          const Point2 ga{nb.y / det, -nb.x / det};
          const Point2 gb{-na.y / det, na.x / det};
          const double step = 0.25 * clearance / (norm(ga) + norm(gb));
          for (int sa = -1; sa <= 1; ++sa) {
            for (int sb = -1; sb <= 1; ++sb) {
              probe({v.x + step * (sa * ga.x + sb * gb.x), v.y + step * (sa * ga.y + sb * gb.y)});
            }
          }
        }
      }
    }
  }
  return report;
}

std::optional<Coloring> exhaust_colorings(const Hypergraph3 &h) {
  if (h.n > 25)
    throw std::length_error("exhaust_colorings: too many vertices");
  const std::uint64_t total = std::uint64_t{1} << h.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Coloring c(h.n);
    for (std::size_t i = 0; i < h.n; ++i)
      c[i] = (mask >> i) & 1u ? Color::Blue : Color::Red;
    const bool proper = std::none_of(h.triples.begin(), h.triples.end(), [&](const auto &t) {
      return c[t[0]] == c[t[1]] && c[t[1]] == c[t[2]];
    });
    if (proper)
      return c;
  }
  return std::nullopt;
}

} // namespace octcover::reference
