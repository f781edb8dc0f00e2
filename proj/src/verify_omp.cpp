#include "octcover/verify.hpp"

#include "ranks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace octcover {

using detail::AxisRanks;
using detail::CountGrid;
using detail::dense_ranks;

namespace {

void check_size(std::size_t n, const OracleLimits &limits, const char *what) {
  if (n > limits.max_points)
    throw std::length_error(std::string(what) + ": " + std::to_string(n) + " inputs exceed the oracle limit of " +
                            std::to_string(limits.max_points));
}

void require_distinct(std::span<const Point3> ps, const char *what) {
  if (!has_distinct_coordinates(ps))
    throw std::invalid_argument(std::string(what) + ": coordinates must be distinct per axis");
}

struct LevelResult {
  std::size_t ranges = 0;
  std::size_t max_mono = 0;
  std::size_t max_depth = 0;
  bool failed = false;
  std::size_t fail_i = 0;
  std::size_t fail_j = 0;
  std::size_t fail_red = 0;
  std::size_t fail_blue = 0;
};

} // namespace

void check_partition(const Decomposition &d, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const auto *cls : {&d.red, &d.blue}) {
    for (std::size_t i : *cls) {
      if (i >= n)
        throw std::invalid_argument("decomposition index " + std::to_string(i) + " out of range");
      if (seen[i]++)
        throw std::invalid_argument("decomposition index " + std::to_string(i) + " appears twice");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i])
      throw std::invalid_argument("decomposition misses index " + std::to_string(i));
  }
}

// ---------------------------------------------------------------------------
// Octant traces

TraceSet enumerate_traces(std::span<const Point3> ps, const OracleLimits &limits) {
  check_size(ps.size(), limits, "enumerate_traces");
  require_distinct(ps, "enumerate_traces");
  const std::size_t n = ps.size();
  const auto rx = dense_ranks(ps, [](const Point3 &p) { return p.x; });
  const auto ry = dense_ranks(ps, [](const Point3 &p) { return p.y; });
  const auto rz = dense_ranks(ps, [](const Point3 &p) { return p.z; });
  std::vector<std::size_t> by_x(n), by_y(n), by_z(n);
  for (std::size_t i = 0; i < n; ++i) {
    by_x[rx.rank[i]] = i;
    by_y[ry.rank[i]] = i;
    by_z[rz.rank[i]] = i;
  }

  std::vector<std::vector<OctantTrace>> per_x(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t px = by_x[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t py = by_y[j];
      if (ry.rank[px] > j || rx.rank[py] > i)
        continue;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t pz = by_z[k];
        // The apex is the componentwise max of its trace exactly when the
        // points realizing each apex coordinate are inside.
        if (rz.rank[px] > k || rz.rank[py] > k || rx.rank[pz] > i || ry.rank[pz] > j)
          continue;
        OctantTrace t{{rx.values[i], ry.values[j], rz.values[k]}, {}};
        for (std::size_t q = 0; q < n; ++q) {
          if (rx.rank[q] <= i && ry.rank[q] <= j && rz.rank[q] <= k)
            t.members.push_back(q);
        }
        per_x[i].push_back(std::move(t));
      }
    }
  }

  TraceSet out;
  for (auto &v : per_x)
    std::move(v.begin(), v.end(), std::back_inserter(out.traces));
  return out;
}

VerifyReport verify_coloring(std::span<const Point3> ps, std::span<const Color> colors, std::size_t threshold,
                             const OracleLimits &limits) {
  if (colors.size() != ps.size())
    throw std::invalid_argument("verify_coloring: " + std::to_string(colors.size()) + " colors for " +
                                std::to_string(ps.size()) + " points");
  check_size(ps.size(), limits, "verify_coloring");
  const std::size_t n = ps.size();
  const auto rx = dense_ranks(ps, [](const Point3 &p) { return p.x; });
  const auto ry = dense_ranks(ps, [](const Point3 &p) { return p.y; });
  const auto rz = dense_ranks(ps, [](const Point3 &p) { return p.z; });
  const std::size_t nx = rx.values.size(), ny = ry.values.size(), nz = rz.values.size();

  std::vector<LevelResult> levels(nz);
#pragma omp parallel
  {
    CountGrid red, blue, fresh;
#pragma omp for schedule(dynamic)
    for (std::size_t k = 0; k < nz; ++k) {
      red.reset(nx, ny);
      blue.reset(nx, ny);
      fresh.reset(nx, ny);
      for (std::size_t q = 0; q < n; ++q) {
        if (rz.rank[q] > k)
          continue;
        auto &g = colors[q] == Color::Red ? red : blue;
        ++g.at(rx.rank[q] + 1, ry.rank[q] + 1);
        if (rz.rank[q] == k)
          ++fresh.at(rx.rank[q] + 1, ry.rank[q] + 1);
      }
      red.prefix_sum(nx, ny);
      blue.prefix_sum(nx, ny);
      fresh.prefix_sum(nx, ny);

      LevelResult &res = levels[k];
      for (std::size_t i = 1; i <= nx; ++i) {
        for (std::size_t j = 1; j <= ny; ++j) {
          const auto r = static_cast<std::size_t>(red.at(i, j));
          const auto b = static_cast<std::size_t>(blue.at(i, j));
          const std::size_t total = r + b;
          if (total == 0)
            continue;
          const auto all = [&](std::size_t a, std::size_t c) { return red.at(a, c) + blue.at(a, c); };
          // Count each distinct trace once, at its tight apex.
          if (all(i, j) > all(i - 1, j) && all(i, j) > all(i, j - 1) && fresh.at(i, j) > 0)
            ++res.ranges;
          if (r == 0 || b == 0) {
            res.max_mono = std::max(res.max_mono, total);
            if (total >= threshold && !res.failed) {
              res.failed = true;
              res.fail_i = i - 1;
              res.fail_j = j - 1;
              res.fail_red = r;
              res.fail_blue = b;
            }
          }
        }
      }
    }
  }

  VerifyReport report;
  for (std::size_t k = 0; k < nz; ++k) {
    const auto &res = levels[k];
    report.ranges += res.ranges;
    report.max_monochromatic = std::max(report.max_monochromatic, res.max_mono);
    if (res.failed && report.ok) {
      report.ok = false;
      VerifyWitness w;
      w.location = {rx.values[res.fail_i], ry.values[res.fail_j], rz.values[k]};
      const Octant o{{w.location[0], w.location[1], w.location[2]}};
      for (std::size_t q = 0; q < n; ++q) {
        if (octant_contains(o, ps[q]))
          w.members.push_back(q);
      }
      w.red = res.fail_red;
      w.blue = res.fail_blue;
      report.witness = std::move(w);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Octant decompositions

namespace {

double half_min_gap(const std::vector<double> &sorted_unique) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted_unique.size(); ++i)
    gap = std::min(gap, sorted_unique[i] - sorted_unique[i - 1]);
  return std::isfinite(gap) ? gap / 2.0 : 0.5;
}

} // namespace

VerifyReport verify_decomposition(std::span<const Octant> family, const Decomposition &d, std::size_t threshold,
                                  const OracleLimits &limits) {
  const std::size_t m = family.size();
  check_partition(d, m);
  check_size(m, limits, "verify_decomposition");
  std::vector<Color> cls(m, Color::Red);
  for (std::size_t i : d.blue)
    cls[i] = Color::Blue;

  const auto rx = dense_ranks(family, [](const Octant &o) { return o.apex.x; });
  const auto ry = dense_ranks(family, [](const Octant &o) { return o.apex.y; });
  const auto rz = dense_ranks(family, [](const Octant &o) { return o.apex.z; });
  const std::size_t nx = rx.values.size(), ny = ry.values.size(), nz = rz.values.size();
  const double dx = half_min_gap(rx.values), dy = half_min_gap(ry.values), dz = half_min_gap(rz.values);

  // Depth at candidate (i, j, k) counts apexes with every rank >= (i, j, k);
  // reversed ranks turn those suffix counts into prefix sums.
  std::vector<LevelResult> levels(nz);
#pragma omp parallel
  {
    CountGrid red, blue;
#pragma omp for schedule(dynamic)
    for (std::size_t k = 0; k < nz; ++k) {
      red.reset(nx, ny);
      blue.reset(nx, ny);
      for (std::size_t q = 0; q < m; ++q) {
        if (rz.rank[q] < k)
          continue;
        auto &g = cls[q] == Color::Red ? red : blue;
        ++g.at(nx - rx.rank[q], ny - ry.rank[q]);
      }
      red.prefix_sum(nx, ny);
      blue.prefix_sum(nx, ny);

      LevelResult &res = levels[k];
      for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
          const auto r = static_cast<std::size_t>(red.at(nx - i, ny - j));
          const auto b = static_cast<std::size_t>(blue.at(nx - i, ny - j));
          const std::size_t depth = r + b;
          ++res.ranges;
          res.max_depth = std::max(res.max_depth, depth);
          if (depth > 0 && (r == 0 || b == 0)) {
            res.max_mono = std::max(res.max_mono, depth);
            if (depth >= threshold && !res.failed) {
              res.failed = true;
              res.fail_i = i;
              res.fail_j = j;
              res.fail_red = r;
              res.fail_blue = b;
            }
          }
        }
      }
    }
  }

  VerifyReport report;
  for (std::size_t k = 0; k < nz; ++k) {
    const auto &res = levels[k];
    report.ranges += res.ranges;
    report.max_monochromatic = std::max(report.max_monochromatic, res.max_mono);
    report.max_depth = std::max(report.max_depth, res.max_depth);
    if (res.failed && report.ok) {
      report.ok = false;
      VerifyWitness w;
      const Point3 c{rx.values[res.fail_i] - dx, ry.values[res.fail_j] - dy, rz.values[k] - dz};
      w.location = {c.x, c.y, c.z};
      for (std::size_t q = 0; q < m; ++q) {
        if (octant_contains(family[q], c))
          w.members.push_back(q);
      }
      w.red = res.fail_red;
      w.blue = res.fail_blue;
      report.witness = std::move(w);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Triangle homothet decompositions

namespace {

// Real interval with independently open or closed ends.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

  Interval intersect(const Interval &o) const {
    Interval r;
    if (lo > o.lo || (lo == o.lo && !lo_closed)) {
      r.lo = lo;
      r.lo_closed = lo_closed;
    } else {
      r.lo = o.lo;
      r.lo_closed = o.lo_closed;
    }
    if (hi < o.hi || (hi == o.hi && !hi_closed)) {
      r.hi = hi;
      r.hi_closed = hi_closed;
    } else {
      r.hi = o.hi;
      r.hi_closed = o.hi_closed;
    }
    return r;
  }

  Interval operator+(const Interval &o) const {
    return {lo + o.lo, hi + o.hi, lo_closed && o.lo_closed, hi_closed && o.hi_closed};
  }

  Interval negated() const { return {-hi, -lo, hi_closed, lo_closed}; }

  double sample() const {
    if (lo == hi)
      return lo;
    if (std::isinf(lo) && std::isinf(hi))
      return 0.0;
    if (std::isinf(lo))
      return hi - 1.0;
    if (std::isinf(hi))
      return lo + 1.0;
    return lo + (hi - lo) / 2.0;
  }
};

// Slots between and at the sorted support values of one edge direction.
// Slot 2r is the open gap below values[r]; slot 2r+1 is values[r] itself.
// Either way the covering members are those with rank >= r. The gap above
// the largest value covers nothing and is left out.
struct SlotAxis {
  std::vector<double> values;
  std::vector<std::size_t> rank;

  std::size_t slots() const { return 2 * values.size(); }
  std::size_t min_rank(std::size_t s) const { return s / 2; }

  Interval interval(std::size_t s) const {
    const std::size_t r = s / 2;
    if (s % 2 == 1)
      return {values[r], values[r], true, true};
    Interval iv;
    iv.lo = r == 0 ? -std::numeric_limits<double>::infinity() : values[r - 1];
    iv.hi = values[r];
    return iv;
  }
};

struct TriangleSetup {
  std::array<Point2, 3> normal;
  std::array<SlotAxis, 3> axis;
};

TriangleSetup triangle_setup(const HomothetFamily &family) {
  auto v = family.frame.vertices();
  const double orient = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x);
  if (orient < 0)
    std::swap(v[1], v[2]);

  TriangleSetup s;
  std::array<std::vector<double>, 3> support;
  for (std::size_t k = 0; k < 3; ++k) {
    const Point2 e{v[(k + 1) % 3].x - v[k].x, v[(k + 1) % 3].y - v[k].y};
    s.normal[k] = {e.y, -e.x};
    for (const auto &h : family.homothets) {
      if (!(h.scale > 0) || !std::isfinite(h.scale))
        throw std::invalid_argument("homothet scale must be positive");
      const Point2 corner{h.scale * v[k].x + h.translation.x, h.scale * v[k].y + h.translation.y};
      support[k].push_back(s.normal[k].x * corner.x + s.normal[k].y * corner.y);
    }
    auto r = dense_ranks(std::span<const double>(support[k]), [](double d) { return d; });
    s.axis[k] = SlotAxis{std::move(r.values), std::move(r.rank)};
  }
  return s;
}

Point2 solve_normals(const TriangleSetup &s, double a, double b) {
  const Point2 n0 = s.normal[0], n1 = s.normal[1];
  const double det = n0.x * n1.y - n0.y * n1.x;
  return {(a * n1.y - n0.y * b) / det, (n0.x * b - a * n1.x) / det};
}

struct TriangleSlotResult {
  LevelResult level;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
};

} // namespace

VerifyReport verify_triangle_decomposition(const HomothetFamily &family, const Decomposition &d,
                                           std::size_t threshold, const OracleLimits &limits) {
  const std::size_t m = family.homothets.size();
  check_partition(d, m);
  check_size(m, limits, "verify_triangle_decomposition");
  std::vector<Color> cls(m, Color::Red);
  for (std::size_t i : d.blue)
    cls[i] = Color::Blue;
  const TriangleSetup setup = triangle_setup(family);
  const auto &ax = setup.axis;
  const std::size_t n2 = ax[2].values.size();

  std::vector<TriangleSlotResult> rows(ax[0].slots());
#pragma omp parallel
  {
    std::vector<std::size_t> red_suffix(n2 + 1), blue_suffix(n2 + 1);
#pragma omp for schedule(dynamic)
    for (std::size_t s0 = 0; s0 < ax[0].slots(); ++s0) {
      auto &row = rows[s0];
      const std::size_t r0 = ax[0].min_rank(s0);
      const Interval i0 = ax[0].interval(s0);
      for (std::size_t s1 = 0; s1 < ax[1].slots(); ++s1) {
        const std::size_t r1 = ax[1].min_rank(s1);
        const Interval third = (i0 + ax[1].interval(s1)).negated();

        std::fill(red_suffix.begin(), red_suffix.end(), 0);
        std::fill(blue_suffix.begin(), blue_suffix.end(), 0);
        for (std::size_t q = 0; q < m; ++q) {
          if (ax[0].rank[q] >= r0 && ax[1].rank[q] >= r1)
            ++(cls[q] == Color::Red ? red_suffix : blue_suffix)[ax[2].rank[q]];
        }
        for (std::size_t r = n2; r-- > 0;) {
          red_suffix[r] += red_suffix[r + 1];
          blue_suffix[r] += blue_suffix[r + 1];
        }

        for (std::size_t s2 = 0; s2 < ax[2].slots(); ++s2) {
          if (ax[2].interval(s2).intersect(third).empty())
            continue;
          const std::size_t r2 = ax[2].min_rank(s2);
          const std::size_t r = red_suffix[r2], b = blue_suffix[r2];
          const std::size_t depth = r + b;
          ++row.level.ranges;
          row.level.max_depth = std::max(row.level.max_depth, depth);
          if (depth > 0 && (r == 0 || b == 0)) {
            row.level.max_mono = std::max(row.level.max_mono, depth);
            if (depth >= threshold && !row.level.failed) {
              row.level.failed = true;
              row.s1 = s1;
              row.s2 = s2;
              row.level.fail_red = r;
              row.level.fail_blue = b;
            }
          }
        }
      }
    }
  }

  VerifyReport report;
  for (std::size_t s0 = 0; s0 < rows.size(); ++s0) {
    const auto &res = rows[s0].level;
    report.ranges += res.ranges;
    report.max_monochromatic = std::max(report.max_monochromatic, res.max_mono);
    report.max_depth = std::max(report.max_depth, res.max_depth);
    if (res.failed && report.ok) {
      report.ok = false;
      const auto &row = rows[s0];
      const Interval i2 = ax[2].interval(row.s2).intersect((ax[0].interval(s0) + ax[1].interval(row.s1)).negated());
      const double x2 = i2.sample();
      const Interval i0 = ax[0].interval(s0).intersect((ax[1].interval(row.s1) + Interval{x2, x2, true, true}).negated());
      const double x0 = i0.sample();
      const double x1 = -x2 - x0;
      const Point2 q = solve_normals(setup, x0, x1);
      VerifyWitness w;
      w.location = {q.x, q.y};
      for (std::size_t i = 0; i < m; ++i) {
        if (ax[0].rank[i] >= ax[0].min_rank(s0) && ax[1].rank[i] >= ax[1].min_rank(row.s1) &&
            ax[2].rank[i] >= ax[2].min_rank(row.s2))
          w.members.push_back(i);
      }
      w.red = res.fail_red;
      w.blue = res.fail_blue;
      report.witness = std::move(w);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hypergraphs

namespace {

bool has_monochromatic_triple(const Hypergraph3 &h, std::uint32_t mask) {
  for (const auto &t : h.triples) {
    const std::uint32_t a = (mask >> t[0]) & 1u, b = (mask >> t[1]) & 1u, c = (mask >> t[2]) & 1u;
    if (a == b && b == c)
      return true;
  }
  return false;
}

Coloring mask_to_coloring(std::uint32_t mask, std::size_t n) {
  Coloring c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = (mask >> i) & 1u ? Color::Blue : Color::Red;
  return c;
}

void check_hypergraph(const Hypergraph3 &h) {
  if (h.n > 25)
    throw std::length_error("exhaust_colorings: " + std::to_string(h.n) + " vertices exceed 25");
  for (const auto &t : h.triples) {
    for (std::size_t v : t) {
      if (v >= h.n)
        throw std::out_of_range("exhaust_colorings: triple vertex out of range");
    }
  }
}

} // namespace

std::optional<Coloring> exhaust_colorings(const Hypergraph3 &h) {
  check_hypergraph(h);
  const std::int64_t total = std::int64_t{1} << h.n;
  std::int64_t best = total;
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::int64_t mask = 0; mask < total; ++mask) {
    if (mask < best && !has_monochromatic_triple(h, static_cast<std::uint32_t>(mask)))
      best = mask;
  }
  if (best == total)
    return std::nullopt;
  return mask_to_coloring(static_cast<std::uint32_t>(best), h.n);
}

Hypergraph3 exact_triples(std::span<const Point3> ps, const OracleLimits &limits) {
  check_size(ps.size(), limits, "exact_triples");
  require_distinct(ps, "exact_triples");
  const std::size_t n = ps.size();
  std::vector<std::vector<std::array<std::size_t, 3>>> per_first(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const Octant o{{std::max({ps[a].x, ps[b].x, ps[c].x}), std::max({ps[a].y, ps[b].y, ps[c].y}),
                        std::max({ps[a].z, ps[b].z, ps[c].z})}};
        std::size_t inside = 0;
        for (std::size_t q = 0; q < n && inside <= 3; ++q)
          inside += octant_contains(o, ps[q]) ? 1 : 0;
        if (inside == 3)
          per_first[a].push_back({a, b, c});
      }
    }
  }
  Hypergraph3 h{n, {}};
  for (auto &v : per_first)
    h.triples.insert(h.triples.end(), v.begin(), v.end());
  return h;
}

} // namespace octcover
