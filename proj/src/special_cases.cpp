#include "octcover/special_cases.hpp"

#include "ranks.hpp"

#include <algorithm>
#include <set>

namespace octcover {

using detail::CountGrid;
using detail::dense_ranks;

ComparablePairError::ComparablePairError(std::size_t first, std::size_t second)
    : std::invalid_argument("points " + std::to_string(first) + " and " + std::to_string(second) +
                            " are comparable"),
      first_(first), second_(second) {}

void require_antichain(std::span<const Point2> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!incomparable(seq[i], seq[j]))
        throw ComparablePairError(i, j);
    }
  }
}

namespace {

// x order for an antichain; ties in x put the higher point first so that y
// stays non-increasing along the order.
bool x_before(const Point2 &a, std::size_t ia, const Point2 &b, std::size_t ib) {
  if (a.x != b.x)
    return a.x < b.x;
  if (a.y != b.y)
    return a.y > b.y;
  return ia < ib;
}

Color to_color(PartialColor c) { return c == PartialColor::Blue ? Color::Blue : Color::Red; }

PartialColor to_partial(Color c) { return c == Color::Red ? PartialColor::Red : PartialColor::Blue; }

} // namespace

IncomparableColoring color_incomparable(std::span<const Point2> seq) {
  require_antichain(seq);
  const std::size_t n = seq.size();
  IncomparableColoring out;
  PartialColoring partial(n, PartialColor::Uncolored);
  std::vector<std::size_t> order; // ids in x order

  for (std::size_t t = 0; t < n; ++t) {
    auto it = std::lower_bound(order.begin(), order.end(), t,
                               [&](std::size_t id, std::size_t self) { return x_before(seq[id], id, seq[self], self); });
    const auto pos = static_cast<std::size_t>(it - order.begin());
    order.insert(it, t);

    const bool left_open = pos > 0 && partial[order[pos - 1]] == PartialColor::Uncolored;
    const bool right_open = pos + 1 < order.size() && partial[order[pos + 1]] == PartialColor::Uncolored;
    // Adjacent uncolored neighbors on both sides cannot occur: they would
    // have been adjacent before this arrival. The left one is taken first.
    if (left_open || right_open) {
      const std::size_t lo = left_open ? pos - 1 : pos;
      const std::size_t hi = lo + 1;
      std::optional<PartialColor> before, after;
      for (std::size_t k = lo; k-- > 0;) {
        if (partial[order[k]] != PartialColor::Uncolored) {
          before = partial[order[k]];
          break;
        }
      }
      for (std::size_t k = hi + 1; k < order.size(); ++k) {
        if (partial[order[k]] != PartialColor::Uncolored) {
          after = partial[order[k]];
          break;
        }
      }
      Color first = Color::Red;
      if (before)
        first = opposite(to_color(*before));
      else if (after)
        first = to_color(*after);
      partial[order[lo]] = to_partial(first);
      partial[order[hi]] = to_partial(opposite(first));
    }
    out.history.push_back(partial);
  }

  out.colors.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.colors[i] = to_color(partial[i]);
  return out;
}

std::optional<std::string> check_partial_invariants(std::span<const Point2> seq, std::size_t prefix,
                                                    const PartialColoring &partial) {
  std::vector<std::size_t> order(prefix);
  for (std::size_t i = 0; i < prefix; ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x_before(seq[a], a, seq[b], b); });

  std::optional<PartialColor> last_color;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const PartialColor c = partial[order[k]];
    if (c == PartialColor::Uncolored) {
      if (k > 0 && partial[order[k - 1]] == PartialColor::Uncolored)
        return "adjacent uncolored points " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]);
      continue;
    }
    if (last_color && *last_color == c)
      return "colored points do not alternate at point " + std::to_string(order[k]);
    last_color = c;
  }
  for (std::size_t i = prefix; i < partial.size(); ++i) {
    if (partial[i] != PartialColor::Uncolored)
      return "point " + std::to_string(i) + " colored before arrival";
  }
  return std::nullopt;
}

namespace {

void check_history(std::span<const Point2> seq, std::span<const PartialColoring> history) {
  if (history.size() != seq.size())
    throw std::invalid_argument("history length differs from sequence length");
  for (const auto &h : history) {
    if (h.size() != seq.size())
      throw std::invalid_argument("history entry length differs from sequence length");
  }
}

} // namespace

VerifyReport verify_incomparable_prefixes(std::span<const Point2> seq, std::span<const PartialColoring> history,
                                          std::size_t threshold) {
  check_history(seq, history);
  const std::size_t n = seq.size();
  const auto rx = dense_ranks(seq, [](const Point2 &p) { return p.x; });
  const auto ry = dense_ranks(seq, [](const Point2 &p) { return p.y; });
  const std::size_t nx = rx.values.size(), ny = ry.values.size();

  struct PrefixResult {
    std::size_t ranges = 0;
    std::size_t max_mono = 0;
    bool failed = false;
    std::size_t i = 0, j = 0, red = 0, blue = 0;
  };
  std::vector<PrefixResult> results(n);

#pragma omp parallel
  {
    CountGrid red, blue, all;
    std::vector<char> x_seen, y_seen;
#pragma omp for schedule(dynamic)
    for (std::size_t t = 1; t <= n; ++t) {
      const auto &partial = history[t - 1];
      red.reset(nx, ny);
      blue.reset(nx, ny);
      all.reset(nx, ny);
      // Apexes use coordinates of arrived points only.
      x_seen.assign(nx + 1, 0);
      y_seen.assign(ny + 1, 0);
      for (std::size_t q = 0; q < t; ++q) {
        const std::size_t i = rx.rank[q] + 1, j = ry.rank[q] + 1;
        x_seen[i] = y_seen[j] = 1;
        ++all.at(i, j);
        if (partial[q] == PartialColor::Red)
          ++red.at(i, j);
        else if (partial[q] == PartialColor::Blue)
          ++blue.at(i, j);
      }
      red.prefix_sum(nx, ny);
      blue.prefix_sum(nx, ny);
      all.prefix_sum(nx, ny);

      auto &res = results[t - 1];
      for (std::size_t i = 1; i <= nx; ++i) {
        for (std::size_t j = 1; j <= ny; ++j) {
          const auto total = static_cast<std::size_t>(all.at(i, j));
          if (total == 0 || !x_seen[i] || !y_seen[j])
            continue;
          ++res.ranges;
          const auto r = static_cast<std::size_t>(red.at(i, j));
          const auto b = static_cast<std::size_t>(blue.at(i, j));
          if (r == 0 || b == 0) {
            res.max_mono = std::max(res.max_mono, total);
            if (total >= threshold && !res.failed) {
              res.failed = true;
              res.i = i - 1;
              res.j = j - 1;
              res.red = r;
              res.blue = b;
            }
          }
        }
      }
    }
  }

  VerifyReport report;
  for (std::size_t t = 1; t <= n; ++t) {
    const auto &res = results[t - 1];
    report.ranges += res.ranges;
    report.max_monochromatic = std::max(report.max_monochromatic, res.max_mono);
    if (res.failed && report.ok) {
      report.ok = false;
      VerifyWitness w;
      w.location = {rx.values[res.i], ry.values[res.j]};
      const Wedge wedge{{w.location[0], w.location[1]}};
      for (std::size_t q = 0; q < t; ++q) {
        if (wedge_contains(wedge, seq[q]))
          w.members.push_back(q);
      }
      w.red = res.red;
      w.blue = res.blue;
      w.step = t;
      report.witness = std::move(w);
    }
  }
  return report;
}

namespace reference {

VerifyReport verify_incomparable_prefixes(std::span<const Point2> seq, std::span<const PartialColoring> history,
                                          std::size_t threshold) {
  check_history(seq, history);
  VerifyReport report;
  for (std::size_t t = 1; t <= seq.size(); ++t) {
    const auto &partial = history[t - 1];
    std::set<std::pair<double, double>> apexes;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = 0; b < t; ++b)
        apexes.insert({seq[a].x, seq[b].y});
    for (const auto &[x, y] : apexes) {
      VerifyWitness w;
      w.location = {x, y};
      w.step = t;
      for (std::size_t q = 0; q < t; ++q) {
        if (!wedge_contains(Wedge{{x, y}}, seq[q]))
          continue;
        w.members.push_back(q);
        if (partial[q] == PartialColor::Red)
          ++w.red;
        else if (partial[q] == PartialColor::Blue)
          ++w.blue;
      }
      if (w.members.empty())
        continue;
      ++report.ranges;
      if (w.red == 0 || w.blue == 0) {
        report.max_monochromatic = std::max(report.max_monochromatic, w.members.size());
        if (w.members.size() >= threshold && report.ok) {
          report.ok = false;
          report.witness = std::move(w);
        }
      }
    }
  }
  return report;
}

} // namespace reference

// ---------------------------------------------------------------------------
// Lower bound

Hypergraph3 lower_bound_hypergraph() {
  // 1-indexed labels.
  constexpr std::array<std::array<std::size_t, 3>, 12> labelled{{
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}, {6, 2, 5}, {6, 2, 7},
      {6, 2, 8}, {5, 7, 8}, {6, 1, 2}, {6, 1, 9}, {6, 1, 10}, {2, 9, 10},
  }};
  Hypergraph3 h{10, {}};
  for (auto t : labelled) {
    for (auto &v : t)
      --v;
    std::sort(t.begin(), t.end());
    h.triples.push_back(t);
  }
  return h;
}

namespace {

struct RealizationSearch {
  const Hypergraph3 &h;
  std::vector<std::vector<std::array<std::size_t, 3>>> closing; // triples by largest vertex
  std::vector<std::size_t> order;                               // vertices in x order
  std::uint64_t budget;

  bool triples_exact(std::size_t newest) const {
    std::vector<std::size_t> pos(h.n, 0);
    for (std::size_t k = 0; k < order.size(); ++k)
      pos[order[k]] = k;
    for (const auto &t : closing[newest]) {
      const auto [lo, hi] = std::minmax({pos[t[0]], pos[t[1]], pos[t[2]]});
      if (hi - lo != 2)
        return false;
    }
    return true;
  }

  bool place(std::size_t vertex) {
    if (vertex == h.n)
      return true;
    for (std::size_t p = 0; p <= order.size(); ++p) {
      if (budget == 0)
        return false;
      --budget;
      order.insert(order.begin() + static_cast<std::ptrdiff_t>(p), vertex);
      if (triples_exact(vertex) && place(vertex + 1))
        return true;
      order.erase(order.begin() + static_cast<std::ptrdiff_t>(p));
    }
    return false;
  }
};

} // namespace

std::optional<PointSet3> search_realization(const Hypergraph3 &h, std::uint64_t budget) {
  RealizationSearch s{h, std::vector<std::vector<std::array<std::size_t, 3>>>(h.n), {}, budget};
  for (const auto &t : h.triples) {
    const std::size_t top = std::max({t[0], t[1], t[2]});
    if (top >= h.n || t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw std::invalid_argument("search_realization: malformed triple");
    s.closing[top].push_back(t);
  }
  if (!s.place(0))
    return std::nullopt;

  PointSet3 out(h.n);
  for (std::size_t k = 0; k < s.order.size(); ++k) {
    const std::size_t v = s.order[k];
    out[v] = {static_cast<double>(k), static_cast<double>(h.n - 1 - k), static_cast<double>(v)};
  }
  return out;
}

FixtureReport validate_realization(const LowerBoundFixture &fixture) {
  FixtureReport report;
  const auto fail = [&](std::string why) {
    report.ok = false;
    report.failure = std::move(why);
    return report;
  };
  if (!fixture.realization)
    return fail("no realization present");
  const auto &ps = *fixture.realization;
  if (ps.size() != fixture.hypergraph.n)
    return fail("realization has " + std::to_string(ps.size()) + " points, expected " +
                std::to_string(fixture.hypergraph.n));
  if (!has_distinct_coordinates(ps))
    return fail("coordinates are not distinct per axis");
  const auto zo = z_order(ps);
  for (std::size_t r = 0; r < zo.size(); ++r) {
    if (zo[r] != r)
      return fail("label " + std::to_string(zo[r] + 1) + " has z-rank " + std::to_string(r + 1));
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (!incomparable({ps[i].x, ps[i].y}, {ps[j].x, ps[j].y}))
        return fail("projections of labels " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " are comparable");
    }
  }
  const auto exact = exact_triples(ps);
  const std::set<std::array<std::size_t, 3>> have(exact.triples.begin(), exact.triples.end());
  for (auto t : fixture.hypergraph.triples) {
    std::sort(t.begin(), t.end());
    if (!have.contains(t)) {
      report.missing_triple = t;
      return fail("triple is not an exact octant trace");
    }
  }
  return report;
}

} // namespace octcover
