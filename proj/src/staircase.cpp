#include "octcover/staircase.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace octcover {

// ---------------------------------------------------------------------------
// XOrderedPoints

std::vector<std::size_t> XOrderedPoints::ids() const {
  std::vector<std::size_t> out;
  out.reserve(entries_.size());
  for (const auto &e : entries_)
    out.push_back(e.id);
  return out;
}

bool XOrderedPoints::contains(std::size_t id) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry &e) { return e.id == id; });
}

void XOrderedPoints::insert(std::size_t id, Point2 p) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p.x,
                             [](const Entry &e, double x) { return e.p.x < x; });
  entries_.insert(it, Entry{id, p});
}

void XOrderedPoints::erase(std::size_t id) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry &e) { return e.id == id; });
  if (it != entries_.end())
    entries_.erase(it);
}

std::optional<XOrderedPoints::Entry> XOrderedPoints::predecessor(double x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry &e, double v) { return e.p.x < v; });
  if (it == entries_.begin())
    return std::nullopt;
  return *std::prev(it);
}

bool XOrderedPoints::wedge_hits(const Wedge &w) const {
  // Among entries with x <= apex.x the last one has the smallest y.
  auto it = std::upper_bound(entries_.begin(), entries_.end(), w.apex.x,
                             [](double v, const Entry &e) { return v < e.p.x; });
  if (it == entries_.begin())
    return false;
  return std::prev(it)->p.y <= w.apex.y;
}

std::vector<std::size_t> XOrderedPoints::remove_ne_of(Point2 p) {
  auto first = std::upper_bound(entries_.begin(), entries_.end(), p.x,
                                [](double v, const Entry &e) { return v < e.p.x; });
  auto last = first;
  while (last != entries_.end() && last->p.y > p.y)
    ++last;
  std::vector<std::size_t> removed;
  for (auto it = first; it != last; ++it)
    removed.push_back(it->id);
  entries_.erase(first, last);
  return removed;
}

bool is_above(const Staircase &s, Point2 p) {
  auto pred = s.predecessor(p.x);
  return pred && pred->p.y < p.y;
}

StepCounts count_steps(const Trace &trace) {
  StepCounts c;
  for (const auto &s : trace.steps) {
    switch (s.kind) {
    case StepKind::A: ++c.a; break;
    case StepKind::B: ++c.b; break;
    case StepKind::C: ++c.c; break;
    case StepKind::D: break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

void record(std::vector<TraceStep> *steps, const AlgoState &st, std::size_t point, StepKind kind,
            std::vector<Edge> edges, std::vector<std::size_t> promoted) {
  if (!steps)
    return;
  steps->push_back(TraceStep{point, kind, std::move(edges), std::move(promoted),
                             st.staircase.ids(), st.below.ids()});
}

void promote(AlgoState &st, std::size_t id) {
  const Point2 p = st.points[id];
  st.staircase.remove_ne_of(p);
  st.staircase.insert(id, p);
  st.below.erase(id);
}

} // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(const AlgoState &state) {
  const auto below = state.below.entries();
  const std::size_t n = below.size();
  // prefix_min[i] = smallest y among below[0..i).
  std::vector<double> prefix_min(n + 1, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i)
    prefix_min[i + 1] = std::min(prefix_min[i], below[i].p.y);

  for (std::size_t i = n; i-- > 0;) {
    if (!(prefix_min[i] < below[i].p.y))
      continue;
    for (std::size_t j = i; j-- > 0;) {
      if (below[j].p.y < below[i].p.y)
        return std::pair{below[i].id, below[j].id};
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 4>> find_quadruple(const AlgoState &state) {
  const auto below = state.below.entries();
  for (std::size_t k = 0; k + 3 < below.size(); ++k) {
    const Wedge w{{below[k + 3].p.x, below[k].p.y}};
    if (!state.staircase.wedge_hits(w))
      return std::array{below[k].id, below[k + 1].id, below[k + 2].id, below[k + 3].id};
  }
  return std::nullopt;
}

void insert_point(AlgoState &st, Point2 p, std::vector<TraceStep> *steps) {
  for (const auto &q : st.points) {
    if (q.x == p.x || q.y == p.y)
      throw std::invalid_argument("insert_point: coordinate shared with a processed point");
  }
  const std::size_t t = st.points.size();
  st.points.push_back(p);
  st.graph.n = st.points.size();

  // Step (a): hang p off the largest-x staircase point SW of it.
  if (auto support = st.staircase.predecessor(p.x); support && support->p.y < p.y) {
    Edge e{t, support->id};
    st.graph.edges.push_back(e);
    record(steps, st, t, StepKind::A, {e}, {});
    return;
  }

  st.below.insert(t, p);

  // Step (b): promote the dominating point of each comparable below pair.
  while (auto pair = find_comparable_pair(st)) {
    const auto [hi, lo] = *pair;
    for (const auto &u : st.below.entries()) {
      if (sw_of(st.points[hi], u.p))
        throw std::logic_error("insert_point: below point NE of a promoted point");
    }
    Edge e{hi, lo};
    promote(st, hi);
    st.graph.edges.push_back(e);
    record(steps, st, t, StepKind::B, {e}, {hi});
  }

  // Step (c): split crowded staircase-free windows.
  while (auto quad = find_quadruple(st)) {
    const auto [q1, q2, q3, q4] = *quad;
    promote(st, q2);
    promote(st, q3);
    Edge e1{q1, q2};
    Edge e2{q3, q4};
    st.graph.edges.push_back(e1);
    st.graph.edges.push_back(e2);
    record(steps, st, t, StepKind::C, {e1, e2}, {q2, q3});
    if (find_comparable_pair(st))
      throw std::logic_error("insert_point: step (c) produced a comparable below pair");
  }

  record(steps, st, t, StepKind::D, {}, {});
}

// ---------------------------------------------------------------------------
// Invariant audit

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

bool wedge_has_edge(const AlgoState &st, const Wedge &w) {
  return std::any_of(st.graph.edges.begin(), st.graph.edges.end(), [&](const Edge &e) {
    return wedge_contains(w, st.points[e.u]) && wedge_contains(w, st.points[e.v]);
  });
}

PropertyReport fail(Property p, std::vector<std::size_t> witness, std::string detail) {
  return PropertyReport{p, std::move(witness), std::move(detail)};
}

} // namespace

PropertyReport check_properties(const AlgoState &st) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t n = st.points.size();
  const auto stairs = st.staircase.entries();

  if (st.graph.n != n)
    return fail(Property::Bookkeeping, {}, "graph vertex count differs from point count");
  for (std::size_t k = 0; k < stairs.size(); ++k) {
    if (stairs[k].id >= n || !(stairs[k].p == st.points[stairs[k].id]))
      return fail(Property::Bookkeeping, {stairs[k].id}, "staircase entry does not match its point");
    if (k > 0 && !(stairs[k - 1].p.x < stairs[k].p.x && stairs[k - 1].p.y > stairs[k].p.y))
      return fail(Property::Bookkeeping, {stairs[k - 1].id, stairs[k].id}, "staircase is not an antichain");
  }

  // Classify every processed point from scratch.
  enum class Where { On, Above, Below };
  std::vector<Where> where(n, Where::Below);
  for (const auto &s : stairs)
    where[s.id] = Where::On;
  for (std::size_t i = 0; i < n; ++i) {
    if (where[i] == Where::On)
      continue;
    for (const auto &s : stairs) {
      if (sw_of(s.p, st.points[i])) {
        where[i] = Where::Above;
        break;
      }
    }
  }
  std::vector<std::size_t> below_ids;
  for (std::size_t i = 0; i < n; ++i) {
    if (where[i] == Where::Below)
      below_ids.push_back(i);
  }
  {
    auto stored = st.below.ids();
    std::sort(stored.begin(), stored.end());
    if (stored != below_ids)
      return fail(Property::Bookkeeping, stored, "stored below set differs from the recomputed one");
  }

  // (1) points above the staircase are good
  for (std::size_t i = 0; i < n; ++i) {
    if (where[i] == Where::Above && !wedge_has_edge(st, Wedge{st.points[i]}))
      return fail(Property::AboveGood, {i}, "wedge at an above point holds no edge");
  }

  // (2) staircase points are almost good
  for (std::size_t k = 0; k < stairs.size(); ++k) {
    const double x = k + 1 < stairs.size() ? stairs[k + 1].p.x : inf;
    const double y = k > 0 ? stairs[k - 1].p.y : inf;
    if (!wedge_has_edge(st, Wedge{{x, y}}))
      return fail(Property::StaircaseAlmostGood, {stairs[k].id}, "neighbor wedge of a staircase point holds no edge");
  }

  // (3) below points pairwise incomparable
  for (std::size_t a = 0; a < below_ids.size(); ++a) {
    for (std::size_t b = a + 1; b < below_ids.size(); ++b) {
      if (!incomparable(st.points[below_ids[a]], st.points[below_ids[b]]))
        return fail(Property::BelowIncomparable, {below_ids[a], below_ids[b]}, "comparable below pair");
    }
  }

  // (4) a wedge missing the staircase holds at most 3 below points. The
  // minimal wedge over any below set is spanned by two of its members.
  for (std::size_t a : below_ids) {
    for (std::size_t b : below_ids) {
      const Wedge w{{st.points[b].x, st.points[a].y}};
      const bool hits_stairs =
          std::any_of(stairs.begin(), stairs.end(), [&](const auto &s) { return wedge_contains(w, s.p); });
      if (hits_stairs)
        continue;
      std::vector<std::size_t> inside;
      for (std::size_t c : below_ids) {
        if (wedge_contains(w, st.points[c]))
          inside.push_back(c);
      }
      if (inside.size() > 3)
        return fail(Property::BelowSparse, inside, "staircase-free wedge holds more than 3 below points");
    }
  }

  // (5) forest with at most one below point per tree
  DisjointSets dsu(n);
  for (const auto &e : st.graph.edges) {
    if (e.u >= n || e.v >= n)
      return fail(Property::Bookkeeping, {e.u, e.v}, "edge endpoint out of range");
    if (!dsu.unite(e.u, e.v))
      return fail(Property::Forest, {e.u, e.v}, "edge closes a cycle");
  }
  std::vector<std::size_t> below_in_tree(n, n);
  for (std::size_t i : below_ids) {
    const std::size_t root = dsu.find(i);
    if (below_in_tree[root] != n)
      return fail(Property::Forest, {below_in_tree[root], i}, "two below points share a tree");
    below_in_tree[root] = i;
  }

  return {};
}

// ---------------------------------------------------------------------------
// Coloring

Coloring two_color_forest(const ColorGraph &g) {
  std::vector<std::vector<std::size_t>> adj(g.n);
  for (const auto &e : g.edges) {
    if (e.u >= g.n || e.v >= g.n)
      throw std::out_of_range("two_color_forest: edge endpoint out of range");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  Coloring colors(g.n, Color::Red);
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> parent(g.n, g.n);
  for (std::size_t root = 0; root < g.n; ++root) {
    if (seen[root])
      continue;
    seen[root] = true;
    colors[root] = Color::Red;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      bool parent_edge_used = false;
      for (std::size_t v : adj[u]) {
        if (v == parent[u] && !parent_edge_used) {
          parent_edge_used = true;
          continue;
        }
        if (seen[v])
          throw std::logic_error("two_color_forest: graph has a cycle");
        seen[v] = true;
        parent[v] = u;
        colors[v] = opposite(colors[u]);
        queue.push_back(v);
      }
    }
  }
  return colors;
}

AlgoState replay_trace(const Trace &trace) {
  AlgoState st;
  std::size_t inserted = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto &step = trace.steps[i];
    if (step.point >= trace.points.size())
      throw std::runtime_error("replay_trace: step refers to an unknown point");

    const bool first_for_point = step.point == inserted;
    if (first_for_point) {
      st.points.push_back(trace.points[step.point]);
      st.graph.n = st.points.size();
      ++inserted;
      if (step.kind != StepKind::A)
        st.below.insert(step.point, trace.points[step.point]);
    } else if (step.point + 1 != inserted) {
      throw std::runtime_error("replay_trace: steps out of arrival order at step " + std::to_string(i));
    }

    for (std::size_t id : step.promoted) {
      if (!st.below.contains(id))
        throw std::runtime_error("replay_trace: promoted point is not below at step " + std::to_string(i));
      promote(st, id);
    }
    st.graph.edges.insert(st.graph.edges.end(), step.new_edges.begin(), step.new_edges.end());

    if (st.staircase.ids() != step.staircase || st.below.ids() != step.below)
      throw std::runtime_error("replay_trace: snapshot mismatch at step " + std::to_string(i));
  }
  if (inserted != trace.points.size())
    throw std::runtime_error("replay_trace: trace ends before every point was inserted");
  return st;
}

ColoringResult color_points(std::span<const Point3> ps, const ColorOptions &options) {
  const PointSet3 general = generalize(ps);
  const auto order = z_order(general);

  ColoringResult result;
  result.trace.original_index = order;
  AlgoState &st = result.final_state;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const Point3 &q = general[order[rank]];
    const Point2 p{q.x, q.y};
    result.trace.points.push_back(p);
    insert_point(st, p, &result.trace.steps);
    if (options.check_invariants) {
      if (auto report = check_properties(st); !report.ok()) {
        throw std::logic_error("color_points: property " + std::to_string(static_cast<int>(report.violated)) +
                               " violated after insertion " + std::to_string(rank) + ": " + report.detail);
      }
    }
  }

  result.graph.n = ps.size();
  for (const auto &e : st.graph.edges)
    result.graph.edges.push_back(Edge{order[e.u], order[e.v]});
  result.colors = two_color_forest(result.graph);
  return result;
}

} // namespace octcover
