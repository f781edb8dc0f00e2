// Staircase sweep that 2-colors a 3D point set so that every closed octant
// holding at least 12 points sees both colors.
//
// Points are processed in increasing z. Each arrival either hangs off the
// staircase (step a) or lands below it, after which comparable below pairs
// (step b) and crowded below windows (step c) are promoted onto the
// staircase, each promotion adding graph edges. The edge set stays a forest
// and any proper 2-coloring of it is the answer.

#pragma once

#include "octcover/geom.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace octcover {

/// Guarantee of color_points: every octant with this many points is bichromatic.
inline constexpr std::size_t kOctantThreshold = 12;

/// Points kept sorted by strictly increasing x.
class XOrderedPoints {
public:
  struct Entry {
    std::size_t id = 0;
    Point2 p;

    friend bool operator==(const Entry &, const Entry &) = default;
  };

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry &operator[](std::size_t i) const { return entries_[i]; }

  std::vector<std::size_t> ids() const;
  bool contains(std::size_t id) const;

  void insert(std::size_t id, Point2 p);
  void erase(std::size_t id);

  /// Entry with the largest x strictly below `x`.
  std::optional<Entry> predecessor(double x) const;

  /// Some entry lies in the closed wedge. Valid only for antichains.
  bool wedge_hits(const Wedge &w) const;

  /// Removes every entry strictly NE of p and returns their ids. The
  /// removed entries form one contiguous run when the set is an antichain.
  std::vector<std::size_t> remove_ne_of(Point2 p);

  friend bool operator==(const XOrderedPoints &, const XOrderedPoints &) = default;

private:
  std::vector<Entry> entries_;
};

using Staircase = XOrderedPoints;

/// Some staircase point is strictly SW of p. O(log |s|).
bool is_above(const Staircase &s, Point2 p);

enum class StepKind : char { A = 'a', B = 'b', C = 'c', D = 'd' };

struct TraceStep {
  std::size_t point = 0; // arrival rank of the point being inserted
  StepKind kind = StepKind::D;
  std::vector<Edge> new_edges;
  std::vector<std::size_t> promoted;  // moved from below onto the staircase
  std::vector<std::size_t> staircase; // ids after the step, x order
  std::vector<std::size_t> below;     // ids after the step, x order

  friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

struct Trace {
  std::vector<Point2> points;              // arrival order
  std::vector<std::size_t> original_index; // arrival rank -> input index
  std::vector<TraceStep> steps;

  friend bool operator==(const Trace &, const Trace &) = default;
};

struct StepCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend bool operator==(const StepCounts &, const StepCounts &) = default;
};

StepCounts count_steps(const Trace &trace);

/// Sweep state over the processed prefix. Ids are arrival ranks.
struct AlgoState {
  std::vector<Point2> points;
  Staircase staircase;
  XOrderedPoints below;
  ColorGraph graph;

  friend bool operator==(const AlgoState &, const AlgoState &) = default;
};

/// Processes the next point in z order. `p` must differ in x and in y from
/// every processed point (std::invalid_argument otherwise). Steps taken are
/// appended to `steps` when given.
void insert_point(AlgoState &state, Point2 p, std::vector<TraceStep> *steps = nullptr);

/// Closest comparable below pair (p, q) with q SW of p, chosen by scanning
/// below in decreasing x for the first p dominating something, then the
/// largest-x q under it.
std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(const AlgoState &state);

/// Leftmost window of 4 x-consecutive below points whose spanning wedge
/// holds no staircase point. Expects below to be an antichain.
std::optional<std::array<std::size_t, 4>> find_quadruple(const AlgoState &state);

enum class Property {
  None = 0,
  AboveGood = 1,           // points above the staircase are good
  StaircaseAlmostGood = 2, // staircase points are almost good
  BelowIncomparable = 3,   // below points are pairwise incomparable
  BelowSparse = 4,         // a staircase-free wedge holds at most 3 below points
  Forest = 5,              // acyclic, at most one below point per tree
  Bookkeeping = 6,         // stored below/staircase sets are consistent
};

struct PropertyReport {
  Property violated = Property::None;
  std::vector<std::size_t> witness;
  std::string detail;

  bool ok() const { return violated == Property::None; }
};

/// Brute-force audit of the sweep invariants, recomputed from scratch.
///
/// For a staircase point with a missing neighbor the corresponding side of
/// its wedge is unbounded; only interior staircase points carry the
/// two-neighbor wedge that the 12-point bound relies on.
PropertyReport check_properties(const AlgoState &state);

/// Proper 2-coloring of a forest: the lowest index of every component is
/// Red. Throws std::logic_error on a cycle.
Coloring two_color_forest(const ColorGraph &g);

/// Re-applies the recorded actions and checks every snapshot. Throws
/// std::runtime_error on divergence.
AlgoState replay_trace(const Trace &trace);

struct ColorOptions {
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
};

struct ColoringResult {
  Coloring colors;  // by input index
  ColorGraph graph; // by input index
  Trace trace;
  AlgoState final_state; // by arrival rank
};

/// Colors ps (generalized internally). With check_invariants, every
/// insertion is followed by check_properties and a failure throws
/// std::logic_error.
ColoringResult color_points(std::span<const Point3> ps, const ColorOptions &options = {});

} // namespace octcover
