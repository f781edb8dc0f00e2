// Inputs whose z-projection is an antichain, and the 10-point lower-bound
// construction.
//
// For an antichain every wedge trace is a run of x-consecutive points, so
// keeping colored points alternating with no two adjacent uncolored points
// makes every wedge with 4 points bichromatic at every prefix. The
// lower-bound hypergraph is a 10-vertex system of triples with no proper
// 2-coloring; realized as exact octant traces it shows that 3 points per
// octant never suffice, for octants and for triangle homothets alike.

#pragma once

#include "octcover/geom.hpp"
#include "octcover/verify.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace octcover {

inline constexpr std::size_t kAntichainThreshold = 4;

enum class PartialColor : std::uint8_t { Uncolored, Red, Blue };

using PartialColoring = std::vector<PartialColor>;

/// Input contains a comparable pair (first SW of second or vice versa).
class ComparablePairError : public std::invalid_argument {
public:
  ComparablePairError(std::size_t first, std::size_t second);

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

private:
  std::size_t first_;
  std::size_t second_;
};

struct IncomparableColoring {
  Coloring colors;                      // final, uncolored resolved to Red
  std::vector<PartialColoring> history; // history[t]: after t + 1 arrivals, length n
};

/// Throws ComparablePairError naming the first comparable pair (i < j).
void require_antichain(std::span<const Point2> seq);

/// Colors points arriving in the given order. Throws ComparablePairError
/// when the input is not an antichain, std::invalid_argument on duplicate
/// x coordinates.
IncomparableColoring color_incomparable(std::span<const Point2> seq);

/// Checks that among the first `prefix` points, in x order, no two adjacent
/// points are both uncolored and colored points alternate. Returns a
/// description of the first violation.
std::optional<std::string> check_partial_invariants(std::span<const Point2> seq, std::size_t prefix,
                                                    const PartialColoring &partial);

/// For every prefix t and every wedge holding at least `threshold` of the
/// first t points, both colors must occur among the colored ones as of
/// step t. Witness step is the prefix length.
VerifyReport verify_incomparable_prefixes(std::span<const Point2> seq, std::span<const PartialColoring> history,
                                          std::size_t threshold);

namespace reference {

VerifyReport verify_incomparable_prefixes(std::span<const Point2> seq, std::span<const PartialColoring> history,
                                          std::size_t threshold);

} // namespace reference

/// The 12 triples on 10 vertices, 0-indexed (vertex i is label i + 1).
Hypergraph3 lower_bound_hypergraph();

/// Places vertex i at z-rank i and searches x orders of an antichain
/// projection so that every triple of h is an exact octant trace. Each
/// search node places one more vertex; returns nothing once `budget` nodes
/// are spent. Coordinates are integers: x = position, y = n - 1 - position,
/// z = i.
std::optional<PointSet3> search_realization(const Hypergraph3 &h, std::uint64_t budget = 10'000'000);

struct LowerBoundFixture {
  Hypergraph3 hypergraph;
  std::optional<PointSet3> realization; // point i carries label i + 1
};

struct FixtureReport {
  bool ok = true;
  std::string failure;
  std::optional<std::array<std::size_t, 3>> missing_triple; // 0-indexed
};

/// Realization invariants: distinct coordinates, z-rank i for point i,
/// antichain projection, and every hypergraph triple an exact trace.
FixtureReport validate_realization(const LowerBoundFixture &fixture);

} // namespace octcover
