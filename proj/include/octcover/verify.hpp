// Exhaustive oracles that certify colorings and decompositions.
//
// The functions in namespace octcover are the production kernels: rank-grid
// sweeps, parallelized with OpenMP over independent levels, that visit every
// candidate range exactly. The functions in octcover::reference are plain
// serial brute force over the same candidate ranges; they are kept for
// differential testing and benchmarking and are deliberately naive.

#pragma once

#include "octcover/duality.hpp"
#include "octcover/geom.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace octcover {

struct OracleLimits {
  std::size_t max_points = 400;
};

/// Closed octant with apex = componentwise max of its members.
struct OctantTrace {
  Point3 apex;
  std::vector<std::size_t> members; // ascending

  friend bool operator==(const OctantTrace &, const OctantTrace &) = default;
};

/// Every distinct non-empty octant trace of a point set, once each, ordered
/// by the (x, y, z) ranks of the apex.
struct TraceSet {
  std::vector<OctantTrace> traces;
};

struct Hypergraph3 {
  std::size_t n = 0;
  std::vector<std::array<std::size_t, 3>> triples;

  friend bool operator==(const Hypergraph3 &, const Hypergraph3 &) = default;
};

struct VerifyWitness {
  std::vector<double> location;     // apex of the offending range, or the deep point
  std::vector<std::size_t> members; // points (or family members) involved
  std::size_t red = 0;
  std::size_t blue = 0;
  std::size_t step = 0; // prefix length, for prefix oracles
};

struct VerifyReport {
  bool ok = true;
  std::optional<VerifyWitness> witness;
  std::size_t ranges = 0;            // distinct traces or candidate points examined
  std::size_t max_monochromatic = 0; // largest single-colored trace (or depth)
  std::size_t max_depth = 0;         // decompositions: largest depth seen
};

TraceSet enumerate_traces(std::span<const Point3> ps, const OracleLimits &limits = {});

/// ok iff every octant holding at least `threshold` points sees both colors.
/// Ties in the coordinates are allowed. `ranges` counts distinct non-empty
/// traces.
VerifyReport verify_coloring(std::span<const Point3> ps, std::span<const Color> colors, std::size_t threshold,
                             const OracleLimits &limits = {});

/// ok iff every point covered by at least `threshold` members is covered by
/// both classes. Candidate points sit just below every combination of apex
/// coordinates, offset per axis by half the smallest positive gap.
VerifyReport verify_decomposition(std::span<const Octant> family, const Decomposition &d, std::size_t threshold,
                                  const OracleLimits &limits = {});

/// Same guarantee for homothets of a triangle, checked in the triangle's own
/// plane. Each family member is {q : n_k . q <= d_k, k = 0..2} for the
/// outward edge normals n_k of the base triangle, which sum to zero; the
/// oracle enumerates every feasible combination of slots between the d_k
/// values, which realizes every covered subset.
VerifyReport verify_triangle_decomposition(const HomothetFamily &family, const Decomposition &d,
                                           std::size_t threshold, const OracleLimits &limits = {});

/// Lowest-mask 2-coloring (bit i set = Blue) with no monochromatic triple.
/// Throws std::length_error for n > 25.
std::optional<Coloring> exhaust_colorings(const Hypergraph3 &h);

/// Triples whose minimal closed octant holds no fourth point.
Hypergraph3 exact_triples(std::span<const Point3> ps, const OracleLimits &limits = {});

/// Throws std::invalid_argument unless d partitions 0..n-1.
void check_partition(const Decomposition &d, std::size_t n);

namespace reference {

TraceSet enumerate_traces(std::span<const Point3> ps);

VerifyReport verify_coloring(std::span<const Point3> ps, std::span<const Color> colors, std::size_t threshold);

VerifyReport verify_decomposition(std::span<const Octant> family, const Decomposition &d, std::size_t threshold);

/// Probes every vertex of the arrangement of triangle sides together with
/// the faces and edges around it, using barycentric containment.
VerifyReport verify_triangle_decomposition(const HomothetFamily &family, const Decomposition &d,
                                           std::size_t threshold);

std::optional<Coloring> exhaust_colorings(const Hypergraph3 &h);

} // namespace reference

} // namespace octcover
