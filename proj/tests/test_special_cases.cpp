#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octcover/special_cases.hpp"
#include "support.hpp"

#include <algorithm>

using namespace octcover;

namespace {

bool all_colored(const PartialColoring &c, std::size_t prefix) {
  for (std::size_t i = 0; i < prefix; ++i)
    if (c[i] == PartialColor::Uncolored)
      return false;
  return true;
}

Hypergraph3 without(Hypergraph3 h, std::array<std::size_t, 3> t) {
  h.triples.erase(std::remove(h.triples.begin(), h.triples.end(), t), h.triples.end());
  return h;
}

} // namespace

TEST_CASE("a single point ends up red") {
  const std::vector<Point2> seq{{0, 0}};
  const auto c = color_incomparable(seq);
  CHECK(c.colors == Coloring{Color::Red});
  CHECK(c.history[0][0] == PartialColor::Uncolored);
}

TEST_CASE("x-ordered arrivals are colored pairwise") {
  const std::vector<Point2> seq{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  const auto c = color_incomparable(seq);
  REQUIRE(c.history.size() == 4);
  CHECK(c.history[0][0] == PartialColor::Uncolored);
  CHECK(all_colored(c.history[1], 2));
  CHECK(c.history[1][0] != c.history[1][1]);
  CHECK(c.history[2][2] == PartialColor::Uncolored);
  CHECK(all_colored(c.history[3], 4));
  for (std::size_t t = 1; t <= 4; ++t)
    CHECK_FALSE(check_partial_invariants(seq, t, c.history[t - 1]));
  CHECK(verify_incomparable_prefixes(seq, c.history, kAntichainThreshold).ok);
  CHECK(testing::count_color(c.colors, Color::Red) == 2);
}

TEST_CASE("a point between two colored points stays uncolored") {
  const std::vector<Point2> seq{{0, 3}, {3, 0}, {1, 2}};
  const auto c = color_incomparable(seq);
  CHECK(c.history[1][0] != PartialColor::Uncolored);
  CHECK(c.history[2][2] == PartialColor::Uncolored);
}

TEST_CASE("comparable input is rejected with the offending pair") {
  const std::vector<Point2> seq{{0, 3}, {1, 2}, {2, 2.5}};
  try {
    color_incomparable(seq);
    FAIL("expected ComparablePairError");
  } catch (const ComparablePairError &e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
  }
}

TEST_CASE("prefix verifier examples") {
  const std::vector<Point2> three{{0, 2}, {1, 1}, {2, 0}};
  const std::vector<PartialColoring> red3(3, PartialColoring(3, PartialColor::Red));
  CHECK(verify_incomparable_prefixes(three, red3, 4).ok);

  const std::vector<Point2> four{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  std::vector<PartialColoring> red4;
  for (std::size_t t = 1; t <= 4; ++t) {
    PartialColoring p(4, PartialColor::Uncolored);
    std::fill(p.begin(), p.begin() + t, PartialColor::Red);
    red4.push_back(p);
  }
  const auto r = verify_incomparable_prefixes(four, red4, 4);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->step == 4);
  CHECK(r.witness->members.size() == 4);
  const auto s = reference::verify_incomparable_prefixes(four, red4, 4);
  CHECK_FALSE(s.ok);
}

TEST_CASE("partial invariants catch violations") {
  const std::vector<Point2> seq{{0, 3}, {1, 2}, {2, 1}};
  CHECK(check_partial_invariants(seq, 2, {PartialColor::Uncolored, PartialColor::Uncolored, PartialColor::Uncolored}));
  CHECK(check_partial_invariants(seq, 3, {PartialColor::Red, PartialColor::Uncolored, PartialColor::Red}));
  CHECK_FALSE(check_partial_invariants(seq, 3, {PartialColor::Red, PartialColor::Uncolored, PartialColor::Blue}));
  CHECK(check_partial_invariants(seq, 1, {PartialColor::Red, PartialColor::Blue, PartialColor::Uncolored}));
}

TEST_CASE("property: random antichains keep both invariants and pass the prefix oracle") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 150; ++round) {
    const auto seq = testing::random_antichain(rng, 1 + round % 100);
    const auto c = color_incomparable(seq);
    for (std::size_t t = 1; t <= seq.size(); ++t) {
      const auto bad = check_partial_invariants(seq, t, c.history[t - 1]);
      INFO(bad.value_or(""));
      REQUIRE_FALSE(bad);
    }
    const auto a = verify_incomparable_prefixes(seq, c.history, kAntichainThreshold);
    CHECK(a.ok);
    CHECK(a.max_monochromatic <= 3);
    if (round % 5 == 0) {
      const auto b = reference::verify_incomparable_prefixes(seq, c.history, kAntichainThreshold);
      CHECK(a.ok == b.ok);
      CHECK(a.ranges == b.ranges);
      CHECK(a.max_monochromatic == b.max_monochromatic);
    }
  }
}

TEST_CASE("property: prefix verifiers agree on arbitrary colorings") {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int round = 0; round < 60; ++round) {
    const auto seq = testing::random_antichain(rng, 1 + round % 25);
    std::vector<PartialColoring> history;
    PartialColoring p(seq.size(), PartialColor::Uncolored);
    for (std::size_t t = 0; t < seq.size(); ++t) {
      p[t] = PartialColor(pick(rng));
      history.push_back(p);
    }
    const std::size_t threshold = 2 + round % 4;
    const auto a = verify_incomparable_prefixes(seq, history, threshold);
    const auto b = reference::verify_incomparable_prefixes(seq, history, threshold);
    CHECK(a.ok == b.ok);
    CHECK(a.ranges == b.ranges);
    CHECK(a.max_monochromatic == b.max_monochromatic);
    if (a.witness && b.witness) {
      CHECK(a.witness->step == b.witness->step);
      CHECK(a.witness->members == b.witness->members);
    }
  }
}

TEST_CASE("lower-bound hypergraph") {
  const auto h = lower_bound_hypergraph();
  CHECK(h.n == 10);
  CHECK(h.triples.size() == 12);
  CHECK_FALSE(exhaust_colorings(h));
  const auto relaxed = without(h, {2, 3, 4});
  REQUIRE(relaxed.triples.size() == 11);
  CHECK(exhaust_colorings(relaxed));
}

TEST_CASE("search_realization") {
  const auto single = search_realization(Hypergraph3{3, {{0, 1, 2}}});
  REQUIRE(single);
  CHECK(exact_triples(*single).triples == std::vector<std::array<std::size_t, 3>>{{0, 1, 2}});

  const Hypergraph3 impossible{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  CHECK_FALSE(search_realization(impossible));
  CHECK_FALSE(search_realization(lower_bound_hypergraph(), 5));

  const auto found = search_realization(lower_bound_hypergraph());
  REQUIRE(found);
  const LowerBoundFixture fixture{lower_bound_hypergraph(), found};
  const auto report = validate_realization(fixture);
  INFO(report.failure);
  CHECK(report.ok);
}

TEST_CASE("every 2-coloring of the realization has a monochromatic exact triple") {
  const auto ps = search_realization(lower_bound_hypergraph());
  REQUIRE(ps);
  const auto exact = exact_triples(*ps);
  CHECK_FALSE(exhaust_colorings(exact));
}

TEST_CASE("validate_realization reports a missing triple") {
  auto ps = *search_realization(lower_bound_hypergraph());
  // Swapping two x positions keeps the antichain but breaks consecutiveness.
  std::size_t a = 0, b = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].x == 0)
      a = i;
    if (ps[i].x == 9)
      b = i;
  }
  std::swap(ps[a].x, ps[b].x);
  std::swap(ps[a].y, ps[b].y);
  const auto report = validate_realization(LowerBoundFixture{lower_bound_hypergraph(), ps});
  CHECK_FALSE(report.ok);
  CHECK(report.missing_triple);
}
