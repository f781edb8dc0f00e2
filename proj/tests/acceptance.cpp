// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "octcover/duality.hpp"
#include "octcover/special_cases.hpp"
#include "octcover/staircase.hpp"
#include "octcover/verify.hpp"
#include "support.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

using namespace octcover;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char *name, bool pass, const std::string &detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool is_forest(const ColorGraph &g) {
  std::vector<std::size_t> parent(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    parent[i] = i;
  const auto find = [&](std::size_t a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto &e : g.edges) {
    const auto a = find(e.u), b = find(e.v);
    if (a == b)
      return false;
    parent[a] = b;
  }
  return true;
}

struct Corpus {
  std::vector<PointSet3> sets;
};

Corpus coloring_corpus() {
  std::mt19937_64 rng(2024);
  Corpus c;
  constexpr std::size_t count = 210;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i * 149 / (count - 1);
    c.sets.push_back(testing::sample(rng, testing::Distribution(i % 3), n));
  }
  return c;
}

void coloring_criteria(const Corpus &corpus) {
  const auto start = Clock::now();
  std::size_t failed = 0, max_mono = 0, largest = 0;
  std::vector<ColoringResult> results;
  for (const auto &ps : corpus.sets) {
    auto result = color_points(ps, ColorOptions{false});
    const auto v = verify_coloring(ps, result.colors, kOctantThreshold);
    failed += !v.ok;
    max_mono = std::max(max_mono, v.max_monochromatic);
    largest = std::max(largest, ps.size());
    results.push_back(std::move(result));
  }
  const double t1 = seconds_since(start);
  report(1, "coloring suite", failed == 0 && corpus.sets.size() >= 200 && t1 < 60,
         fmt("%zu sets (n up to %zu, uniform/clustered/grid), %zu failures, %.2f s", corpus.sets.size(), largest,
             failed, t1));
  report(2, "monochromatic bound", max_mono <= 11, fmt("largest monochromatic octant trace %zu (bound 11)", max_mono));

  const auto start3 = Clock::now();
  std::size_t not_forest = 0, audit_failed = 0, replay_failed = 0;
  std::string first_problem;
  for (std::size_t i = 0; i < corpus.sets.size(); ++i) {
    const auto &r = results[i];
    if (!is_forest(r.graph))
      ++not_forest;
    try {
      const auto audited = color_points(corpus.sets[i], ColorOptions{true});
      if (audited.colors != r.colors)
        throw std::logic_error("audited run differs from the plain run");
    } catch (const std::logic_error &e) {
      if (first_problem.empty())
        first_problem = e.what();
      ++audit_failed;
    }
    try {
      if (!(replay_trace(r.trace) == r.final_state))
        ++replay_failed;
    } catch (const std::runtime_error &e) {
      if (first_problem.empty())
        first_problem = e.what();
      ++replay_failed;
    }
  }
  report(3, "structural suite", not_forest + audit_failed + replay_failed == 0,
         fmt("%zu runs: %zu non-forest, %zu invariant audits failed, %zu replay mismatches, %.2f s%s",
             corpus.sets.size(), not_forest, audit_failed, replay_failed, seconds_since(start3),
             first_problem.empty() ? "" : (" (" + first_problem + ")").c_str()));
}

void lower_bound_criterion() {
  const auto start = Clock::now();
  const auto h = lower_bound_hypergraph();
  const bool uncolorable = !exhaust_colorings(h);
  const double t = seconds_since(start);
  bool pass = uncolorable && h.n == 10 && h.triples.size() == 12 && t < 1.0;
  std::string detail = fmt("%zu colorings of %zu triples on %zu vertices, %s, %.4f s", std::size_t{1} << h.n,
                           h.triples.size(), h.n, uncolorable ? "none proper" : "a proper one exists", t);

  std::ifstream in(std::string(OCTCOVER_FIXTURE_DIR) + "/lower_bound_realization.json");
  if (in) {
    const auto doc = nlohmann::json::parse(in);
    PointSet3 ps;
    for (const auto &p : doc.at("points"))
      ps.push_back({p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()});
    const auto check = validate_realization(LowerBoundFixture{h, ps});
    pass = pass && check.ok;
    detail += check.ok ? "; fixture realizes all 12 triples as exact traces over an antichain projection"
                       : "; fixture invalid: " + check.failure;
  } else {
    detail += "; no realization fixture";
  }
  report(4, "lower bound", pass, detail);
}

void decomposition_criterion() {
  const auto start = Clock::now();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(12, 300);
  std::size_t failed = 0, candidates = 0, deepest = 0;
  constexpr int families = 60;
  for (int i = 0; i < families; ++i) {
    const std::size_t m = i == 0 ? 12 : i == 1 ? 300 : size(rng);
    const auto f = testing::random_octants(rng, m);
    const auto d = decompose_cover(f);
    const auto v = verify_decomposition(f, d, kOctantThreshold);
    failed += !v.ok;
    candidates += v.ranges;
    deepest = std::max(deepest, v.max_depth);
  }
  const double t = seconds_since(start);
  report(5, "octant cover decomposition", failed == 0 && t < 60,
         fmt("%d families (m 12..300), %zu candidate points, max depth %zu, %zu failures, %.2f s", families,
             candidates, deepest, failed, t));
}

void triangle_criterion() {
  const auto start = Clock::now();
  std::mt19937_64 rng(8);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto frame = testing::random_frame(rng);
    const auto h = testing::random_homothet(rng);
    const auto back = octant_to_homothet(frame, homothet_to_octant(frame, h));
    worst = std::max({worst, std::abs(back.scale - h.scale), std::abs(back.translation.x - h.translation.x),
                      std::abs(back.translation.y - h.translation.y)});
  }
  std::size_t failed = 0, shallow = 0;
  constexpr int families = 24;
  for (int i = 0; i < families; ++i) {
    const auto f = testing::random_homothets(rng, 30 + 10 * i);
    const auto d = decompose_triangle_cover(f);
    const auto v = verify_triangle_decomposition(f, d, kOctantThreshold);
    failed += !v.ok;
    shallow += v.max_depth < kOctantThreshold;
  }
  report(6, "triangle homothets", worst <= 1e-9 && failed == 0,
         fmt("10000 round trips, worst error %.3g; %d families, %zu failures (%zu never reach depth 12), %.2f s",
             worst, families, failed, shallow, seconds_since(start)));
}

void bottomless_criterion() {
  const auto start = Clock::now();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> size(1, 100);
  std::size_t invariant_failed = 0, oracle_failed = 0, max_mono = 0;
  constexpr int runs = 120;
  for (int i = 0; i < runs; ++i) {
    const auto seq = testing::random_antichain(rng, i == 0 ? 100 : size(rng));
    const auto c = color_incomparable(seq);
    for (std::size_t t = 1; t <= seq.size(); ++t)
      if (check_partial_invariants(seq, t, c.history[t - 1])) {
        ++invariant_failed;
        break;
      }
    const auto v = verify_incomparable_prefixes(seq, c.history, kAntichainThreshold);
    oracle_failed += !v.ok;
    max_mono = std::max(max_mono, v.max_monochromatic);
  }
  const double t = seconds_since(start);
  report(7, "bottomless rectangles", invariant_failed + oracle_failed == 0 && t < 10,
         fmt("%d antichains (n <= 100), %zu invariant failures, %zu prefix failures, largest monochromatic "
             "wedge %zu, %.2f s",
             runs, invariant_failed, oracle_failed, max_mono, t));
}

void oracle_audit_criterion() {
  const auto start = Clock::now();
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-0.1, 1.1);
  std::size_t missing = 0, probes = 0, triple_mismatch = 0;
  constexpr int sets = 20;
  for (int i = 0; i < sets; ++i) {
    const auto ps = testing::uniform_cube(rng, 30);
    const auto traces = enumerate_traces(ps);
    std::set<std::vector<std::size_t>> known;
    std::set<std::array<std::size_t, 3>> size3;
    for (const auto &t : traces.traces) {
      known.insert(t.members);
      if (t.members.size() == 3)
        size3.insert({t.members[0], t.members[1], t.members[2]});
    }
    for (int k = 0; k < 1000; ++k) {
      const Octant o{{u(rng), u(rng), u(rng)}};
      std::vector<std::size_t> members;
      for (std::size_t q = 0; q < ps.size(); ++q)
        if (octant_contains(o, ps[q]))
          members.push_back(q);
      if (members.empty())
        continue;
      ++probes;
      missing += !known.count(members);
    }
    const auto exact = exact_triples(ps);
    const std::set<std::array<std::size_t, 3>> got(exact.triples.begin(), exact.triples.end());
    triple_mismatch += got != size3;
  }
  report(8, "oracle self-audit", missing == 0 && triple_mismatch == 0,
         fmt("%d sets of 30 points, %zu nonempty random octants, %zu traces missing, %zu exact-triple mismatches, "
             "%.2f s",
             sets, probes, missing, triple_mismatch, seconds_since(start)));
}

} // namespace

int main() {
  const auto corpus = coloring_corpus();
  coloring_criteria(corpus);
  lower_bound_criterion();
  decomposition_criterion();
  triangle_criterion();
  bottomless_criterion();
  oracle_audit_criterion();
  return failures == 0 ? 0 : 1;
}
