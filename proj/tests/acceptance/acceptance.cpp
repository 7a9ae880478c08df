// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hypercop/dismantle.hpp"
#include "hypercop/filling.hpp"
#include "hypercop/game.hpp"
#include "hypercop/metric.hpp"
#include "hypercop/random.hpp"

using namespace hypercop;

namespace {

// Pinned limits. Hyperbolicity values are exact half-integers, so every
// numeric comparison below has zero tolerance.
constexpr double kEquivalenceSeconds = 300.0;
constexpr double kGridSeconds = 60.0;
constexpr double kSieveSeconds = 10.0;
constexpr std::size_t kMinEquivalenceGraphs = 200;
constexpr std::size_t kEquivalenceMaxN = 10;
constexpr std::size_t kExactMaxN = 60;
constexpr std::size_t kBasePointMaxN = 40;
constexpr std::size_t kLoopsPerOrder = 20;
constexpr std::size_t kMaxLoopLength = 40;
constexpr std::uint64_t kGuardrailN = 2000;
constexpr std::uint64_t kGuardrailPNum = 1, kGuardrailPDen = 100;
constexpr std::uint64_t kGuardrailSeed = 2024;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Analysed {
  const corpus::Entry* entry;
  DistanceMatrix dm;
  HalfInt delta;
};

/// Corpus graphs small enough for the exact oracle, with their exact value.
std::vector<Analysed> analyse(const std::vector<corpus::Entry>& graphs) {
  std::vector<Analysed> out;
  for (const auto& e : graphs) {
    if (e.graph().size() > kExactMaxN) continue;
    auto dm = all_pairs_distances(e.graph());
    HalfInt delta = exact_hyperbolicity(e.graph(), dm);
    out.push_back({&e, std::move(dm), delta});
  }
  return out;
}

std::string str(HalfInt h) { return h.to_string(); }

Outcome equivalence() {
  static constexpr std::uint32_t kCells[][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  auto start = Clock::now();
  Outcome o;
  std::size_t graphs = 0, cells = 0, agree = 0;
  for (const auto& e : corpus::small()) {
    if (e.graph().size() > kEquivalenceMaxN) continue;
    ++graphs;
    auto dm = all_pairs_distances(e.graph());
    for (const auto& c : kCells) {
      ++cells;
      bool dismantlable = greedy_dismantling(e.graph(), dm, c[0], c[1], false).has_value();
      bool copwin = solve_game(e.graph(), dm, c[0], c[1]).copwin;
      if (dismantlable == copwin) {
        ++agree;
      } else {
        o.fail(e.name + " (s,s')=(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")");
      }
    }
  }
  double t = seconds_since(start);
  if (graphs < kMinEquivalenceGraphs) o.fail("only " + std::to_string(graphs) + " graphs");
  if (t > kEquivalenceSeconds) o.fail("took " + std::to_string(t) + " s");
  o.detail = std::to_string(agree) + "/" + std::to_string(cells) + " cells agree over " + std::to_string(graphs) +
             " graphs, " + std::to_string(t) + " s (limit " + std::to_string(kEquivalenceSeconds) + " s)";
  return o;
}

Outcome grids() {
  Outcome o;
  for (std::uint64_t side : {2u, 3u}) {
    auto gg = generate({Family::SubdividedGrid, {side}, {}});
    auto dm = all_pairs_distances(gg.graph);
    const HalfInt want = HalfInt::integer(static_cast<std::int64_t>(side * side));
    HalfInt corners = four_point_delta(dm, gg.vertex("a"), gg.vertex("b"), gg.vertex("c"), gg.vertex("d"));
    auto start = Clock::now();
    HalfInt delta = exact_hyperbolicity(gg.graph, dm);
    double t = seconds_since(start);
    if (corners != want) o.fail("N=" + std::to_string(side) + " corner value " + str(corners));
    if (delta < want) o.fail("N=" + std::to_string(side) + " exact value " + str(delta));
    if (t > kGridSeconds) o.fail("N=" + std::to_string(side) + " exact took " + std::to_string(t) + " s");
    o.detail += "N=" + std::to_string(side) + ": n=" + std::to_string(gg.graph.size()) + " corners=" + str(corners) +
                " delta*=" + str(delta) + " (" + std::to_string(t) + " s); ";
  }
  return o;
}

Outcome sandwich(const std::vector<Analysed>& graphs) {
  Outcome o;
  std::size_t checked = 0, blocks = 0;
  for (const auto& a : graphs) {
    const Graph& g = a.entry->graph();
    auto r = sieve_approx(g, a.dm);
    ++checked;
    // The sieve expects block graphs (delta* = 0) to be answered by the
    // pretest; for them alpha = 1 and only the upper side can be strict.
    const bool block = is_block_graph(g);
    blocks += block;
    // (alpha - 1)/2 < delta*  <=>  alpha - 1 < 2 delta*
    bool lower_ok = block ? r.alpha == 1 : static_cast<std::int64_t>(r.alpha) - 1 < a.delta.twice();
    bool upper_ok = a.delta <= HalfInt::integer(784 * std::int64_t{r.alpha}) + kHalf && a.delta <= r.upper;
    bool reported_ok = r.lower <= a.delta;
    std::uint32_t least = 1;
    while (std::holds_alternative<Algorithm1No>(algorithm1(g, a.dm, least))) ++least;
    if (!lower_ok || !upper_ok || !reported_ok || least != r.alpha) {
      o.fail(a.entry->name + ": alpha=" + std::to_string(r.alpha) + " least YES=" + std::to_string(least) +
             " delta*=" + str(a.delta));
    }
  }
  o.detail = std::to_string(checked) + " graphs with n <= " + std::to_string(kExactMaxN) + " (" +
             std::to_string(blocks) + " block graphs, answered by the pretest)";
  return o;
}

Outcome wm_sandwich(const std::vector<Analysed>& graphs) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& a : graphs) {
    const Graph& g = a.entry->graph();
    if (!is_weakly_modular(g, a.dm).weakly_modular) continue;
    auto r = sieve_approx_wm(g, a.dm);
    ++checked;
    bool ok = HalfInt::from_twice(r.alpha) <= a.delta &&
              a.delta <= HalfInt::integer(368 * (std::int64_t{r.alpha} + 1)) && r.lower <= a.delta &&
              a.delta <= r.upper;
    if (!ok) o.fail(a.entry->name + ": alpha=" + std::to_string(r.alpha) + " delta*=" + str(a.delta));
  }
  if (checked == 0) o.fail("no weakly modular graphs");
  o.detail = std::to_string(checked) + " weakly modular graphs";
  return o;
}

Loop random_loop(const Graph& g, const DistanceMatrix& dm, Rng& rng) {
  const std::size_t len = 1 + uniform_below(rng, kMaxLoopLength);
  const auto start = static_cast<Vertex>(uniform_below(rng, g.size()));
  Loop loop{{start}};
  Vertex cur = start;
  while (loop.vertices.size() < len) {
    const std::size_t left = len - loop.vertices.size();
    std::vector<Vertex> options;
    if (dm(cur, start) <= left) options.push_back(cur);
    for (Vertex w : g.neighbors(cur))
      if (dm(w, start) <= left) options.push_back(w);
    cur = options[uniform_below(rng, options.size())];
    loop.vertices.push_back(cur);
  }
  return loop;
}

Outcome fillings(const std::vector<Analysed>& graphs) {
  static constexpr std::uint32_t kCells[][2] = {{2, 1}, {3, 1}, {3, 2}, {4, 3}};
  Outcome o;
  Rng rng(kGuardrailSeed);
  std::size_t orders = 0, loops = 0, passed = 0;
  for (const auto& a : graphs) {
    const Graph& g = a.entry->graph();
    std::vector<EliminationOrder> ords;
    for (const auto& c : kCells) {
      if (auto ord = greedy_dismantling(g, a.dm, c[0], c[1], true)) ords.push_back(std::move(*ord));
    }
    // A breadth-first order always gives one more star order with s' < s.
    const auto r = static_cast<std::uint32_t>(a.delta.twice()) + 1;
    auto bfs = bfs_ancestor_order(bfs_order(g, 0), r, 2 * r, r + static_cast<std::uint32_t>(a.delta.twice()), true);
    if (!verify_order(g, a.dm, bfs)) ords.push_back(std::move(bfs));
    for (const auto& ord : ords) {
      ++orders;
      const std::uint64_t k_den = 2 * std::uint64_t{ord.s - ord.s_prime};
      for (std::size_t k = 0; k < kLoopsPerOrder; ++k) {
        Loop loop = random_loop(g, a.dm, rng);
        ++loops;
        try {
          Filling f = build_filling(g, a.dm, loop, ord);
          auto rep = validate_filling(g, a.dm, loop, f, ord.s + ord.s_prime, 1, k_den);
          const std::size_t bound = (loop.length() + k_den - 1) / k_den;
          if (rep.ok() && f.faces.size() <= bound) {
            ++passed;
          } else {
            o.fail(a.entry->name + ": " + (rep.failures.empty() ? "area" : rep.failures.front()));
          }
        } catch (const std::exception& e) {
          o.fail(a.entry->name + ": " + e.what());
        }
      }
    }
  }
  o.detail = std::to_string(passed) + "/" + std::to_string(loops) + " loops over " + std::to_string(orders) +
             " star orders";
  return o;
}

Outcome bfs_orders(const std::vector<Analysed>& graphs) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& a : graphs) {
    const Graph& g = a.entry->graph();
    auto bfs = bfs_order(g, 0);
    const auto two_delta = static_cast<std::uint32_t>(a.delta.twice());
    const auto first = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(a.delta.ceil()));
    for (std::uint32_t r = first; r <= a.dm.diameter(); ++r) {
      ++checked;
      if (auto bad = verify_order(g, a.dm, bfs_ancestor_order(bfs, r, 2 * r, r + two_delta, true))) {
        o.fail(a.entry->name + " r=" + std::to_string(r) + ": " + bad->reason);
      }
    }
  }
  o.detail = std::to_string(checked) + " (graph, r) pairs";
  return o;
}

Outcome thinness(const std::vector<Analysed>& graphs) {
  Outcome o;
  for (const auto& a : graphs) {
    const Graph& g = a.entry->graph();
    auto nu = interval_thinness(g, a.dm);
    if (HalfInt::integer(nu) > a.delta * 2) o.fail(a.entry->name + ": nu=" + std::to_string(nu));
    if (is_block_graph(g) != (a.delta == HalfInt{})) o.fail(a.entry->name + ": block-graph test disagrees");
  }
  o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

Outcome wm_bounds(const std::vector<Analysed>& graphs) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& a : graphs) {
    const Graph& g = a.entry->graph();
    if (!is_weakly_modular(g, a.dm).weakly_modular) continue;
    auto census = metric_triangle_census(g, a.dm);
    auto nu = interval_thinness(g, a.dm);
    for (std::uint32_t s = 2; s <= 4; ++s) {
      if (!greedy_dismantling(g, a.dm, s, s - 1, false)) continue;
      ++checked;
      if (census.mu_max > 6 * s || nu > 4 * s + census.mu_max) {
        o.fail(a.entry->name + " s=" + std::to_string(s) + ": mu=" + std::to_string(census.mu_max) +
               " nu=" + std::to_string(nu));
      }
    }
  }
  if (checked == 0) o.fail("no (s,s-1)-dismantlable weakly modular graphs");
  o.detail = std::to_string(checked) + " (graph, s) pairs";
  return o;
}

Outcome base_points(const std::vector<Analysed>& graphs) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& a : graphs) {
    const Graph& g = a.entry->graph();
    if (g.size() > kBasePointMaxN) continue;
    for (Vertex u = 0; u < g.size(); ++u) {
      ++checked;
      HalfInt b = base_point_delta(g, a.dm, u);
      if (!(b <= a.delta && a.delta <= b * 2)) o.fail(a.entry->name + " u=" + std::to_string(u));
    }
  }
  o.detail = std::to_string(checked) + " base points";
  return o;
}

Outcome guardrail() {
  Outcome o;
  auto g = generate({Family::RandomGnp, {kGuardrailN, kGuardrailPNum, kGuardrailPDen}, kGuardrailSeed}).graph;
  auto dm = all_pairs_distances(g);
  auto start = Clock::now();
  auto r = sieve_approx(g, dm, {false, false});
  double t = seconds_since(start);
  const std::uint64_t n2 = kGuardrailN * kGuardrailN;
  if (t >= kSieveSeconds) o.fail("sieve took " + std::to_string(t) + " s");
  if (r.stats.pops > n2) o.fail("pops " + std::to_string(r.stats.pops) + " > n^2");
  o.detail = "n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) + " alpha=" +
             std::to_string(r.alpha) + " pops=" + std::to_string(r.stats.pops) + " (n^2=" + std::to_string(n2) +
             ") " + std::to_string(t) + " s (limit " + std::to_string(kSieveSeconds) + " s)";
  return o;
}

}  // namespace

int main() {
  auto graphs = corpus::all();
  std::vector<Analysed> exact = analyse(graphs);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cop-win iff dismantlable", equivalence},
      {"subdivided grid four-point values", grids},
      {"sieve sandwich and least YES", [&] { return sandwich(exact); }},
      {"weakly modular sieve sandwich", [&] { return wm_sandwich(exact); }},
      {"fillings of random loops", [&] { return fillings(exact); }},
      {"breadth-first star orders", [&] { return bfs_orders(exact); }},
      {"thin intervals and block graphs", [&] { return thinness(exact); }},
      {"weakly modular triangle and interval bounds", [&] { return wm_bounds(exact); }},
      {"base-point 2-approximation", [&] { return base_points(exact); }},
      {"sieve performance guardrail", guardrail},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
