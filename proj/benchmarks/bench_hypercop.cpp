#include <benchmark/benchmark.h>

#include "hypercop/dismantle.hpp"
#include "hypercop/game.hpp"
#include "hypercop/generators.hpp"
#include "hypercop/metric.hpp"

using namespace hypercop;

namespace {

Graph gnp(std::int64_t n) {
  // Average degree around 20, as in the acceptance guardrail.
  return generate({Family::RandomGnp, {std::uint64_t(n), 20, std::uint64_t(n - 1)}, 7}).graph;
}

void BM_Distances(benchmark::State& state) {
  Graph g = gnp(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g, 1));
}
BENCHMARK(BM_Distances)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  Graph g = gnp(state.range(0));
  DistanceMatrix dm = all_pairs_distances(g);
  SieveOptions opts;
  opts.record_witnesses = false;
  for (auto _ : state) {
    auto r = sieve_approx(g, dm, opts);
    state.counters["alpha"] = r.alpha;
    state.counters["pops"] = static_cast<double>(r.stats.pops);
  }
}
BENCHMARK(BM_Sieve)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_SieveLocalized(benchmark::State& state) {
  Graph g = gnp(state.range(0));
  for (auto _ : state) {
    auto r = sieve_approx_localized(g);
    state.counters["alpha"] = r.alpha;
    state.counters["scanned"] = static_cast<double>(r.stats.scanned);
  }
}
BENCHMARK(BM_SieveLocalized)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_SieveGrid(benchmark::State& state) {
  auto side = static_cast<std::uint64_t>(state.range(0));
  Graph g = generate({Family::Grid, {side, side}, {}}).graph;
  DistanceMatrix dm = all_pairs_distances(g);
  for (auto _ : state) {
    auto r = sieve_approx(g, dm);
    state.counters["alpha"] = r.alpha;
  }
}
BENCHMARK(BM_SieveGrid)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Exact(benchmark::State& state) {
  Graph g = generate({Family::SubdividedGrid, {std::uint64_t(state.range(0))}, {}}).graph;
  DistanceMatrix dm = all_pairs_distances(g);
  for (auto _ : state) benchmark::DoNotOptimize(exact_hyperbolicity(g, dm, 1));
}
BENCHMARK(BM_Exact)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SolveGame(benchmark::State& state) {
  Graph g = generate({Family::Grid, {std::uint64_t(state.range(0)), std::uint64_t(state.range(0))}, {}}).graph;
  DistanceMatrix dm = all_pairs_distances(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_game(g, dm, 2, 2).copwin);
}
BENCHMARK(BM_SolveGame)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
