#include <algorithm>
#include <cstdlib>
#include <memory>

#include "hypercop/dismantle.hpp"
#include "hypercop/error.hpp"

namespace hypercop {

namespace {

/// Shape of one sieve: which ball must fit in which, and how anchors move.
struct SieveRule {
  std::uint32_t first_alpha;
  std::uint32_t (*reach)(std::uint32_t alpha);   // radius around v
  std::uint32_t (*cover)(std::uint32_t alpha);   // radius around the anchor
  std::uint32_t (*witness_r)(std::uint32_t alpha);
  std::uint32_t initial_lift;                    // parent steps from v to the first anchor
  std::uint32_t lift_per_round;                  // parent steps per alpha increment
};

/// n stacks, each holding all vertices by increasing distance to its owner
/// (ties by id). A stack is a row of `items` plus a head offset; running off
/// the end of the row plays the role of the infinite-distance sentinel.
SieveResult run_matrix_sieve(const Graph& g, const DistanceMatrix& dm, const SieveRule& rule,
                             const SieveOptions& opts) {
  const std::size_t n = g.size();
  SieveResult out;
  if (n == 0) {
    out.alpha = rule.first_alpha;
    return out;
  }
  BfsOrder bfs = bfs_order(g, 0);

  std::vector<Vertex> items(n * n);
  std::vector<std::uint32_t> head(n, 0);
  {
    const std::uint32_t max_d = dm.diameter();
    std::vector<std::uint32_t> count(max_d + 2);
    for (Vertex v = 0; v < n; ++v) {
      auto row = dm.row(v);
      std::fill(count.begin(), count.end(), 0);
      for (Vertex u = 0; u < n; ++u) ++count[row[u] + 1];
      for (std::size_t d = 1; d < count.size(); ++d) count[d] += count[d - 1];
      Vertex* dst = items.data() + std::size_t{v} * n;
      for (Vertex u = 0; u < n; ++u) dst[count[row[u]]++] = u;
    }
  }

  std::vector<Vertex> anchor(n);
  for (Vertex v = 0; v < n; ++v) anchor[v] = bfs.ancestor(v, rule.initial_lift);

  const std::uint32_t cap = static_cast<std::uint32_t>(n) + rule.first_alpha + 1;
  for (std::uint32_t alpha = rule.first_alpha;; ++alpha) {
    if (alpha > cap) throw InternalError("sieve did not terminate within n rounds");
    if (alpha != rule.first_alpha) {
      for (Vertex v = 0; v < n; ++v) anchor[v] = bfs.ancestor(anchor[v], rule.lift_per_round);
    }
    ++out.stats.iterations;
    const std::uint32_t reach = rule.reach(alpha), cover = rule.cover(alpha);
    bool done = true;
    for (Vertex v : bfs.order) {
      const Vertex* stack = items.data() + std::size_t{v} * n;
      const Vertex f = anchor[v];
      std::uint32_t& h = head[v];
      while (h < n) {
        Vertex u = stack[h];
        if (dm(u, v) > reach) break;
        if (bfs.rank[u] <= bfs.rank[v] && dm(u, f) > cover) break;
        ++h;
        ++out.stats.pops;
      }
      if (h < n && dm(stack[h], v) <= reach) {
        if (done && opts.record_witnesses) {
          out.witness_trace.push_back(NonHypWitness{bfs.root, v, stack[h], f, rule.witness_r(alpha)});
        }
        done = false;
      }
    }
    if (opts.check_monotone) {
      for (Vertex v = 0; v < n; ++v) {
        const Vertex* stack = items.data() + std::size_t{v} * n;
        for (std::uint32_t i = 0; i < head[v]; ++i) {
          Vertex u = stack[i];
          if (bfs.rank[u] <= bfs.rank[v] && dm(u, v) <= reach && dm(u, anchor[v]) > cover) {
            throw InternalError("popped vertex became a witness again");
          }
        }
      }
    }
    if (done) {
      out.alpha = alpha;
      return out;
    }
  }
}

}  // namespace

SieveResult sieve_approx(const Graph& g, const DistanceMatrix& dm, const SieveOptions& opts) {
  static constexpr SieveRule rule{
      1, [](std::uint32_t a) { return 4 * a; }, [](std::uint32_t a) { return 3 * a; },
      [](std::uint32_t a) { return 2 * a; }, 2, 2};
  SieveResult out = run_matrix_sieve(g, dm, rule, opts);
  out.lower = out.alpha > 1 ? HalfInt::from_twice(out.alpha) : HalfInt{};
  out.upper = constant_bounds(BoundKind::DismantlableToHyperbolic,
                              {.delta = {}, .s = 4 * std::int64_t{out.alpha}, .s_prime = 3 * std::int64_t{out.alpha}});
  return out;
}

SieveResult sieve_approx_wm(const Graph& g, const DistanceMatrix& dm, const SieveOptions& opts) {
  auto wm = is_weakly_modular(g, dm);
  if (!wm.weakly_modular) {
    throw Error("graph is not weakly modular (" + wm.failed_condition + " condition fails)");
  }
  static constexpr SieveRule rule{
      0, [](std::uint32_t a) { return 2 * a + 2; }, [](std::uint32_t a) { return 2 * a + 1; },
      [](std::uint32_t a) { return a + 1; }, 1, 1};
  SieveResult out = run_matrix_sieve(g, dm, rule, opts);
  out.lower = HalfInt::from_twice(out.alpha);
  EliminationOrder shape;
  shape.s = 2 * out.alpha + 2;
  shape.s_prime = 2 * out.alpha + 1;
  shape.star = true;
  out.upper = dismantle_to_copwin_bound(shape, true);
  return out;
}

SieveResult sieve_approx_localized(const Graph& g) {
  const std::size_t n = g.size();
  SieveResult out;
  if (n == 0) {
    out.alpha = 1;
    return out;
  }
  BfsOrder bfs = bfs_order(g, 0);

  // known(u, v) = d(u, v) + 1 once u entered the queue of v, 0 before.
  // calloc hands back zero pages lazily, so no n^2 initialisation pass runs.
  std::unique_ptr<std::uint32_t[], decltype(&std::free)> known(
      static_cast<std::uint32_t*>(std::calloc(n * n, sizeof(std::uint32_t))), &std::free);
  if (!known) throw Error("cannot allocate distance table");
  auto slot = [&](Vertex u, Vertex owner) -> std::uint32_t& { return known[std::size_t{owner} * n + u]; };
  constexpr std::uint32_t kUnknown = kUnreachable;
  auto dist = [&](Vertex u, Vertex owner) {
    std::uint32_t k = slot(u, owner);
    return k == 0 ? kUnknown : k - 1;
  };

  std::vector<std::vector<Vertex>> queue(n);
  std::vector<std::uint32_t> head(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    queue[v].push_back(v);
    slot(v, v) = 1;
    ++out.stats.pushes;
  }
  std::vector<Vertex> anchor(n);
  for (Vertex v = 0; v < n; ++v) anchor[v] = v;

  const std::uint32_t cap = static_cast<std::uint32_t>(n) + 2;
  for (std::uint32_t alpha = 1;; ++alpha) {
    if (alpha > cap) throw InternalError("localized sieve did not terminate within n rounds");
    ++out.stats.iterations;
    const std::uint32_t reach = 4 * alpha, cover = 3 * alpha;
    bool done = true;
    for (Vertex v : bfs.order) {
      anchor[v] = bfs.parent[bfs.parent[anchor[v]]];
      const Vertex f = anchor[v];
      auto& q = queue[v];
      std::uint32_t& h = head[v];
      while (h < q.size()) {
        Vertex u = q[h];
        const std::uint32_t duv = dist(u, v);
        if (duv > reach) break;
        if (bfs.rank[u] <= bfs.rank[v] && dist(u, f) > cover) break;
        ++h;
        ++out.stats.pops;
        for (Vertex w : g.neighbors(u)) {
          ++out.stats.scanned;
          if (slot(w, v) == 0) {
            slot(w, v) = duv + 2;
            q.push_back(w);
            ++out.stats.pushes;
          }
        }
      }
      if (h < q.size() && dist(q[h], v) <= reach) done = false;
    }
    if (done) {
      out.alpha = alpha;
      break;
    }
  }
  out.lower = out.alpha > 1 ? HalfInt::from_twice(out.alpha) : HalfInt{};
  out.upper = constant_bounds(BoundKind::DismantlableToHyperbolic,
                              {.delta = {}, .s = 4 * std::int64_t{out.alpha}, .s_prime = 3 * std::int64_t{out.alpha}});
  return out;
}

}  // namespace hypercop
