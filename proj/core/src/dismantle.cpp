#include "hypercop/dismantle.hpp"

#include <algorithm>
#include <string>

#include "hypercop/error.hpp"
#include "parallel.hpp"

namespace hypercop {

std::vector<std::uint32_t> EliminationOrder::ranks() const {
  std::vector<std::uint32_t> rank(order.size(), kUnreachable);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < rank.size()) rank[order[i]] = static_cast<std::uint32_t>(i);
  }
  return rank;
}

namespace {

VertexSet relevant_ball(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v, std::uint32_t s, bool star) {
  return star ? ball(g, dm, v, s) : ball_excluding(g, v, s, u);
}

}  // namespace

bool eliminates(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v, const VertexSet& live,
                std::uint32_t s, std::uint32_t s_prime, bool star) {
  if (u == v) throw Error("a vertex cannot eliminate itself");
  VertexSet b = relevant_ball(g, dm, u, v, s, star);
  VertexSet inside;
  std::set_intersection(b.begin(), b.end(), live.begin(), live.end(), std::back_inserter(inside));
  return std::all_of(inside.begin(), inside.end(), [&](Vertex w) { return dm(u, w) <= s_prime; });
}

std::optional<EliminationOrder> greedy_dismantling(const Graph& g, const DistanceMatrix& dm, std::uint32_t s,
                                                   std::uint32_t s_prime, bool star) {
  const std::size_t n = g.size();
  EliminationOrder out;
  out.s = s;
  out.s_prime = s_prime;
  out.star = star;
  out.eliminator.assign(n, kNoVertex);
  if (n == 0) return out;

  // Balls do not depend on the live set; cache them per (eliminator, vertex).
  std::vector<std::optional<VertexSet>> cache(star ? n : n * n);
  auto ball_of = [&](Vertex u, Vertex v) -> const VertexSet& {
    auto& slot = star ? cache[v] : cache[std::size_t{u} * n + v];
    if (!slot) slot = relevant_ball(g, dm, u, v, s, star);
    return *slot;
  };

  std::vector<std::uint8_t> live(n, 1);
  std::vector<Vertex> removed;
  removed.reserve(n);
  auto can_eliminate = [&](Vertex u, Vertex v) {
    for (Vertex w : ball_of(u, v)) {
      if (live[w] && dm(u, w) > s_prime) return false;
    }
    return true;
  };

  for (std::size_t remaining = n; remaining > 1; --remaining) {
    bool progressed = false;
    for (Vertex v = 0; v < n && !progressed; ++v) {
      if (!live[v]) continue;
      for (Vertex u = 0; u < n; ++u) {
        if (u == v || !live[u] || !can_eliminate(u, v)) continue;
        out.eliminator[v] = u;
        live[v] = 0;
        removed.push_back(v);
        progressed = true;
        break;
      }
    }
    if (!progressed) return std::nullopt;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (live[v]) removed.push_back(v);
  }
  out.order.assign(removed.rbegin(), removed.rend());
  return out;
}

std::optional<OrderViolation> verify_order(const Graph& g, const DistanceMatrix& dm, const EliminationOrder& ord) {
  const std::size_t n = g.size();
  if (ord.order.size() != n || ord.eliminator.size() != n) {
    return OrderViolation{0, {}, "order or eliminator table has the wrong length"};
  }
  auto rank = ord.ranks();
  for (Vertex v = 0; v < n; ++v) {
    if (rank[v] == kUnreachable) return OrderViolation{v, {}, "vertex missing from the order"};
  }
  for (std::size_t pos = 1; pos < n; ++pos) {
    Vertex v = ord.order[pos];
    Vertex u = ord.eliminator[v];
    if (u == kNoVertex || u >= n) return OrderViolation{v, {}, "no eliminator"};
    if (u == v) return OrderViolation{v, {}, "vertex eliminates itself"};
    if (rank[u] > rank[v]) return OrderViolation{v, {}, "eliminator comes later in the order"};
    OrderViolation bad{v, {}, "ball not covered by the eliminator"};
    for (Vertex w : relevant_ball(g, dm, u, v, ord.s, ord.star)) {
      if (rank[w] <= rank[v] && dm(u, w) > ord.s_prime) bad.escaping.push_back(w);
    }
    if (!bad.escaping.empty()) return bad;
  }
  return std::nullopt;
}

EliminationOrder bfs_ancestor_order(const BfsOrder& bfs, std::uint32_t reach, std::uint32_t s, std::uint32_t s_prime,
                                    bool star) {
  EliminationOrder out;
  out.order = bfs.order;
  out.s = s;
  out.s_prime = s_prime;
  out.star = star;
  out.eliminator.assign(bfs.order.size(), kNoVertex);
  for (Vertex v : bfs.order) {
    if (v != bfs.root) out.eliminator[v] = bfs.ancestor(v, reach);
  }
  return out;
}

HalfInt dismantle_to_copwin_bound(const EliminationOrder& ord, bool weakly_modular_host) {
  if (ord.s_prime >= ord.s) throw Error("no hyperbolicity bound for s' >= s");
  if (weakly_modular_host) return HalfInt::integer(184 * std::int64_t{ord.s});
  if (ord.star) {
    return constant_bounds(BoundKind::DismantlableToHyperbolic, {.delta = {}, .s = ord.s, .s_prime = ord.s_prime});
  }
  return HalfInt::integer(64 * std::int64_t{ord.s} * ord.s);
}

Algorithm1Result algorithm1(const Graph& g, const DistanceMatrix& dm, std::uint32_t alpha, unsigned threads) {
  if (alpha == 0) throw Error("algorithm1 needs alpha >= 1");
  const std::size_t n = g.size();
  if (n == 0) return Algorithm1Yes{};
  BfsOrder bfs = bfs_order(g, 0);
  const std::uint32_t reach = 4 * alpha, cover = 3 * alpha;

  // Per worker: first failing position in its chunk and the chosen witness.
  unsigned workers = detail::resolve_threads(threads);
  std::vector<std::pair<std::size_t, Vertex>> first(workers, {n, kNoVertex});
  detail::parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    for (std::size_t pos = begin; pos < end; ++pos) {
      Vertex v = bfs.order[pos];
      Vertex f = bfs.ancestor(v, 2 * alpha);
      Vertex best = kNoVertex;
      for (std::size_t i = 0; i <= pos; ++i) {
        Vertex u = bfs.order[i];
        if (dm(u, v) > reach || dm(u, f) <= cover) continue;
        if (best == kNoVertex || dm(u, v) < dm(best, v) || (dm(u, v) == dm(best, v) && u < best)) best = u;
      }
      if (best != kNoVertex) {
        first[w] = {pos, best};
        return;
      }
    }
  });
  auto hit = std::min_element(first.begin(), first.end());
  if (hit->first == n) return Algorithm1Yes{};
  Vertex v = bfs.order[hit->first];
  return Algorithm1No{NonHypWitness{bfs.root, v, hit->second, bfs.ancestor(v, 2 * alpha), 2 * alpha}};
}

}  // namespace hypercop
