#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hypercop/graph.hpp"
#include "hypercop/half_int.hpp"
#include "hypercop/metric.hpp"

namespace hypercop {

/// Vertex order with one eliminator per non-minimum vertex.
///
/// With X_v the prefix of `order` ending at v and u = eliminator[v]:
///   star:     B_s(v, G) & X_v  is inside  B_s'(u, G)
///   non-star: B_s(v, G - u) & X_v  is inside  B_s'(u, G)
/// The first vertex of `order` has eliminator kNoVertex.
struct EliminationOrder {
  std::vector<Vertex> order;
  std::vector<Vertex> eliminator;  // indexed by vertex
  std::uint32_t s = 1;
  std::uint32_t s_prime = 1;
  bool star = false;

  std::vector<std::uint32_t> ranks() const;
};

struct OrderViolation {
  Vertex v = 0;
  /// Vertices of the relevant ball inside X_v but outside B_s'(eliminator).
  /// Empty when the violation is structural (bad rank, missing eliminator).
  VertexSet escaping;
  std::string reason;
};

/// Whether u eliminates v with respect to the live set X (sorted).
bool eliminates(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v, const VertexSet& live,
                std::uint32_t s, std::uint32_t s_prime, bool star);

/// Repeatedly removes the smallest-id eliminable vertex of the live set
/// (eliminator: smallest valid id) until one vertex is left. Elimination only
/// gets easier as the live set shrinks, so failure means no order exists.
std::optional<EliminationOrder> greedy_dismantling(const Graph& g, const DistanceMatrix& dm, std::uint32_t s,
                                                   std::uint32_t s_prime, bool star);

std::optional<OrderViolation> verify_order(const Graph& g, const DistanceMatrix& dm, const EliminationOrder& ord);

/// BFS order from `bfs.root` with eliminator = tree ancestor at distance
/// min(reach, depth). Used as a (2r, r + 2 delta)* candidate.
EliminationOrder bfs_ancestor_order(const BfsOrder& bfs, std::uint32_t reach, std::uint32_t s, std::uint32_t s_prime,
                                    bool star);

/// Tightest stated bound for an already-verified order: 184 s when the host is
/// weakly modular, the (s, s')* formula for star orders, 64 s^2 otherwise.
HalfInt dismantle_to_copwin_bound(const EliminationOrder& ord, bool weakly_modular_host = false);

struct Algorithm1Yes {};
struct Algorithm1No {
  NonHypWitness witness;
};
using Algorithm1Result = std::variant<Algorithm1Yes, Algorithm1No>;

/// Tests whether the BFS order from vertex 0 is a (4a, 3a)*-dismantling order
/// with eliminator the ancestor at distance min(2a, depth). On failure returns
/// the first offending vertex in BFS order and its nearest escaping vertex.
Algorithm1Result algorithm1(const Graph& g, const DistanceMatrix& dm, std::uint32_t alpha, unsigned threads = 0);

struct SieveStats {
  std::uint64_t pops = 0;        // vertices removed from a stack/queue for good
  std::uint64_t pushes = 0;      // localized variant: queue insertions
  std::uint64_t scanned = 0;     // localized variant: adjacency entries inspected
  std::uint32_t iterations = 0;  // number of alpha values tried
};

struct SieveResult {
  std::uint32_t alpha = 0;
  HalfInt lower;
  HalfInt upper;
  /// One witness per rejected alpha (matrix-based variants only).
  std::vector<NonHypWitness> witness_trace;
  SieveStats stats;
};

struct SieveOptions {
  bool record_witnesses = true;
  /// Re-checks after every round that no popped vertex became a witness.
  /// O(n^2) per round; meant for tests.
  bool check_monotone = false;
};

/// Least alpha for which algorithm1 says YES, by the sieve of n stacks.
/// lower = alpha/2 (0 when alpha = 1), upper = 784 alpha + 1/2.
SieveResult sieve_approx(const Graph& g, const DistanceMatrix& dm, const SieveOptions& opts = {});

/// Weakly modular variant: least alpha >= 0 with
/// B_{2a+2}(v) & X_v inside B_{2a+1}(g_a(v)), g_a = ancestor at distance
/// min(a+1, depth). lower = alpha/2, upper = 368 (alpha + 1).
/// Throws hypercop::Error if the graph is not weakly modular.
SieveResult sieve_approx_wm(const Graph& g, const DistanceMatrix& dm, const SieveOptions& opts = {});

/// Adjacency-only sieve: each vertex grows its own BFS queue on demand and
/// unknown distances count as infinite. Same certificate structure as
/// sieve_approx; alpha may be larger.
SieveResult sieve_approx_localized(const Graph& g);

}  // namespace hypercop
