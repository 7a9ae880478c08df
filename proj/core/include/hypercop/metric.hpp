#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercop/graph.hpp"
#include "hypercop/half_int.hpp"

namespace hypercop {

/// Half of (largest - second largest) among the three pairings
/// d(u,v)+d(x,y), d(u,x)+d(v,y), d(u,y)+d(v,x).
HalfInt four_point_delta(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex x, Vertex y);

/// Least delta for which the graph is delta-hyperbolic. O(n^4).
HalfInt exact_hyperbolicity(const Graph& g, const DistanceMatrix& dm, unsigned threads = 0);

/// Four-point maximum with one point pinned at `base`. Within a factor 2 of
/// exact_hyperbolicity from below. O(n^3).
HalfInt base_point_delta(const Graph& g, const DistanceMatrix& dm, Vertex base);

/// Least nu such that every interval is nu-thin.
std::uint32_t interval_thinness(const Graph& g, const DistanceMatrix& dm);

/// max over triples (x,y,z) and u in I(x,y) of d(u, I(x,z) u I(y,z)).
///
/// One-sided: every value found is realised by some geodesic triangle, but
/// triangles whose sides are not whole intervals can be fatter, so this is
/// only a lower bound on the slimness constant.
std::uint32_t slimness_lower_bound(const Graph& g, const DistanceMatrix& dm);

struct QuasiMedian {
  Vertex v1 = 0, v2 = 0, v3 = 0;
  std::uint32_t d12 = 0, d23 = 0, d31 = 0;
};

/// Greedy quasi-median of (x, y, z), smallest id on ties. Throws
/// InternalError if the result fails its own postconditions.
QuasiMedian quasi_median(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y, Vertex z);

/// True when the pairwise intervals of (a, b, c) meet only in shared endpoints.
bool is_metric_triangle(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c);

struct MetricTriangle {
  Vertex a = 0, b = 0, c = 0;  // a < b < c
  std::uint32_t ab = 0, bc = 0, ca = 0;

  std::uint32_t max_side() const;
  bool equilateral() const { return ab == bc && bc == ca; }
};

struct TriangleCensus {
  std::uint32_t mu_max = 0;
  std::vector<MetricTriangle> triangles;  // lexicographic by (a, b, c)
};

/// All metric triangles on three distinct vertices. Bitset intervals, O(n^3 * n/64).
TriangleCensus metric_triangle_census(const Graph& g, const DistanceMatrix& dm);

struct WeakModularityReport {
  bool weakly_modular = true;
  /// "triangle" or "quadrangle" on failure.
  std::string failed_condition;
  /// (u, v, w) for the triangle condition, (u, v, w, z) for the quadrangle one.
  std::vector<Vertex> witness;
};

WeakModularityReport is_weakly_modular(const Graph& g, const DistanceMatrix& dm);

bool is_median_graph(const Graph& g, const DistanceMatrix& dm);

/// Every biconnected component is a clique. Equivalent to zero hyperbolicity.
bool is_block_graph(const Graph& g);

/// Metric triangles violating d(u,v) <= (num/den) * min(d(u,w), d(v,w)) for
/// some labelling of their corners.
std::vector<MetricTriangle> f_balanced_violations(const Graph& g, const DistanceMatrix& dm,
                                                  std::uint32_t c_num, std::uint32_t c_den = 1);

/// max over v of the exact hyperbolicity of the subgraph induced by ball(v, R),
/// with distances recomputed inside the ball.
HalfInt local_hyperbolicity_scan(const Graph& g, const DistanceMatrix& dm, std::uint32_t radius);

/// Four vertices and a radius intended to show d(c,y) > r + 2*delta fails
/// for small delta: c on a z-x geodesic at distance min(r, d(x,z)) from x,
/// d(z,y) <= d(z,x) and d(x,y) <= 2r.
struct NonHypWitness {
  Vertex z = 0, x = 0, y = 0, c = 0;
  std::uint32_t r = 0;
};

/// Least L with "the graph is not delta-hyperbolic for any delta < L", i.e.
/// (d(c,y) - r)/2, or 0 when d(c,y) <= r. Throws hypercop::Error naming the
/// first failed precondition.
HalfInt witness_lower_bound(const DistanceMatrix& dm, const NonHypWitness& w);

enum class BoundKind {
  SlimToHyperbolic,          // delta-slim triangles => (2 delta + 1/2)-hyperbolic
  HyperbolicToSlim,          // delta-hyperbolic => 3 delta-slim triangles
  ThinAndBoundedToHyperbolic,// nu-thin intervals, mu-bounded triangles => (16 nu + 4 mu)
  DismantlableToHyperbolic,  // (s, s')*-dismantlable, s' < s => 16(s+s')ceil((s+s')/(s-s')) + 1/2
};

struct BoundInputs {
  HalfInt delta;
  std::int64_t nu = 0;
  std::int64_t mu = 0;
  std::int64_t s = 0;
  std::int64_t s_prime = 0;
};

/// Evaluates one of the constant relations. Throws when s' >= s or s' <= 0
/// for the dismantling kind.
HalfInt constant_bounds(BoundKind kind, const BoundInputs& in);

}  // namespace hypercop
