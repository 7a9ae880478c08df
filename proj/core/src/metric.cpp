#include "hypercop/metric.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "hypercop/error.hpp"
#include "parallel.hpp"

namespace hypercop {

namespace {

// Doubled four-point value from raw distance rows.
inline std::int64_t four_point_twice(std::uint32_t s1, std::uint32_t s2, std::uint32_t s3) {
  std::uint32_t hi = std::max({s1, s2, s3});
  std::uint32_t lo = std::min({s1, s2, s3});
  std::uint32_t mid = s1 + s2 + s3 - hi - lo;
  return static_cast<std::int64_t>(hi) - mid;
}

/// Interval membership for every ordered pair, one bit row per pair.
class IntervalBits {
 public:
  IntervalBits(const DistanceMatrix& dm) : n_(dm.size()), words_((n_ + 63) / 64), bits_(n_ * n_ * words_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      auto du = dm.row(u);
      for (Vertex v = u; v < n_; ++v) {
        auto dv = dm.row(v);
        std::uint64_t* a = row(u, v);
        for (Vertex x = 0; x < n_; ++x) {
          if (du[x] + dv[x] == du[v]) a[x >> 6] |= std::uint64_t{1} << (x & 63);
        }
        if (u != v) std::copy(a, a + words_, row(v, u));
      }
    }
  }

  const std::uint64_t* row(Vertex u, Vertex v) const { return bits_.data() + (std::size_t{u} * n_ + v) * words_; }

  /// |I(a,b) & I(c,d)|, stopping once it exceeds `cap`.
  std::size_t common(Vertex a, Vertex b, Vertex c, Vertex d, std::size_t cap) const {
    const std::uint64_t* x = row(a, b);
    const std::uint64_t* y = row(c, d);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_ && total <= cap; ++i) total += std::popcount(x[i] & y[i]);
    return total;
  }

  std::size_t common3(Vertex a, Vertex b, Vertex c, std::size_t cap) const {
    const std::uint64_t* x = row(a, b);
    const std::uint64_t* y = row(a, c);
    const std::uint64_t* z = row(b, c);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_ && total <= cap; ++i) total += std::popcount(x[i] & y[i] & z[i]);
    return total;
  }

 private:
  std::uint64_t* row(Vertex u, Vertex v) { return bits_.data() + (std::size_t{u} * n_ + v) * words_; }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

bool strictly_triangular(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c) {
  std::uint32_t ab = dm(a, b), bc = dm(b, c), ca = dm(c, a);
  return ab + bc > ca && bc + ca > ab && ca + ab > bc;
}

bool in_interval(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex x) { return dm(u, x) + dm(x, v) == dm(u, v); }

}  // namespace

HalfInt four_point_delta(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex x, Vertex y) {
  return HalfInt::from_twice(four_point_twice(dm(u, v) + dm(x, y), dm(u, x) + dm(v, y), dm(u, y) + dm(v, x)));
}

HalfInt exact_hyperbolicity(const Graph&, const DistanceMatrix& dm, unsigned threads) {
  const std::size_t n = dm.size();
  unsigned workers = detail::resolve_threads(threads);
  std::vector<std::int64_t> best(workers, 0);
  // Worker w takes every workers-th first index; the inner work shrinks with u.
  detail::parallel_chunks(workers, workers, [&](unsigned, std::size_t wbegin, std::size_t wend) {
    for (std::size_t w = wbegin; w < wend; ++w) {
      std::int64_t local = 0;
      for (std::size_t u = w; u < n; u += workers) {
        auto du = dm.row(static_cast<Vertex>(u));
        for (std::size_t v = u + 1; v < n; ++v) {
          auto dv = dm.row(static_cast<Vertex>(v));
          const std::uint32_t duv = du[v];
          for (std::size_t x = v + 1; x < n; ++x) {
            auto dx = dm.row(static_cast<Vertex>(x));
            const std::uint32_t dux = du[x], dvx = dv[x];
            for (std::size_t y = x + 1; y < n; ++y) {
              std::int64_t t = four_point_twice(duv + dx[y], dux + dv[y], du[y] + dvx);
              if (t > local) local = t;
            }
          }
        }
      }
      best[w] = local;
    }
  });
  return HalfInt::from_twice(*std::max_element(best.begin(), best.end()));
}

HalfInt base_point_delta(const Graph&, const DistanceMatrix& dm, Vertex base) {
  const std::size_t n = dm.size();
  auto du = dm.row(base);
  std::int64_t best = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto dv = dm.row(v);
    for (Vertex x = v + 1; x < n; ++x) {
      auto dx = dm.row(x);
      for (Vertex y = x + 1; y < n; ++y) {
        best = std::max(best, four_point_twice(du[v] + dx[y], du[x] + dv[y], du[y] + dv[x]));
      }
    }
  }
  return HalfInt::from_twice(best);
}

std::uint32_t interval_thinness(const Graph& g, const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  std::uint32_t best = 0;
  std::vector<std::vector<Vertex>> levels;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint32_t d = dm(u, v);
      levels.assign(d + 1, {});
      for (Vertex x : interval(g, dm, u, v)) levels[dm(u, x)].push_back(x);
      for (const auto& level : levels) {
        for (std::size_t i = 0; i < level.size(); ++i) {
          for (std::size_t j = i + 1; j < level.size(); ++j) best = std::max(best, dm(level[i], level[j]));
        }
      }
    }
  }
  return best;
}

std::uint32_t slimness_lower_bound(const Graph& g, const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  std::vector<std::vector<Vertex>> intervals(n * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) intervals[std::size_t{u} * n + v] = interval(g, dm, u, v);
  }
  auto iv = [&](Vertex a, Vertex b) -> const std::vector<Vertex>& { return intervals[std::size_t{a} * n + b]; };

  std::uint32_t best = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      for (Vertex z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const auto& side1 = iv(x, z);
        const auto& side2 = iv(y, z);
        for (Vertex u : iv(x, y)) {
          std::uint32_t nearest = kUnreachable;
          for (const auto* side : {&side1, &side2}) {
            for (Vertex w : *side) {
              nearest = std::min(nearest, dm(u, w));
              if (nearest <= best) break;
            }
            if (nearest <= best) break;
          }
          best = std::max(best, nearest);
        }
      }
    }
  }
  return best;
}

bool is_metric_triangle(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c) {
  const std::array<Vertex, 3> corners{a, b, c};
  // For each pair of sides sharing corner k, the intersection must stay inside
  // the endpoints the two sides have in common.
  for (int k = 0; k < 3; ++k) {
    Vertex p = corners[k], q = corners[(k + 1) % 3], r = corners[(k + 2) % 3];
    for (Vertex x = 0; x < dm.size(); ++x) {
      if (!in_interval(dm, p, q, x) || !in_interval(dm, p, r, x)) continue;
      bool shared_endpoint = x == p || (x == q && (q == p || q == r)) || (x == r && (r == p || r == q));
      if (!shared_endpoint) return false;
    }
  }
  return true;
}

QuasiMedian quasi_median(const Graph&, const DistanceMatrix& dm, Vertex x, Vertex y, Vertex z) {
  const std::size_t n = dm.size();
  auto farthest_in = [&](Vertex from, Vertex a1, Vertex b1, Vertex a2, Vertex b2) {
    Vertex pick = kNoVertex;
    for (Vertex w = 0; w < n; ++w) {
      if (!in_interval(dm, a1, b1, w) || !in_interval(dm, a2, b2, w)) continue;
      if (pick == kNoVertex || dm(from, w) > dm(from, pick)) pick = w;
    }
    return pick;
  };
  QuasiMedian q;
  q.v1 = farthest_in(x, x, y, x, z);
  q.v2 = farthest_in(y, y, q.v1, y, z);
  q.v3 = farthest_in(z, z, q.v1, z, q.v2);
  if (q.v1 == kNoVertex || q.v2 == kNoVertex || q.v3 == kNoVertex) {
    throw InternalError("quasi-median search found an empty candidate set");
  }
  q.d12 = dm(q.v1, q.v2);
  q.d23 = dm(q.v2, q.v3);
  q.d31 = dm(q.v3, q.v1);
  bool ok = dm(x, y) == dm(x, q.v1) + q.d12 + dm(q.v2, y) && dm(y, z) == dm(y, q.v2) + q.d23 + dm(q.v3, z) &&
            dm(z, x) == dm(z, q.v3) + q.d31 + dm(q.v1, x) && is_metric_triangle(dm, q.v1, q.v2, q.v3);
  if (!ok) throw InternalError("quasi-median of a triple violates its defining equalities");
  return q;
}

std::uint32_t MetricTriangle::max_side() const { return std::max({ab, bc, ca}); }

TriangleCensus metric_triangle_census(const Graph&, const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  IntervalBits bits(dm);
  TriangleCensus out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (!strictly_triangular(dm, a, b, c)) continue;
        if (bits.common(a, b, a, c, 1) != 1 || bits.common(b, a, b, c, 1) != 1 || bits.common(c, a, c, b, 1) != 1) {
          continue;
        }
        MetricTriangle t{a, b, c, dm(a, b), dm(b, c), dm(c, a)};
        out.mu_max = std::max(out.mu_max, t.max_side());
        out.triangles.push_back(t);
      }
    }
  }
  return out;
}

WeakModularityReport is_weakly_modular(const Graph& g, const DistanceMatrix& dm) {
  const std::size_t n = g.size();
  auto has_common_closer = [&](Vertex u, Vertex v, Vertex w, std::uint32_t target) {
    auto nv = g.neighbors(v);
    auto nw = g.neighbors(w);
    auto i = nv.begin();
    auto j = nw.begin();
    while (i != nv.end() && j != nw.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        if (dm(u, *i) == target) return true;
        ++i;
        ++j;
      }
    }
    return false;
  };

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const std::uint32_t k = dm(u, v);
      if (k < 2) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || dm(u, w) != k) continue;
        if (!has_common_closer(u, v, w, k - 1)) return {false, "triangle", {u, v, w}};
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex z = 0; z < n; ++z) {
      const std::uint32_t dz = dm(u, z);
      if (dz < 3) continue;
      auto nz = g.neighbors(z);
      for (std::size_t i = 0; i < nz.size(); ++i) {
        Vertex v = nz[i];
        if (dm(u, v) != dz - 1) continue;
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
          Vertex w = nz[j];
          if (dm(u, w) != dz - 1 || dm(v, w) != 2) continue;
          if (!has_common_closer(u, v, w, dz - 2)) return {false, "quadrangle", {u, v, w, z}};
        }
      }
    }
  }
  return {};
}

bool is_median_graph(const Graph&, const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  IntervalBits bits(dm);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (bits.common3(a, b, c, 1) != 1) return false;
      }
    }
  }
  return true;
}

bool is_block_graph(const Graph& g) {
  const std::size_t n = g.size();
  if (n <= 2) return true;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<std::uint32_t> disc(n, kUnreachable), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Frame> stack{{0, kNoVertex, 0}};
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> members;
  std::uint32_t timer = 0;
  disc[0] = low[0] = timer++;

  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      Vertex w = nb[f.next++];
      if (disc[w] == kUnreachable) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (done.parent == kNoVertex) continue;
    Vertex p = done.parent;
    low[p] = std::min(low[p], low[done.v]);
    if (low[done.v] < disc[p]) continue;
    // p separates the component hanging below done.v: pop its edges.
    members.clear();
    std::size_t edges = 0;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      ++edges;
      for (Vertex x : {e.first, e.second}) {
        if (!seen[x]) {
          seen[x] = 1;
          members.push_back(x);
        }
      }
      if (e == Edge{p, done.v}) break;
    }
    for (Vertex x : members) seen[x] = 0;
    const std::size_t k = members.size();
    if (edges != k * (k - 1) / 2) return false;
  }
  return true;
}

std::vector<MetricTriangle> f_balanced_violations(const Graph& g, const DistanceMatrix& dm, std::uint32_t c_num,
                                                  std::uint32_t c_den) {
  if (c_num == 0 || c_den == 0) throw Error("balance constant must be a positive rational");
  std::vector<MetricTriangle> out;
  for (const auto& t : metric_triangle_census(g, dm).triangles) {
    // (opposite side, the two sides at the remaining corner)
    const std::array<std::array<std::uint64_t, 3>, 3> cases{{{t.ab, t.bc, t.ca}, {t.bc, t.ab, t.ca}, {t.ca, t.ab, t.bc}}};
    bool bad = std::any_of(cases.begin(), cases.end(), [&](const auto& cs) {
      return cs[0] * c_den > std::uint64_t{c_num} * std::min(cs[1], cs[2]);
    });
    if (bad) out.push_back(t);
  }
  return out;
}

HalfInt local_hyperbolicity_scan(const Graph& g, const DistanceMatrix& dm, std::uint32_t radius) {
  HalfInt best;
  for (Vertex v = 0; v < g.size(); ++v) {
    VertexSet b = ball(g, dm, v, radius);
    Graph sub = g.induced(b);
    DistanceMatrix sub_dm = all_pairs_distances(sub, 1);
    best = std::max(best, exact_hyperbolicity(sub, sub_dm, 1));
  }
  return best;
}

HalfInt witness_lower_bound(const DistanceMatrix& dm, const NonHypWitness& w) {
  const std::size_t n = dm.size();
  if (w.z >= n || w.x >= n || w.y >= n || w.c >= n) throw Error("witness vertex out of range");
  auto reject = [](const std::string& why) { throw Error("not a valid non-hyperbolicity witness: " + why); };
  if (!in_interval(dm, w.x, w.z, w.c)) reject("c is not on a geodesic between x and z");
  if (dm(w.x, w.c) != std::min(w.r, dm(w.x, w.z))) reject("d(x,c) != min(r, d(x,z))");
  if (dm(w.z, w.y) > dm(w.z, w.x)) reject("d(z,y) > d(z,x)");
  if (dm(w.x, w.y) > 2 * w.r) reject("d(x,y) > 2r");
  const std::uint32_t dcy = dm(w.c, w.y);
  return HalfInt::from_twice(dcy > w.r ? dcy - w.r : 0);
}

HalfInt constant_bounds(BoundKind kind, const BoundInputs& in) {
  switch (kind) {
    case BoundKind::SlimToHyperbolic:
      return HalfInt::from_twice(2 * in.delta.twice() + 1);
    case BoundKind::HyperbolicToSlim:
      return HalfInt::from_twice(3 * in.delta.twice());
    case BoundKind::ThinAndBoundedToHyperbolic:
      if (in.nu < 0 || in.mu < 0) throw Error("thinness and triangle size must be nonnegative");
      return HalfInt::integer(16 * in.nu + 4 * in.mu);
    case BoundKind::DismantlableToHyperbolic: {
      if (in.s_prime <= 0 || in.s_prime >= in.s) {
        throw Error("no hyperbolicity bound for s' >= s (need 0 < s' < s)");
      }
      const std::int64_t sum = in.s + in.s_prime;
      const std::int64_t gap = in.s - in.s_prime;
      return HalfInt::from_twice(2 * 16 * sum * ((sum + gap - 1) / gap) + 1);
    }
  }
  throw InternalError("unknown bound kind");
}

}  // namespace hypercop
