#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hypercop {

/// Dense vertex id in 0..n-1.
using Vertex = std::uint32_t;
/// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Immutable connected simple undirected graph in CSR form.
///
/// Every vertex carries the integer label it had in the input; ids are
/// assigned by sorting labels ascending, so a graph read from "0 1 / 1 2"
/// keeps its numbering.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1. Throws hypercop::Error on self-loops,
  /// duplicate edges, out-of-range endpoints or a disconnected result.
  /// `labels` defaults to the identity.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::uint64_t> labels = {});

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  std::uint64_t label(Vertex v) const { return labels_[v]; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  std::optional<Vertex> find_label(std::uint64_t label) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices` (need not be sorted); vertex i of the
  /// result is vertices[i] and inherits its label. Throws if disconnected.
  Graph induced(std::span<const Vertex> vertices) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::uint64_t> labels_;
};

/// Two vertices in different components of the graph given by adjacency
/// lists, or nothing when it is connected (the empty graph counts as connected).
std::optional<Edge> find_disconnected_pair(std::size_t n, std::span<const Edge> edges);

/// Hop distances, row-major n x n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> data);

  std::size_t size() const { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return data_[std::size_t{u} * n_ + v]; }
  std::span<const std::uint32_t> row(Vertex u) const { return {data_.data() + std::size_t{u} * n_, n_}; }
  std::uint32_t diameter() const;
  std::uint32_t eccentricity(Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> data_;
};

struct BfsOrder {
  Vertex root = 0;
  std::vector<Vertex> order;    // position = rank
  std::vector<Vertex> parent;   // parent[root] == root
  std::vector<std::uint32_t> rank;
  std::vector<std::uint32_t> depth;  // distance from root

  /// Vertex at distance min(k, depth[v]) from v on the tree path to the root.
  Vertex ancestor(Vertex v, std::uint32_t k) const;
  bool precedes_or_equal(Vertex u, Vertex v) const { return rank[u] <= rank[v]; }
};

/// One BFS per source. `threads` = 0 picks hardware concurrency.
/// Throws "graph not connected" naming an unreachable pair.
DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 0);

/// Distances from one source; kUnreachable for vertices not reached.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

VertexSet ball(const Graph& g, const DistanceMatrix& dm, Vertex v, std::uint32_t r);

/// Vertices reachable from v by paths of length <= r avoiding `excluded`.
VertexSet ball_excluding(const Graph& g, Vertex v, std::uint32_t r, Vertex excluded);

VertexSet interval(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v);

/// Layered BFS: within a layer, ascending id; parent is the smallest-id
/// neighbour in the previous layer.
BfsOrder bfs_order(const Graph& g, Vertex root);

}  // namespace hypercop
