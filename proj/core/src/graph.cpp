#include "hypercop/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypercop/error.hpp"
#include "parallel.hpp"

namespace hypercop {

namespace {

std::vector<std::vector<Vertex>> adjacency_lists(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

std::optional<Edge> find_disconnected_pair(std::size_t n, std::span<const Edge> edges) {
  if (n <= 1) return std::nullopt;
  std::vector<Vertex> root(n);
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) continue;
    Vertex a = find(u), b = find(v);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  for (Vertex v = 1; v < n; ++v) {
    if (find(v) != find(0)) return Edge{0, v};
  }
  return std::nullopt;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::uint64_t> labels) {
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  }
  if (labels.size() != n) throw Error("label table size does not match vertex count");

  auto adj = adjacency_lists(n, edges);
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::binary_search(list.begin(), list.end(), v)) {
      throw Error("self-loop at vertex " + std::to_string(labels[v]));
    }
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw Error("duplicate edge " + std::to_string(labels[v]) + " " + std::to_string(labels[*dup]));
    }
  }
  if (auto pair = find_disconnected_pair(n, edges)) {
    throw Error("graph not connected: no path between " + std::to_string(labels[pair->first]) + " and " +
                std::to_string(labels[pair->second]));
  }

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adj[v].size();
  g.targets_.reserve(g.offsets_[n]);
  for (auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Vertex> Graph::find_label(std::uint64_t label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> local(size(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> sub;
  std::vector<std::uint64_t> sub_labels;
  sub_labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    sub_labels.push_back(labels_[v]);
    for (Vertex w : neighbors(v)) {
      if (local[w] != kNoVertex && v < w) sub.emplace_back(static_cast<Vertex>(i), local[w]);
    }
  }
  return from_edges(vertices.size(), sub, std::move(sub_labels));
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::uint32_t> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) throw Error("distance table has wrong size");
}

std::uint32_t DistanceMatrix::diameter() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

std::uint32_t DistanceMatrix::eccentricity(Vertex v) const {
  auto r = row(v);
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

Vertex BfsOrder::ancestor(Vertex v, std::uint32_t k) const {
  for (std::uint32_t i = 0; i < k && v != root; ++i) v = parent[v];
  return v;
}

namespace {

void bfs_into(const Graph& g, Vertex source, std::span<std::uint32_t> dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.size());
  std::vector<Vertex> queue;
  bfs_into(g, source, dist, queue);
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> data(n * n);
  detail::parallel_chunks(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::size_t s = begin; s < end; ++s) {
      bfs_into(g, static_cast<Vertex>(s), std::span(data).subspan(s * n, n), queue);
    }
  });
  for (std::size_t v = 0; v < n; ++v) {
    if (data[v] == kUnreachable) {
      throw Error("graph not connected: no path between " + std::to_string(g.label(0)) + " and " +
                  std::to_string(g.label(static_cast<Vertex>(v))));
    }
  }
  return DistanceMatrix(n, std::move(data));
}

VertexSet ball(const Graph&, const DistanceMatrix& dm, Vertex v, std::uint32_t r) {
  VertexSet out;
  auto row = dm.row(v);
  for (Vertex u = 0; u < row.size(); ++u) {
    if (row[u] <= r) out.push_back(u);
  }
  return out;
}

VertexSet ball_excluding(const Graph& g, Vertex v, std::uint32_t r, Vertex excluded) {
  if (v == excluded) throw Error("ball_excluding: centre equals the excluded vertex");
  std::vector<std::uint32_t> dist(g.size(), kUnreachable);
  std::vector<Vertex> queue{v};
  dist[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] == r) continue;
    for (Vertex w : g.neighbors(u)) {
      if (w != excluded && dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

VertexSet interval(const Graph&, const DistanceMatrix& dm, Vertex u, Vertex v) {
  VertexSet out;
  auto du = dm.row(u);
  auto dv = dm.row(v);
  const std::uint32_t d = du[v];
  for (Vertex x = 0; x < du.size(); ++x) {
    if (du[x] + dv[x] == d) out.push_back(x);
  }
  return out;
}

BfsOrder bfs_order(const Graph& g, Vertex root) {
  const std::size_t n = g.size();
  BfsOrder out;
  out.root = root;
  out.parent.assign(n, kNoVertex);
  out.depth.assign(n, kUnreachable);
  out.rank.assign(n, 0);
  out.order.reserve(n);

  std::vector<Vertex> layer{root};
  out.depth[root] = 0;
  out.parent[root] = root;
  std::uint32_t level = 0;
  while (!layer.empty()) {
    for (Vertex v : layer) {
      out.rank[v] = static_cast<std::uint32_t>(out.order.size());
      out.order.push_back(v);
    }
    std::vector<Vertex> next;
    for (Vertex u : layer) {
      for (Vertex w : g.neighbors(u)) {
        if (out.depth[w] == kUnreachable) {
          out.depth[w] = level + 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (Vertex w : next) {
      for (Vertex p : g.neighbors(w)) {
        if (out.depth[p] == level) {
          out.parent[w] = p;
          break;
        }
      }
    }
    layer = std::move(next);
    ++level;
  }
  if (out.order.size() != n) throw Error("graph not connected");
  return out;
}

}  // namespace hypercop
