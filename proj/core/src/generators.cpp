#include "hypercop/generators.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hypercop/error.hpp"
#include "hypercop/io.hpp"
#include "hypercop/random.hpp"

namespace hypercop {

namespace {

constexpr std::array<std::pair<const char*, Family>, 9> kFamilies{{
    {"path", Family::Path},
    {"cycle", Family::Cycle},
    {"complete", Family::Complete},
    {"grid", Family::Grid},
    {"subdivided_grid", Family::SubdividedGrid},
    {"hypercube", Family::Hypercube},
    {"random_tree", Family::RandomTree},
    {"random_gnp", Family::RandomGnp},
    {"random_block", Family::RandomBlock},
}};

constexpr std::uint64_t kMaxVertices = 1u << 22;
constexpr int kGnpAttempts = 64;

void expect_arity(const FamilySpec& spec, std::size_t k) {
  if (spec.params.size() != k) {
    throw Error(family_name(spec.family) + " takes " + std::to_string(k) + " parameter(s), got " +
                std::to_string(spec.params.size()));
  }
}

void expect_range(const std::string& what, std::uint64_t v, std::uint64_t lo, std::uint64_t hi) {
  if (v < lo || v > hi) {
    throw Error(what + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                std::to_string(v));
  }
}

GeneratedGraph plain(std::size_t n, const std::vector<Edge>& edges) {
  return {Graph::from_edges(n, edges), {}};
}

GeneratedGraph subdivided_grid(std::uint64_t side) {
  const std::uint64_t len = side * side;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Vertex> id;
  for (std::uint64_t y = 0; y <= len; ++y) {
    for (std::uint64_t x = 0; x <= len; ++x) {
      if (x % side == 0 || y % side == 0) id.emplace(std::pair{x, y}, static_cast<Vertex>(id.size()));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [p, v] : id) {
    auto [x, y] = p;
    if (auto it = id.find({x + 1, y}); it != id.end() && y % side == 0) edges.emplace_back(v, it->second);
    if (auto it = id.find({x, y + 1}); it != id.end() && x % side == 0) edges.emplace_back(v, it->second);
  }
  GeneratedGraph gg{Graph::from_edges(id.size(), edges), {}};
  gg.named = {{"a", id.at({0, 0})}, {"b", id.at({len, 0})}, {"c", id.at({len, len})}, {"d", id.at({0, len})}};
  return gg;
}

std::vector<Edge> gnp_edges(std::uint64_t n, std::uint64_t p_num, std::uint64_t p_den, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_below(rng, p_den) < p_num) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

Vertex GeneratedGraph::vertex(const std::string& name) const {
  for (const auto& [k, v] : named) {
    if (k == name) return v;
  }
  throw Error("no vertex named '" + name + "'");
}

Family parse_family(const std::string& name) {
  for (const auto& [k, f] : kFamilies) {
    if (name == k) return f;
  }
  throw Error("unknown graph family '" + name + "'");
}

std::string family_name(Family f) {
  for (const auto& [k, v] : kFamilies) {
    if (v == f) return k;
  }
  return "unknown";
}

bool is_random(Family f) {
  return f == Family::RandomTree || f == Family::RandomGnp || f == Family::RandomBlock;
}

GeneratedGraph generate(const FamilySpec& spec) {
  if (is_random(spec.family) && !spec.seed) throw Error(family_name(spec.family) + " needs a seed");
  const auto& p = spec.params;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path: {
      expect_arity(spec, 1);
      expect_range("path length", p[0], 1, kMaxVertices);
      for (Vertex v = 0; v + 1 < p[0]; ++v) edges.emplace_back(v, v + 1);
      return plain(p[0], edges);
    }
    case Family::Cycle: {
      expect_arity(spec, 1);
      expect_range("cycle length", p[0], 3, kMaxVertices);
      for (Vertex v = 0; v < p[0]; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % p[0]));
      return plain(p[0], edges);
    }
    case Family::Complete: {
      expect_arity(spec, 1);
      expect_range("clique size", p[0], 1, 4096);
      for (Vertex u = 0; u < p[0]; ++u) {
        for (Vertex v = u + 1; v < p[0]; ++v) edges.emplace_back(u, v);
      }
      return plain(p[0], edges);
    }
    case Family::Grid: {
      expect_arity(spec, 2);
      expect_range("grid width", p[0], 1, kMaxVertices);
      expect_range("grid height", p[1], 1, kMaxVertices / p[0]);
      const auto w = static_cast<Vertex>(p[0]), h = static_cast<Vertex>(p[1]);
      for (Vertex y = 0; y < h; ++y) {
        for (Vertex x = 0; x < w; ++x) {
          if (x + 1 < w) edges.emplace_back(y * w + x, y * w + x + 1);
          if (y + 1 < h) edges.emplace_back(y * w + x, (y + 1) * w + x);
        }
      }
      return plain(std::size_t{w} * h, edges);
    }
    case Family::SubdividedGrid: {
      expect_arity(spec, 1);
      expect_range("subdivided grid side", p[0], 1, 40);
      return subdivided_grid(p[0]);
    }
    case Family::Hypercube: {
      expect_arity(spec, 1);
      expect_range("hypercube dimension", p[0], 0, 20);
      const Vertex n = Vertex{1} << p[0];
      for (Vertex v = 0; v < n; ++v) {
        for (std::uint64_t b = 0; b < p[0]; ++b) {
          Vertex w = v ^ (Vertex{1} << b);
          if (v < w) edges.emplace_back(v, w);
        }
      }
      return plain(n, edges);
    }
    case Family::RandomTree: {
      expect_arity(spec, 1);
      expect_range("tree size", p[0], 1, kMaxVertices);
      Rng rng(*spec.seed);
      for (Vertex v = 1; v < p[0]; ++v) edges.emplace_back(static_cast<Vertex>(uniform_below(rng, v)), v);
      return plain(p[0], edges);
    }
    case Family::RandomGnp: {
      expect_arity(spec, 3);
      expect_range("gnp size", p[0], 1, 20000);
      expect_range("gnp denominator", p[2], 1, std::uint64_t{1} << 32);
      expect_range("gnp numerator", p[1], 0, p[2]);
      for (int attempt = 0; attempt < kGnpAttempts; ++attempt) {
        Rng rng(attempt == 0 ? *spec.seed : derive_seed(*spec.seed, attempt));
        edges = gnp_edges(p[0], p[1], p[2], rng);
        if (!find_disconnected_pair(p[0], edges)) return plain(p[0], edges);
      }
      throw Error("random_gnp: no connected sample after " + std::to_string(kGnpAttempts) + " attempts");
    }
    case Family::RandomBlock: {
      expect_arity(spec, 2);
      expect_range("block count", p[0], 1, 100000);
      expect_range("max block size", p[1], 2, 64);
      Rng rng(*spec.seed);
      Vertex n = 1;
      for (std::uint64_t b = 0; b < p[0]; ++b) {
        // New clique glued to the existing graph at one cut vertex.
        const Vertex cut = static_cast<Vertex>(uniform_below(rng, n));
        const auto size = static_cast<Vertex>(2 + uniform_below(rng, p[1] - 1));
        std::vector<Vertex> block{cut};
        for (Vertex k = 1; k < size; ++k) block.push_back(n++);
        for (std::size_t i = 0; i < block.size(); ++i) {
          for (std::size_t j = i + 1; j < block.size(); ++j) edges.emplace_back(block[i], block[j]);
        }
      }
      return plain(n, edges);
    }
  }
  throw Error("unknown graph family");
}

std::string to_edgelist(const GeneratedGraph& gg) {
  std::string out;
  for (const auto& [name, v] : gg.named) out += "# " + name + " = " + std::to_string(gg.graph.label(v)) + "\n";
  return out + emit_edgelist(gg.graph);
}

}  // namespace hypercop
