#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercop/dismantle.hpp"
#include "hypercop/graph.hpp"

namespace hypercop {

/// Closed walk (v_0, ..., v_{n-1}, v_0); consecutive entries are equal or
/// adjacent, wrap-around included.
struct Loop {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
};

/// Throws hypercop::Error if the loop is empty or has a non-edge step.
void check_loop(const Graph& g, const Loop& loop);

/// Planar disc D given by its faces, plus a vertex map phi: D -> G.
/// Disc vertices are 0..disc_vertex_count-1; `external` lists the boundary
/// cycle and entry i maps onto loop vertex i.
struct Filling {
  std::size_t disc_vertex_count = 0;
  std::vector<std::size_t> external;
  std::vector<std::vector<std::size_t>> faces;
  std::vector<Vertex> phi;
  std::uint32_t n_param = 0;  // declared N: faces have at most 2N sides
};

struct Shortcut {
  std::size_t p = 0;  // loop position of x
  std::size_t q = 0;  // (p + 2s) mod length
  std::vector<Vertex> geodesic;  // x ... y, length <= 2s'
};

/// Finds positions p, q = p + 2s (mod n) around the order-largest loop vertex
/// whose images are within 2s'. Needs a star order with s' < s and a loop
/// longer than 2(s + s'); throws if the order fails to deliver the bound.
Shortcut find_shortcut(const Graph& g, const DistanceMatrix& dm, const Loop& loop, const EliminationOrder& ord);

/// Fills the loop by repeatedly cutting off a face of at most 2(s + s')
/// sides along a shortcut. Result has at most ceil(len / 2(s - s')) faces.
Filling build_filling(const Graph& g, const DistanceMatrix& dm, const Loop& loop, const EliminationOrder& ord);

struct FillingReport {
  std::vector<std::string> failures;
  std::size_t faces = 0;
  std::size_t max_face = 0;
  std::size_t area_bound = 0;

  bool ok() const { return failures.empty(); }
};

/// Checks face sizes against 2N, boundary correspondence with the loop,
/// non-expansiveness of phi, Euler's formula, and faces <= ceil(K * len)
/// with K = k_num / k_den.
FillingReport validate_filling(const Graph& g, const DistanceMatrix& dm, const Loop& loop, const Filling& f,
                               std::uint32_t n_param, std::uint64_t k_num, std::uint64_t k_den);

/// {"n": .., "external": [..], "faces": [[..]..], "phi": [..]}; phi entries are
/// host vertex labels.
std::string filling_to_json(const Graph& g, const Filling& f);

}  // namespace hypercop
