#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercop/graph.hpp"

namespace hypercop {

enum class Family { Path, Cycle, Complete, Grid, SubdividedGrid, Hypercube, RandomTree, RandomGnp, RandomBlock };

/// Parameters per family:
///   path n | cycle n | complete n | grid w h | subdivided_grid N | hypercube d
///   random_tree n | random_gnp n p_num p_den | random_block blocks max_block_size
struct FamilySpec {
  Family family = Family::Path;
  std::vector<std::uint64_t> params;
  std::optional<std::uint64_t> seed;
};

struct GeneratedGraph {
  Graph graph;
  /// Distinguished vertices, e.g. the corners a, b, c, d of a subdivided grid.
  std::vector<std::pair<std::string, Vertex>> named;

  Vertex vertex(const std::string& name) const;
};

Family parse_family(const std::string& name);
std::string family_name(Family f);
bool is_random(Family f);

/// Throws hypercop::Error on wrong arity, out-of-range parameters or a
/// missing seed for a random family.
GeneratedGraph generate(const FamilySpec& spec);

/// Edge list preceded by "# name = label" comment lines.
std::string to_edgelist(const GeneratedGraph& gg);

}  // namespace hypercop
