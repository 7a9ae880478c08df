#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hypercop/graph.hpp"

namespace hypercop {

enum class GraphFormat { EdgeList, Dimacs };

GraphFormat parse_format(const std::string& name);

/// edgelist: one "u v" per line with nonnegative integer labels, '#' starts a
/// comment; a line holding a single label declares a vertex (so the one-vertex
/// graph is expressible). Vertex ids follow ascending label order.
/// dimacs: 'c' comment lines, one "p edge n m" header, then m lines "e u v"
/// with 1-based endpoints; labels are the 1-based numbers.
/// Errors are hypercop::ParseError (with line number) or hypercop::Error.
Graph parse_graph(std::string_view text, GraphFormat format);

Graph read_graph_file(const std::string& path, GraphFormat format);

std::string emit_edgelist(const Graph& g);
std::string emit_dimacs(const Graph& g);

/// 64-bit FNV-1a, used to fingerprint inputs in reports.
std::uint64_t fnv1a(std::string_view bytes);

std::string read_file(const std::string& path);

}  // namespace hypercop
