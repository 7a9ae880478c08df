#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hypercop/generators.hpp"
#include "hypercop/graph.hpp"
#include "hypercop/io.hpp"

namespace th {

inline hypercop::Graph path(std::size_t n) { return hypercop::generate({hypercop::Family::Path, {n}, {}}).graph; }
inline hypercop::Graph cycle(std::size_t n) { return hypercop::generate({hypercop::Family::Cycle, {n}, {}}).graph; }
inline hypercop::Graph complete(std::size_t n) {
  return hypercop::generate({hypercop::Family::Complete, {n}, {}}).graph;
}
inline hypercop::Graph grid(std::size_t w, std::size_t h) {
  return hypercop::generate({hypercop::Family::Grid, {w, h}, {}}).graph;
}
inline hypercop::Graph hypercube(std::size_t d) {
  return hypercop::generate({hypercop::Family::Hypercube, {d}, {}}).graph;
}
inline hypercop::Graph edges(const std::string& text) {
  return hypercop::parse_graph(text, hypercop::GraphFormat::EdgeList);
}

inline hypercop::VertexSet set(std::vector<hypercop::Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace th
