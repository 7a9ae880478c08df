#include "hypercop/filling.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "hypercop/error.hpp"

namespace hypercop {

namespace {

/// Walks from x towards y, always stepping to the smallest-id neighbour one
/// hop closer to y.
std::vector<Vertex> smallest_id_geodesic(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y) {
  std::vector<Vertex> path{x};
  while (path.back() != y) {
    Vertex cur = path.back();
    Vertex next = kNoVertex;
    for (Vertex w : g.neighbors(cur)) {
      if (dm(w, y) + 1 == dm(cur, y)) {
        next = w;
        break;
      }
    }
    if (next == kNoVertex) throw InternalError("no neighbour closer to the target");
    path.push_back(next);
  }
  return path;
}

struct BoundaryPoint {
  std::size_t disc;
  Vertex host;
};

}  // namespace

void check_loop(const Graph& g, const Loop& loop) {
  const auto& vs = loop.vertices;
  if (vs.empty()) throw Error("loop is empty");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (a >= g.size() || b >= g.size()) throw Error("loop vertex out of range");
    if (a != b && !g.adjacent(a, b)) {
      throw Error("loop step " + std::to_string(i) + " is not an edge: " + std::to_string(g.label(a)) + " " +
                  std::to_string(g.label(b)));
    }
  }
}

Shortcut find_shortcut(const Graph& g, const DistanceMatrix& dm, const Loop& loop, const EliminationOrder& ord) {
  if (!ord.star || ord.s_prime >= ord.s) throw Error("shortcuts need a star order with s' < s");
  const std::size_t n = loop.length();
  if (n <= 2 * std::size_t{ord.s + ord.s_prime}) throw Error("loop too short for a shortcut");
  auto rank = ord.ranks();

  std::size_t top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (rank[loop.vertices[i]] > rank[loop.vertices[top]]) top = i;
  }
  // n > 2s + 2, so positions top -/+ s never coincide; indices wrap.
  Shortcut cut;
  cut.p = (top + n - ord.s) % n;
  cut.q = (top + ord.s) % n;
  Vertex x = loop.vertices[cut.p], y = loop.vertices[cut.q];
  if (dm(x, y) > 2 * ord.s_prime) {
    throw Error("order is not a valid (s,s')*-dismantling order: shortcut of length " + std::to_string(dm(x, y)) +
                " exceeds 2s'");
  }
  cut.geodesic = smallest_id_geodesic(g, dm, x, y);
  return cut;
}

Filling build_filling(const Graph& g, const DistanceMatrix& dm, const Loop& loop, const EliminationOrder& ord) {
  check_loop(g, loop);
  if (!ord.star || ord.s_prime >= ord.s) throw Error("fillings need a star order with s' < s");
  const std::size_t n = loop.length();
  const std::size_t face_cap = 2 * std::size_t{ord.s + ord.s_prime};

  Filling f;
  f.n_param = ord.s + ord.s_prime;
  f.disc_vertex_count = n;
  f.phi = loop.vertices;
  f.external.resize(n);
  std::vector<BoundaryPoint> residual(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.external[i] = i;
    residual[i] = {i, loop.vertices[i]};
  }

  while (residual.size() > face_cap) {
    Loop current;
    current.vertices.reserve(residual.size());
    for (const auto& b : residual) current.vertices.push_back(b.host);
    Shortcut cut = find_shortcut(g, dm, current, ord);

    const std::size_t len = residual.size();
    std::vector<BoundaryPoint> chord;  // interior geodesic vertices, x side first
    for (std::size_t k = 1; k + 1 < cut.geodesic.size(); ++k) {
      chord.push_back({f.disc_vertex_count++, cut.geodesic[k]});
      f.phi.push_back(cut.geodesic[k]);
    }

    // New face: x' .. y' along the residual, then back along the chord.
    std::vector<std::size_t> face;
    for (std::size_t k = 0; k <= 2 * std::size_t{ord.s}; ++k) face.push_back(residual[(cut.p + k) % len].disc);
    for (auto it = chord.rbegin(); it != chord.rend(); ++it) face.push_back(it->disc);
    f.faces.push_back(std::move(face));

    // Residual: y' .. x' the long way round, then the chord from x' to y'.
    std::vector<BoundaryPoint> next;
    next.reserve(len - 2 * ord.s + chord.size() + 1);
    for (std::size_t k = 0; k <= len - 2 * std::size_t{ord.s}; ++k) next.push_back(residual[(cut.q + k) % len]);
    next.insert(next.end(), chord.begin(), chord.end());
    if (next.size() + 2 * (ord.s - ord.s_prime) > len) {
      throw InternalError("cut did not shorten the residual loop by 2(s - s')");
    }
    residual = std::move(next);
  }

  std::vector<std::size_t> last;
  for (const auto& b : residual) last.push_back(b.disc);
  f.faces.push_back(std::move(last));
  return f;
}

FillingReport validate_filling(const Graph& g, const DistanceMatrix&, const Loop& loop, const Filling& f,
                               std::uint32_t n_param, std::uint64_t k_num, std::uint64_t k_den) {
  FillingReport rep;
  auto fail = [&](std::string what) { rep.failures.push_back(std::move(what)); };
  rep.faces = f.faces.size();
  for (const auto& face : f.faces) rep.max_face = std::max(rep.max_face, face.size());
  rep.area_bound = k_den == 0 ? 0 : static_cast<std::size_t>((k_num * loop.length() + k_den - 1) / k_den);

  if (f.phi.size() != f.disc_vertex_count) fail("phi does not cover every disc vertex");
  auto valid_disc = [&](std::size_t d) { return d < f.disc_vertex_count && d < f.phi.size(); };
  auto valid_cycle = [&](const std::vector<std::size_t>& cyc) {
    return !cyc.empty() && std::all_of(cyc.begin(), cyc.end(), valid_disc);
  };

  if (f.faces.empty()) fail("filling has no internal face");
  if (k_den == 0) fail("area constant has zero denominator");
  else if (rep.faces > rep.area_bound) {
    fail("area: " + std::to_string(rep.faces) + " faces exceed bound " + std::to_string(rep.area_bound));
  }

  // F3: boundary is a simple cycle tracing the loop.
  if (f.external.size() != loop.length()) {
    fail("boundary length " + std::to_string(f.external.size()) + " differs from loop length " +
         std::to_string(loop.length()));
  } else if (valid_cycle(f.external)) {
    if (std::set<std::size_t>(f.external.begin(), f.external.end()).size() != f.external.size()) {
      fail("boundary is not a simple cycle");
    }
    for (std::size_t i = 0; i < f.external.size(); ++i) {
      if (f.phi[f.external[i]] != loop.vertices[i]) {
        fail("boundary vertex " + std::to_string(i) + " does not map onto the loop");
        break;
      }
    }
  } else {
    fail("boundary refers to unknown disc vertices");
  }

  // F2 and non-expansiveness.
  std::size_t edge_sides = f.external.size();
  for (std::size_t k = 0; k < f.faces.size(); ++k) {
    const auto& face = f.faces[k];
    edge_sides += face.size();
    if (face.size() > 2 * std::size_t{n_param}) {
      fail("face " + std::to_string(k) + " has " + std::to_string(face.size()) + " sides, more than 2N = " +
           std::to_string(2 * n_param));
    }
    if (!valid_cycle(face)) {
      fail("face " + std::to_string(k) + " refers to unknown disc vertices");
      continue;
    }
    if (std::set<std::size_t>(face.begin(), face.end()).size() != face.size()) {
      fail("face " + std::to_string(k) + " is not a simple cycle");
    }
  }
  auto check_edges = [&](const std::vector<std::size_t>& cyc, const std::string& where) {
    if (!valid_cycle(cyc)) return;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Vertex a = f.phi[cyc[i]], b = f.phi[(cyc[(i + 1) % cyc.size()])];
      if (a >= g.size() || b >= g.size() || (a != b && !g.adjacent(a, b))) {
        fail("phi expands an edge of " + where);
        return;
      }
    }
  };
  check_edges(f.external, "the boundary");
  for (std::size_t k = 0; k < f.faces.size(); ++k) check_edges(f.faces[k], "face " + std::to_string(k));

  // Every edge borders exactly two faces (external included): V - E + F = 2.
  if (edge_sides % 2 != 0) {
    fail("face boundaries do not pair up into edges");
  } else {
    const auto v = static_cast<std::int64_t>(f.disc_vertex_count);
    const auto e = static_cast<std::int64_t>(edge_sides / 2);
    const auto fc = static_cast<std::int64_t>(f.faces.size()) + 1;
    if (v - e + fc != 2) fail("Euler characteristic is " + std::to_string(v - e + fc) + ", not 2");
  }
  return rep;
}

std::string filling_to_json(const Graph& g, const Filling& f) {
  nlohmann::ordered_json j;
  j["n"] = f.disc_vertex_count;
  j["external"] = f.external;
  j["faces"] = f.faces;
  std::vector<std::uint64_t> phi;
  phi.reserve(f.phi.size());
  for (Vertex v : f.phi) phi.push_back(g.label(v));
  j["phi"] = phi;
  return j.dump();
}

}  // namespace hypercop
