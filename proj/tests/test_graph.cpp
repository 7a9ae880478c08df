#include <doctest.h>

#include "corpus.hpp"
#include "helpers.hpp"
#include "hypercop/error.hpp"
#include "oracles.hpp"

using namespace hypercop;

TEST_CASE("graph construction rejects malformed input") {
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges(1, loop), Error);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, dup), Error);
  std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_WITH_AS(Graph::from_edges(4, split), doctest::Contains("not connected"), Error);
  std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(2, out_of_range), Error);
}

TEST_CASE("adjacency is sorted and symmetric") {
  for (const auto& e : corpus::small()) {
    const Graph& g = e.graph();
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) CHECK(g.adjacent(w, v));
      degree_sum += nb.size();
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("distances") {
  SUBCASE("path") {
    auto g = th::path(3);
    auto dm = all_pairs_distances(g);
    CHECK(dm(0, 2) == 2);
  }
  SUBCASE("complete") {
    auto g = th::complete(4);
    auto dm = all_pairs_distances(g);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = 0; v < 4; ++v) CHECK(dm(u, v) == (u == v ? 0u : 1u));
  }
  SUBCASE("subdivided grid diagonal") {
    auto gg = generate({Family::SubdividedGrid, {2}, {}});
    auto dm = all_pairs_distances(gg.graph);
    CHECK(dm(gg.vertex("a"), gg.vertex("c")) == 8);
  }
  SUBCASE("matches Floyd-Warshall on the corpus, any thread count") {
    for (const auto& e : corpus::all()) {
      auto ref = oracle::floyd(e.graph());
      for (unsigned threads : {1u, 3u}) {
        auto dm = all_pairs_distances(e.graph(), threads);
        bool same = true;
        for (Vertex u = 0; u < e.graph().size(); ++u)
          for (Vertex v = 0; v < e.graph().size(); ++v) same = same && dm(u, v) == ref[u][v];
        CHECK_MESSAGE(same, e.name);
      }
    }
  }
  SUBCASE("triangle consistency") {
    for (const auto& e : corpus::small()) {
      auto dm = all_pairs_distances(e.graph());
      const auto n = static_cast<Vertex>(e.graph().size());
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          for (Vertex w = 0; w < n; ++w) {
            auto a = static_cast<std::int64_t>(dm(u, w)) - dm(v, w);
            CHECK(std::abs(a) <= dm(u, v));
          }
    }
  }
}

TEST_CASE("balls") {
  auto c6 = th::cycle(6);
  auto dm = all_pairs_distances(c6);
  CHECK(ball(c6, dm, 0, 0) == VertexSet{0});
  CHECK(ball(c6, dm, 0, 2) == th::set({4, 5, 0, 1, 2}));
  CHECK(ball(c6, dm, 0, 3).size() == 6);
}

TEST_CASE("punctured balls") {
  CHECK(ball_excluding(th::path(3), 0, 2, 1) == VertexSet{0});
  CHECK(ball_excluding(th::cycle(4), 0, 2, 1) == th::set({0, 3, 2}));
  CHECK(ball_excluding(th::cycle(6), 0, 1, 3) == th::set({5, 0, 1}));
  CHECK_THROWS_AS(ball_excluding(th::cycle(4), 1, 2, 1), Error);

  for (const auto& e : corpus::small()) {
    const Graph& g = e.graph();
    for (Vertex x = 0; x < g.size(); ++x) {
      auto d = oracle::floyd(g, x);
      for (Vertex v = 0; v < g.size(); ++v) {
        if (v == x) continue;
        for (std::uint32_t r : {1u, 2u, 3u}) {
          VertexSet expect;
          for (Vertex u = 0; u < g.size(); ++u)
            if (d[v][u] <= r) expect.push_back(u);
          CHECK(ball_excluding(g, v, r, x) == expect);
        }
      }
    }
  }
}

TEST_CASE("intervals") {
  auto c6 = th::cycle(6);
  auto dm = all_pairs_distances(c6);
  CHECK(interval(c6, dm, 2, 2) == VertexSet{2});
  CHECK(interval(c6, dm, 0, 3).size() == 6);
  auto sq = th::grid(2, 2);
  auto dsq = all_pairs_distances(sq);
  CHECK(interval(sq, dsq, 0, 3).size() == 4);
  for (const auto& e : corpus::small()) {
    auto d = all_pairs_distances(e.graph());
    for (Vertex u = 0; u < e.graph().size(); ++u)
      for (Vertex v = 0; v < e.graph().size(); ++v)
        for (Vertex w : interval(e.graph(), d, u, v)) CHECK(d(u, w) <= d(u, v));
  }
}

TEST_CASE("bfs order") {
  auto star = th::edges("0 1\n0 2\n0 3\n");
  auto b = bfs_order(star, 0);
  CHECK(b.order == std::vector<Vertex>{0, 1, 2, 3});

  auto p = th::path(3);
  auto bp = bfs_order(p, 1);
  CHECK(bp.order == std::vector<Vertex>{1, 0, 2});
  CHECK(bp.parent[0] == 1);
  CHECK(bp.parent[2] == 1);
  CHECK(bp.parent[1] == 1);

  for (const auto& e : corpus::all()) {
    const Graph& g = e.graph();
    auto dm = all_pairs_distances(g);
    auto bo = bfs_order(g, 0);
    for (std::size_t i = 1; i < bo.order.size(); ++i) {
      Vertex v = bo.order[i];
      CHECK(dm(0, bo.order[i - 1]) <= dm(0, v));
      CHECK(g.adjacent(v, bo.parent[v]));
      CHECK(dm(0, bo.parent[v]) + 1 == dm(0, v));
      CHECK(bo.ancestor(v, dm(0, v) + 3) == 0);
      CHECK(dm(v, bo.ancestor(v, 2)) == std::min<std::uint32_t>(2, dm(0, v)));
    }
  }
}

TEST_CASE("induced subgraph keeps labels") {
  auto g = th::edges("10 20\n20 30\n30 40\n");
  std::vector<Vertex> keep{2, 1};
  auto sub = g.induced(keep);
  CHECK(sub.size() == 2);
  CHECK(sub.label(0) == 30);
  CHECK(sub.label(1) == 20);
  CHECK(sub.adjacent(0, 1));
  std::vector<Vertex> gap{0, 2};
  CHECK_THROWS_AS(g.induced(gap), Error);
}
