#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "corpus.hpp"
#include "helpers.hpp"
#include "hypercop/dismantle.hpp"
#include "hypercop/error.hpp"
#include "hypercop/game.hpp"
#include "oracles.hpp"

using namespace hypercop;

TEST_CASE("move sets") {
  auto c4 = th::cycle(4);
  auto dm = all_pairs_distances(c4);
  CHECK(cop_moves(c4, dm, {0, 2, Side::Cop}, 1) == th::set({3, 0, 1}));
  CHECK(cop_moves(c4, dm, {0, 2, Side::Cop}, 2).size() == 4);
  auto p = th::path(3);
  CHECK(cop_moves(p, all_pairs_distances(p), {0, 2, Side::Cop}, 2) == th::set({0, 1, 2}));
  CHECK_THROWS_AS(cop_moves(c4, dm, {0, 2, Side::Robber}, 1), Error);

  CHECK(robber_moves(c4, {0, 2, Side::Robber}, 2) == th::set({1, 2, 3}));
  CHECK(robber_moves(p, {1, 0, Side::Robber}, 3) == VertexSet{0});
  auto k5 = th::complete(5);
  CHECK(robber_moves(k5, {2, 4, Side::Robber}, 5) == th::set({0, 1, 3, 4}));
  CHECK_THROWS_AS(robber_moves(c4, {0, 2, Side::Cop}, 1), Error);
  CHECK_THROWS_AS(robber_moves(c4, {1, 1, Side::Robber}, 1), Error);
}

TEST_CASE("solver verdicts") {
  auto solve = [](const Graph& g, std::uint32_t s, std::uint32_t sp) {
    return solve_game(g, all_pairs_distances(g), s, sp);
  };
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CHECK(solve(generate({Family::RandomTree, {12}, seed}).graph, 1, 1).copwin);
  }
  CHECK_FALSE(solve(th::cycle(4), 1, 1).copwin);
  auto single = solve(th::path(1), 1, 1);
  CHECK(single.copwin);
  CHECK(single.best_start == 0u);
  auto k4 = solve(th::complete(4), 1, 1);
  CHECK(k4.copwin);
  CHECK(k4.best_start == 0u);
  CHECK_THROWS_AS(solve(th::cycle(4), 0, 1), Error);
}

TEST_CASE("solution is a fixpoint of one-step expansion") {
  for (const auto& e : corpus::small()) {
    const Graph& g = e.graph();
    if (g.size() > 8) continue;
    auto dm = all_pairs_distances(g);
    for (auto [s, sp] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 2u}}) {
      auto sol = solve_game(g, dm, s, sp);
      for (Vertex c = 0; c < g.size(); ++c)
        for (Vertex r = 0; r < g.size(); ++r) {
          GameState cop{c, r, Side::Cop}, rob{c, r, Side::Robber};
          if (c == r) {
            CHECK(sol.steps(cop) == 0);
            CHECK(sol.steps(rob) == 0);
            continue;
          }
          std::uint32_t best = kNeverCaptured;
          for (Vertex c2 : cop_moves(g, dm, cop, sp)) best = std::min(best, sol.steps({c2, r, Side::Robber}));
          CHECK(sol.steps(cop) == (best == kNeverCaptured ? kNeverCaptured : best + 1));
          std::uint32_t worst = 0;
          for (Vertex r2 : robber_moves(g, rob, s)) worst = std::max(worst, sol.steps({c, r2, Side::Cop}));
          CHECK(sol.steps(rob) == worst);
        }
      CHECK_MESSAGE(sol.copwin == oracle::copwin(g, s, sp), e.name);
    }
  }
}

TEST_CASE("speed monotonicity") {
  for (const auto& e : corpus::small()) {
    const Graph& g = e.graph();
    auto dm = all_pairs_distances(g);
    for (std::uint32_t s = 1; s <= 3; ++s)
      for (std::uint32_t sp = 1; sp <= 3; ++sp) {
        bool win = solve_game(g, dm, s, sp).copwin;
        if (win) CHECK(solve_game(g, dm, s, sp + 1).copwin);
        if (!win) CHECK_FALSE(solve_game(g, dm, s + 1, sp).copwin);
      }
  }
}

TEST_CASE("simulation") {
  auto p = th::path(3);
  auto dp = all_pairs_distances(p);
  auto sol = solve_game(p, dp, 1, 1);
  SimulateOptions opts;
  auto t = simulate(p, dp, 1, 1, sol, opts);
  CHECK(t.captured);
  CHECK(t.cop_moves <= 2);

  auto c4 = th::cycle(4);
  auto dc = all_pairs_distances(c4);
  auto lost = solve_game(c4, dc, 1, 1);
  opts.max_rounds = 50;
  auto t2 = simulate(c4, dc, 1, 1, lost, opts);
  CHECK_FALSE(t2.captured);
  CHECK(t2.cop_moves == 50);
  for (const auto& m : t2.moves) CHECK(m.cop != m.robber);

  opts.cop_start = 1;
  opts.robber_start = 1;
  auto t3 = simulate(c4, dc, 1, 1, lost, opts);
  CHECK(t3.already_captured);
  CHECK(t3.moves.empty());

  CHECK_THROWS_AS(simulate(c4, dc, 2, 1, lost, SimulateOptions{}), Error);
}

TEST_CASE("optimal cops capture within the solved bound") {
  for (const auto& e : corpus::small()) {
    const Graph& g = e.graph();
    auto dm = all_pairs_distances(g);
    auto sol = solve_game(g, dm, 2, 2);
    if (!sol.copwin || g.size() < 2) continue;
    for (auto policy : {RobberPolicy::GreedyEvader, RobberPolicy::Random, RobberPolicy::AdversarialOptimal}) {
      for (Vertex r = 0; r < g.size(); ++r) {
        if (r == *sol.best_start) continue;
        SimulateOptions opts;
        opts.policy = policy;
        opts.seed = r;
        opts.robber_start = r;
        auto t = simulate(g, dm, 2, 2, sol, opts);
        CHECK(t.captured);
        CHECK(t.cop_moves <= sol.steps({*sol.best_start, r, Side::Cop}));
      }
    }
  }
}

TEST_CASE("transcript json lines") {
  auto g = th::edges("5 6\n6 7\n");
  auto dm = all_pairs_distances(g);
  auto sol = solve_game(g, dm, 1, 1);
  SimulateOptions opts;
  opts.cop_start = 0;
  opts.robber_start = 2;
  auto t = simulate(g, dm, 1, 1, sol, opts);
  std::istringstream in(transcript_to_json_lines(g, t));
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("round"));
    CHECK((j["mover"] == "cop" || j["mover"] == "robber"));
    CHECK(j["cop"].get<int>() >= 5);
    ++count;
  }
  CHECK(count == t.moves.size());
  CHECK(parse_robber_policy("random") == RobberPolicy::Random);
  CHECK_THROWS_AS(parse_robber_policy("lazy"), Error);
}
