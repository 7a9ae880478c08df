#include "hypercop/game.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "hypercop/error.hpp"
#include "hypercop/random.hpp"

namespace hypercop {

Solution::Solution(std::size_t n, std::uint32_t s, std::uint32_t s_prime)
    : n_(n), s_(s), s_prime_(s_prime), steps_(n * n * 2, kNeverCaptured) {}

VertexSet cop_moves(const Graph& g, const DistanceMatrix& dm, const GameState& st, std::uint32_t s_prime) {
  if (st.to_move != Side::Cop) throw Error("cop_moves: robber to move");
  return ball(g, dm, st.cop, s_prime);
}

VertexSet robber_moves(const Graph& g, const GameState& st, std::uint32_t s) {
  if (st.to_move != Side::Robber) throw Error("robber_moves: cop to move");
  if (st.captured()) throw Error("robber_moves: robber already captured");
  return ball_excluding(g, st.robber, s, st.cop);
}

Solution solve_game(const Graph& g, const DistanceMatrix& dm, std::uint32_t s, std::uint32_t s_prime) {
  if (s == 0 || s_prime == 0) throw Error("game speeds must be at least 1");
  const std::size_t n = g.size();
  Solution sol(n, s, s_prime);

  std::vector<VertexSet> cop_ball(n);
  for (Vertex c = 0; c < n; ++c) cop_ball[c] = ball(g, dm, c, s_prime);

  // Robber states resolve once every move is known to lose.
  std::vector<std::uint32_t> pending(n * n, 0);
  for (Vertex c = 0; c < n; ++c) {
    for (Vertex r = 0; r < n; ++r) {
      if (c != r) pending[std::size_t{c} * n + r] = static_cast<std::uint32_t>(ball_excluding(g, r, s, c).size());
    }
  }

  // 0-1 BFS: robber edges cost nothing, cop edges cost one move, so states
  // leave the deque in nondecreasing step order.
  std::deque<GameState> queue;
  for (Vertex c = 0; c < n; ++c) {
    sol.set_steps({c, c, Side::Cop}, 0);
    sol.set_steps({c, c, Side::Robber}, 0);
    queue.push_back({c, c, Side::Robber});
  }
  std::vector<std::uint8_t> done(n * n * 2, 0);
  while (!queue.empty()) {
    GameState st = queue.front();
    queue.pop_front();
    const std::uint32_t value = sol.steps(st);
    if (st.to_move == Side::Robber) {
      // Predecessors: cop states (c0, r) with c in B(c0, s').
      for (Vertex c0 : cop_ball[st.cop]) {
        GameState pred{c0, st.robber, Side::Cop};
        if (pred.captured() || sol.winning(pred)) continue;
        sol.set_steps(pred, value + 1);
        queue.push_back(pred);
      }
    } else {
      if (st.captured()) continue;
      // Predecessors: robber states (c, r0) with r reachable from r0 in G - c.
      for (Vertex r0 : ball_excluding(g, st.robber, s, st.cop)) {
        GameState pred{st.cop, r0, Side::Robber};
        auto& left = pending[std::size_t{st.cop} * n + r0];
        if (left == 0) continue;
        if (--left == 0) {
          sol.set_steps(pred, value);
          queue.push_front(pred);
        }
      }
    }
  }

  if (n == 1) {
    sol.copwin = true;
    sol.best_start = 0;
    return sol;
  }
  for (Vertex c0 = 0; c0 < n && !sol.copwin; ++c0) {
    bool all = true;
    for (Vertex r0 = 0; r0 < n && all; ++r0) {
      if (r0 != c0 && !sol.winning({c0, r0, Side::Cop})) all = false;
    }
    if (all) {
      sol.copwin = true;
      sol.best_start = c0;
    }
  }
  return sol;
}

RobberPolicy parse_robber_policy(const std::string& name) {
  if (name == "greedy-evader") return RobberPolicy::GreedyEvader;
  if (name == "random") return RobberPolicy::Random;
  if (name == "adversarial-optimal") return RobberPolicy::AdversarialOptimal;
  throw Error("unknown robber policy '" + name + "' (greedy-evader, random, adversarial-optimal)");
}

std::string to_string(RobberPolicy p) {
  switch (p) {
    case RobberPolicy::GreedyEvader: return "greedy-evader";
    case RobberPolicy::Random: return "random";
    case RobberPolicy::AdversarialOptimal: return "adversarial-optimal";
  }
  return "unknown";
}

namespace {

/// Picks among candidate robber positions (cop at `cop`, cop to move next).
Vertex choose_robber(const DistanceMatrix& dm, const Solution& sol, Vertex cop, const VertexSet& options,
                     RobberPolicy policy, Rng& rng) {
  if (policy == RobberPolicy::Random) return options[uniform_below(rng, options.size())];
  Vertex best = options.front();
  for (Vertex r : options) {
    const auto sr = sol.steps({cop, r, Side::Cop});
    const auto sb = sol.steps({cop, best, Side::Cop});
    if (sr > sb || (sr == sb && policy == RobberPolicy::AdversarialOptimal && dm(cop, r) > dm(cop, best))) best = r;
  }
  return best;
}

}  // namespace

Transcript simulate(const Graph& g, const DistanceMatrix& dm, std::uint32_t s, std::uint32_t s_prime,
                    const Solution& sol, const SimulateOptions& opts) {
  const std::size_t n = g.size();
  if (sol.size() != n || sol.s() != s || sol.s_prime() != s_prime) {
    throw Error("simulate: solution was computed for different parameters");
  }
  Rng rng(opts.seed);
  Transcript t;
  Vertex cop = opts.cop_start.value_or(sol.best_start.value_or(0));
  if (cop >= n) throw Error("simulate: cop start out of range");
  Vertex robber;
  if (opts.robber_start) {
    robber = *opts.robber_start;
    if (robber >= n) throw Error("simulate: robber start out of range");
  } else if (n == 1) {
    robber = cop;
  } else {
    VertexSet options;
    for (Vertex r = 0; r < n; ++r) {
      if (r != cop) options.push_back(r);
    }
    robber = choose_robber(dm, sol, cop, options, opts.policy, rng);
  }
  t.start = {cop, robber, Side::Cop};
  if (cop == robber) {
    t.captured = t.already_captured = true;
    return t;
  }

  for (std::uint32_t round = 1; round <= opts.max_rounds; ++round) {
    Vertex next = cop;
    for (Vertex c : cop_moves(g, dm, {cop, robber, Side::Cop}, s_prime)) {
      if (sol.steps({c, robber, Side::Robber}) < sol.steps({next, robber, Side::Robber})) next = c;
    }
    // Staying is always legal; prefer the smallest id among equals.
    for (Vertex c : cop_moves(g, dm, {cop, robber, Side::Cop}, s_prime)) {
      if (sol.steps({c, robber, Side::Robber}) == sol.steps({next, robber, Side::Robber})) {
        next = c;
        break;
      }
    }
    cop = next;
    ++t.cop_moves;
    t.moves.push_back({round, cop, robber, Side::Cop});
    if (cop == robber) {
      t.captured = true;
      return t;
    }
    robber = choose_robber(dm, sol, cop, robber_moves(g, {cop, robber, Side::Robber}, s), opts.policy, rng);
    t.moves.push_back({round, cop, robber, Side::Robber});
  }
  return t;
}

std::string transcript_to_json_lines(const Graph& g, const Transcript& t) {
  std::string out;
  for (const auto& e : t.moves) {
    nlohmann::ordered_json j;
    j["round"] = e.round;
    j["cop"] = g.label(e.cop);
    j["robber"] = g.label(e.robber);
    j["mover"] = e.mover == Side::Cop ? "cop" : "robber";
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace hypercop
