#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hypercop/graph.hpp"

namespace hypercop {

enum class Side : std::uint8_t { Cop = 0, Robber = 1 };

struct GameState {
  Vertex cop = 0;
  Vertex robber = 0;
  Side to_move = Side::Cop;

  bool captured() const { return cop == robber; }
  bool operator==(const GameState&) const = default;
};

inline constexpr std::uint32_t kNeverCaptured = std::numeric_limits<std::uint32_t>::max();

/// Solved (s, s') game. steps counts cop moves until capture under optimal
/// play on both sides; kNeverCaptured on robber-win states.
class Solution {
 public:
  Solution() = default;
  Solution(std::size_t n, std::uint32_t s, std::uint32_t s_prime);

  std::size_t size() const { return n_; }
  std::uint32_t s() const { return s_; }
  std::uint32_t s_prime() const { return s_prime_; }

  bool winning(const GameState& st) const { return steps(st) != kNeverCaptured; }
  std::uint32_t steps(const GameState& st) const { return steps_[index(st)]; }
  void set_steps(const GameState& st, std::uint32_t v) { steps_[index(st)] = v; }

  bool copwin = false;
  std::optional<Vertex> best_start;

 private:
  std::size_t index(const GameState& st) const {
    return (std::size_t{st.cop} * n_ + st.robber) * 2 + static_cast<std::size_t>(st.to_move);
  }

  std::size_t n_ = 0;
  std::uint32_t s_ = 0;
  std::uint32_t s_prime_ = 0;
  std::vector<std::uint32_t> steps_;
};

/// B(cop, s'); staying put is allowed.
VertexSet cop_moves(const Graph& g, const DistanceMatrix& dm, const GameState& st, std::uint32_t s_prime);

/// Vertices within s hops of the robber in G - cop, robber included.
VertexSet robber_moves(const Graph& g, const GameState& st, std::uint32_t s);

/// Retrograde analysis over all (cop, robber, side) states.
Solution solve_game(const Graph& g, const DistanceMatrix& dm, std::uint32_t s, std::uint32_t s_prime);

enum class RobberPolicy { GreedyEvader, Random, AdversarialOptimal };

RobberPolicy parse_robber_policy(const std::string& name);
std::string to_string(RobberPolicy p);

struct SimulateOptions {
  RobberPolicy policy = RobberPolicy::AdversarialOptimal;
  std::uint64_t seed = 0;
  std::uint32_t max_rounds = 1000;
  /// Cop start; defaults to best_start, else vertex 0.
  std::optional<Vertex> cop_start;
  /// Robber start; defaults to the policy's choice.
  std::optional<Vertex> robber_start;
};

struct TranscriptEntry {
  std::uint32_t round = 0;
  Vertex cop = 0;
  Vertex robber = 0;
  Side mover = Side::Cop;
};

struct Transcript {
  GameState start;
  std::vector<TranscriptEntry> moves;
  bool captured = false;
  bool already_captured = false;
  std::uint32_t cop_moves = 0;
};

/// Plays the game from the chosen start: the cop minimizes steps (smallest id
/// on ties), the robber follows `policy`.
Transcript simulate(const Graph& g, const DistanceMatrix& dm, std::uint32_t s, std::uint32_t s_prime,
                    const Solution& sol, const SimulateOptions& opts);

/// One JSON object per line: {"round", "cop", "robber", "mover"}, vertex labels.
std::string transcript_to_json_lines(const Graph& g, const Transcript& t);

}  // namespace hypercop
