#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scpr/graph.hpp"
#include "scpr/state.hpp"
#include "scpr/strategy.hpp"

namespace scpr {

// The null move, the only action at capture states and at the terminal.
inline constexpr Vertex kNullMove = 0;

template <class State>
using TransitionDistribution = std::vector<std::pair<State, double>>;

// Ordered state list, lexicographic by (x1, x2, x3[, u]), terminal last.
std::vector<SeqState> enumerate_seq_states(const Graph& g);
std::vector<ConcState> enumerate_conc_states(const Graph& g);

// Player's legal moves: N[x_player] when it is that player's turn (always,
// concurrently), {x_player} when waiting, {kNullMove} at capture/terminal.
VertexSet legal_actions(const Graph& g, const SeqState& s, int player);
VertexSet legal_actions(const Graph& g, const ConcState& s, int player);

// One sequential turn. At u=1 only C1 moves; at u=2 C2 moves and then the
// robber moves by sigma evaluated at (x1, a2, x3), unless C2 landed on the
// robber, which freezes it. Throws std::invalid_argument on illegal actions.
TransitionDistribution<SeqState> seq_transition(const Graph& g,
                                                const RobberStrategy& sigma,
                                                const SeqState& s,
                                                Vertex action);

// One concurrent turn. All three tokens move at once; the robber's law is
// sigma at (x1, x2, x3). A cop captures if it ends on the robber's
// destination or swaps an edge with the robber (the robber is swept to the
// cop's destination). If both cops capture in the same turn the capture is
// credited to C1. Equal successors are merged.
TransitionDistribution<ConcState> conc_transition(const Graph& g,
                                                  const RobberStrategy& sigma,
                                                  const ConcState& s,
                                                  Vertex a1, Vertex a2);

/**
 * Flat kernel of a two-player stochastic game over dense state indices.
 *
 * Per state: player-1 actions act1[act1_off[s] .. act1_off[s+1]), player-2
 * actions likewise, and an m1 x m2 block of action pairs (row-major, player-1
 * major) starting at pair_off[s]. Pair p has successors
 * succ[succ_off[p] .. succ_off[p+1]) with probabilities prob[...], sorted by
 * index. A side with a single action is not a decision for that player.
 */
struct CompiledGame {
  StateIndex index{1, Variant::Sequential};
  std::vector<double> payoff;  // q(s)
  std::vector<std::uint32_t> act1_off, act2_off;
  std::vector<Vertex> act1, act2;
  std::vector<std::uint32_t> pair_off;
  std::vector<std::uint32_t> succ_off;
  std::vector<std::uint32_t> succ;
  std::vector<double> prob;
  bool deterministic = true;  // every pair has exactly one successor

  std::size_t size() const { return payoff.size(); }
  std::size_t rows(std::size_t s) const { return act1_off[s + 1] - act1_off[s]; }
  std::size_t cols(std::size_t s) const { return act2_off[s + 1] - act2_off[s]; }
  std::span<const Vertex> actions1(std::size_t s) const {
    return {act1.data() + act1_off[s], rows(s)};
  }
  std::span<const Vertex> actions2(std::size_t s) const {
    return {act2.data() + act2_off[s], cols(s)};
  }
  std::size_t pair(std::size_t s, std::size_t i, std::size_t j) const {
    return pair_off[s] + i * cols(s) + j;
  }
  // Expected next value sum_{s'} P(s'|pair) v(s') in stored order.
  double expect(std::size_t pair, const double* v) const {
    double acc = 0.0;
    for (std::uint32_t k = succ_off[pair]; k < succ_off[pair + 1]; ++k)
      acc += prob[k] * v[succ[k]];
    return acc;
  }
};

CompiledGame compile_game(const Graph& g, const RobberStrategy& sigma,
                          Variant variant);

// Folds a stationary cop policy into the kernel: the policy's player is left
// with a single action at every state and the successor laws are mixed
// accordingly. Used for best responses and policy evaluation.
CompiledGame freeze_policy(const CompiledGame& game, const CopPolicy& policy);

}  // namespace scpr
