#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "scpr/graph.hpp"
#include "scpr/state.hpp"

namespace scpr {

// Sparse move distribution: (destination, probability) pairs with positive
// probability, sorted by destination.
using MoveDistribution = std::vector<std::pair<Vertex, double>>;

inline constexpr double kDistributionTolerance = 1e-12;

enum class RobberKind { ObliviousDeterministic, StateDeterministic, StationaryMarkov };

const char* to_string(RobberKind k);

using Triple = std::tuple<Vertex, Vertex, Vertex>;  // (x1, x2, x3)

/**
 * The robber's fixed, publicly known stationary Markovian strategy.
 *
 * Oblivious strategies map the robber's own vertex to a destination;
 * state-deterministic and Markov strategies are keyed on the cop-inclusive
 * triple (x1, x2, x3). Every state not listed stays put. All destinations
 * are validated against N[x3] at construction.
 */
class RobberStrategy {
 public:
  // The robber never moves (oblivious identity).
  static RobberStrategy stay(const Graph& g);

  // moves[x-1] is the destination from x; must have n entries.
  static RobberStrategy oblivious(const Graph& g, std::vector<Vertex> moves);

  static RobberStrategy state_deterministic(const Graph& g,
                                            std::map<Triple, Vertex> moves);

  // Entries with zero probability are dropped; each listed distribution
  // must be non-negative and sum to one within kDistributionTolerance.
  static RobberStrategy markov(const Graph& g,
                               std::map<Triple, MoveDistribution> moves);

  RobberKind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  bool is_oblivious() const { return kind_ == RobberKind::ObliviousDeterministic; }
  // True for kinds 1-2 and for Markov strategies whose entries are all
  // point masses.
  bool is_deterministic() const;

  MoveDistribution distribution(Vertex x1, Vertex x2, Vertex x3) const;

  // Destination of a deterministic strategy. Throws std::logic_error if the
  // distribution at that state is not a point mass.
  Vertex deterministic_move(Vertex x1, Vertex x2, Vertex x3) const;

  // Destination of an oblivious strategy from x3.
  Vertex oblivious_move(Vertex x3) const;

  std::string to_text() const;

 private:
  RobberStrategy(RobberKind kind, int n) : kind_(kind), n_(n) {}

  RobberKind kind_;
  int n_;
  std::vector<Vertex> oblivious_;              // kind 1
  std::map<Triple, Vertex> state_moves_;       // kind 2
  std::map<Triple, MoveDistribution> dists_;   // kind 3
};

// Parses `robber <oblivious|state|markov>` followed by `m`/`p` lines.
RobberStrategy load_robber_strategy(std::string_view text, const Graph& g);
RobberStrategy load_robber_strategy_file(const std::string& path,
                                         const Graph& g);

// robber_move_distribution(sigma, x1, x2, x3): always supported on N[x3].
inline MoveDistribution robber_move_distribution(const RobberStrategy& sigma,
                                                 Vertex x1, Vertex x2,
                                                 Vertex x3) {
  return sigma.distribution(x1, x2, x3);
}

enum class PolicyKind { Deterministic, Mixed };

/**
 * Stationary Markovian cop strategy over the whole state space of one
 * variant. Unset entries mean "stay". A policy may hold illegal moves;
 * validate_policy reports them.
 */
class CopPolicy {
 public:
  CopPolicy(int player, PolicyKind kind, Variant variant, int n);

  // Every decision state stays put.
  static CopPolicy stay(int player, Variant variant, int n);

  int player() const { return player_; }
  PolicyKind kind() const { return kind_; }
  Variant variant() const { return index_.variant(); }
  const StateIndex& states() const { return index_; }

  void set_move(std::size_t state, Vertex dest);
  void set_distribution(std::size_t state, MoveDistribution dist);

  // The cop's own vertex at `state` (the "stay" move).
  Vertex own_vertex(std::size_t state) const;

  // Move law at a decision state. Unset entries return a point mass on the
  // cop's own vertex.
  MoveDistribution distribution(std::size_t state) const;

  // Deterministic policies only.
  Vertex move(std::size_t state) const;

  // Mixed policies only: the stored weights as given (empty when unset).
  const MoveDistribution& raw_distribution(std::size_t state) const {
    return mixed_.at(state);
  }

  friend bool operator==(const CopPolicy&, const CopPolicy&) = default;

 private:
  int player_;
  PolicyKind kind_;
  StateIndex index_;
  std::vector<Vertex> moves_;               // 0 = unset
  std::vector<MoveDistribution> mixed_;     // empty = unset
};

// Returns every violation found (empty = ok): wrong variant or graph size,
// moves outside the player's closed neighbourhood, negative weights, and
// distributions not summing to one within kDistributionTolerance.
std::vector<std::string> validate_policy(const CopPolicy& policy,
                                         const Graph& g, Variant variant);

// Policy text: a `cop <player> <deterministic|mixed>` header followed by
// `m x1 x2 x3 [u] dest` or `p x1 x2 x3 [u] dest prob` lines (u only for
// the sequential variant). Only decision states are written.
std::string policy_to_text(const CopPolicy& policy);

// Parses one or more policy sections.
std::vector<CopPolicy> load_cop_policies(std::string_view text, const Graph& g,
                                         Variant variant);

}  // namespace scpr
