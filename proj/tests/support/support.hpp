#pragma once
// Graph families, random instances and independent reference oracles shared by
// the unit and acceptance tests. The oracles do not use the game engine or the
// solvers; they re-derive everything from adjacency and the robber's moves.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "scpr/graph.hpp"
#include "scpr/matrix_game.hpp"
#include "scpr/strategy.hpp"

namespace scpr::testing {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Every connected graph on n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs(int n);

// Every connected labelled graph on n vertices (n <= 5).
std::vector<Graph> connected_labelled_graphs(int n);

// Random spanning tree plus each remaining edge with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

RobberStrategy random_oblivious_robber(const Graph& g, std::mt19937_64& rng);
RobberStrategy random_state_robber(const Graph& g, std::mt19937_64& rng);
// Random law at every triple; each support is a random non-empty subset of
// N[x3] with random weights.
RobberStrategy random_markov_robber(const Graph& g, std::mt19937_64& rng);

MatrixGame random_matrix(std::size_t rows, std::size_t cols,
                         std::mt19937_64& rng, bool integer_entries = false);

namespace oracle {

// Classical one-cop, one-adversarial-robber game: the cop picks a start, the
// robber answers, then they alternate (cop first). True iff the cop can
// force capture.
bool one_cop_wins(const Graph& g);

// Minimal capture time of a single cop chasing an oblivious deterministic
// robber that the cop may wait for: min k with dist(c, sigma^k(r)) <= k.
// -1 if never.
int oblivious_capture_time(const Graph& g, const RobberStrategy& sigma,
                           Vertex cop, Vertex robber);

using SeqKey = std::tuple<int, int, int, int>;  // (x1, x2, x3, u)

// Sequential game with a deterministic robber: backward induction over the
// game tree from every position, cut at `depth` turns (a cut play is a C1
// loss). Memoised on (position, remaining depth).
std::map<SeqKey, double> sequential_backward_induction(
    const Graph& g, const RobberStrategy& sigma, int depth);

// Closed-form value of a 2x2 zero-sum game.
double value_2x2(double a, double b, double c, double d);

}  // namespace oracle

}  // namespace scpr::testing
