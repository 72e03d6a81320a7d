#pragma once

#include <vector>

#include "scpr/game.hpp"
#include "scpr/solvers.hpp"

namespace scpr::detail {

/**
 * Exact value of a game in which at most one player has a choice at every
 * state (a kernel with one side frozen, or a Markov chain): the probability
 * of reaching a state with payoff 1, maximised by player 1 and minimised by
 * player 2. States that cannot reach the target (or where player 2 can avoid
 * it surely) are found by a graph fixed point and pinned to 0; the rest is
 * solved by policy iteration with sparse LU solves. Throws std::logic_error
 * on a state where both players choose.
 */
ValueVector solve_one_player(const CompiledGame& game);

}  // namespace scpr::detail
