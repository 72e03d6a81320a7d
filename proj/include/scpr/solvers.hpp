#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "scpr/game.hpp"
#include "scpr/graph.hpp"
#include "scpr/state.hpp"
#include "scpr/strategy.hpp"

namespace scpr {

struct IterationOptions {
  double tol = 1e-10;
  std::size_t max_iter = 0;  // 0: ten times the number of states
  unsigned threads = 1;      // Jacobi sweeps; results do not depend on this
  bool keep_history = false; // store every iterate (for monotonicity audits)
};

// Values per state index plus convergence metadata.
struct ValueVector {
  std::vector<double> values;
  std::size_t iterations = 0;
  double residual = 0.0;  // sup-norm change of the last sweep
  bool converged = false;
  // Largest violation of 0 <= v(i-1) <= v(i) <= 1 seen over all sweeps.
  double monotone_violation = 0.0;
  std::vector<std::vector<double>> history;  // v(0), v(1), ... if requested

  double operator[](std::size_t s) const { return values[s]; }
  std::size_t size() const { return values.size(); }
};

struct SolveReport {
  ValueVector values;
  CopPolicy policy1;
  CopPolicy policy2;
  double optimality_residual = 0.0;
  double epsilon = 0.0;
  bool epsilon_certified = false;
};

/**
 * Value iteration for a positive stochastic game from v(0) = q:
 *
 *   v(i)(s) = Val[ q(s) + sum_{s'} P(s'|s,a1,a2) v(i-1)(s') ]
 *
 * where Val is a plain max (only player 1 chooses), a plain min (only
 * player 2 chooses), an expectation (nobody chooses) or a matrix-game value.
 * Stops when the sup-norm change drops below tol or after max_iter sweeps.
 */
ValueVector value_iteration(const CompiledGame& game,
                            const IterationOptions& options = {});

// max_s |Val[q + P v](s) - v(s)|.
double optimality_residual(const CompiledGame& game,
                           const std::vector<double>& values);

// Sequential game: max/min value iteration with deterministic stationary
// policies for both cops.
SolveReport solve_sequential(const Graph& g, const RobberStrategy& sigma,
                             const IterationOptions& options = {},
                             bool certify = false);
SolveReport solve_sequential(const CompiledGame& game,
                             const IterationOptions& options = {},
                             bool certify = false);

// Concurrent game: matrix-game value iteration with mixed stationary
// policies taken from the one-turn games.
SolveReport solve_concurrent(const Graph& g, const RobberStrategy& sigma,
                             const IterationOptions& options = {},
                             bool certify = false);
SolveReport solve_concurrent(const CompiledGame& game,
                             const IterationOptions& options = {},
                             bool certify = false);

// Optimal value of the free player when `fixed` is frozen: sup over C1 if
// C2 is fixed, inf over C2 if C1 is fixed.
ValueVector best_response(const CompiledGame& game, const CopPolicy& fixed,
                          const IterationOptions& options = {});
ValueVector best_response(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& fixed,
                          const IterationOptions& options = {});

// C1's win probability J(pi1, pi2 | s) for every start state.
ValueVector evaluate_policies(const CompiledGame& game, const CopPolicy& pi1,
                              const CopPolicy& pi2,
                              const IterationOptions& options = {});
ValueVector evaluate_policies(const Graph& g, const RobberStrategy& sigma,
                              const CopPolicy& pi1, const CopPolicy& pi2,
                              const IterationOptions& options = {});

struct Certificate {
  double policy1_gap = 0.0;  // max_s v(s) - inf_{sigma2} J(pi1, sigma2 | s)
  double policy2_gap = 0.0;  // max_s sup_{sigma1} J(sigma1, pi2 | s) - v(s)
  double epsilon() const { return policy1_gap > policy2_gap ? policy1_gap : policy2_gap; }
};

// Measures how far the report's policies are from guaranteeing its values.
Certificate certify(const CompiledGame& game, const SolveReport& report,
                    const IterationOptions& options = {});

// ---------------------------------------------------------------------------
// Oblivious deterministic robber

struct CaptureTimeTable {
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  int n = 0;
  std::vector<int> time;       // (cop, robber) -> minimum capture time
  std::vector<Vertex> policy;  // (cop, robber) -> cop's next vertex
  std::size_t iterations = 0;  // sweeps until the table stopped changing

  int at(Vertex cop, Vertex robber) const {
    return time[static_cast<std::size_t>(cop - 1) * n + (robber - 1)];
  }
  Vertex move(Vertex cop, Vertex robber) const {
    return policy[static_cast<std::size_t>(cop - 1) * n + (robber - 1)];
  }
};

// Minimum-time single-cop pursuit of an oblivious deterministic robber.
// Throws std::invalid_argument if sigma is not oblivious.
CaptureTimeTable oblivious_capture_times(const Graph& g,
                                         const RobberStrategy& sigma);

// Concurrent values v = [T(x1,x3) <= T(x2,x3)] and both cops chasing by the
// capture-time policy. Throws std::invalid_argument if sigma is not
// oblivious.
SolveReport solve_oblivious_concurrent(const Graph& g,
                                       const RobberStrategy& sigma);

struct PureMinimax {
  double maxmin = 0.0;
  double minmax = 0.0;
};

// Pure max-min and min-max of q(s) + v(next) over the cops' moves at one
// concurrent state, with the robber's deterministic move fixed.
PureMinimax pure_minimax_at(const Graph& g, const RobberStrategy& sigma,
                            const std::vector<double>& values,
                            const ConcState& s);

// Largest |maxmin - v(s)| or |minmax - v(s)| over ordinary concurrent
// states. Requires a deterministic sigma.
double verify_pure_minimax(const Graph& g, const RobberStrategy& sigma,
                           const std::vector<double>& values);

}  // namespace scpr
