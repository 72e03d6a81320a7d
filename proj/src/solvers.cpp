#include "scpr/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "one_player.hpp"
#include "parallel.hpp"
#include "scpr/kernels.hpp"
#include "scpr/matrix_game.hpp"

namespace scpr {

namespace {

enum class Shape { Chance, Max, Min, Matrix };

Shape shape_of(const CompiledGame& game, std::size_t s) {
  const std::size_t m1 = game.rows(s), m2 = game.cols(s);
  if (m1 == 1 && m2 == 1) return Shape::Chance;
  if (m2 == 1) return Shape::Max;
  if (m1 == 1) return Shape::Min;
  return Shape::Matrix;
}

// Fills `m` with q(s) + E[v | pair] over the state's action pairs.
void one_turn_game(const CompiledGame& game, std::size_t s, const double* v,
                   MatrixGame& m) {
  const std::size_t m1 = game.rows(s), m2 = game.cols(s);
  m.reshape(m1, m2);
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < m2; ++j)
      m(i, j) = game.payoff[s] + game.expect(game.pair(s, i, j), v);
}

// One Bellman backup at s. `sol`, if given, receives the one-turn matrix
// game solution at Matrix states.
double backup(const CompiledGame& game, std::size_t s, const double* v,
              MatrixGame& scratch, MatrixGameSolution* sol = nullptr) {
  const double q = game.payoff[s];
  const std::size_t first = game.pair_off[s];
  const std::size_t count = game.pair_off[s + 1] - first;
  switch (shape_of(game, s)) {
    case Shape::Chance:
      return q + game.expect(first, v);
    case Shape::Max:
    case Shape::Min: {
      const bool maximise = shape_of(game, s) == Shape::Max;
      if (game.deterministic) {
        // One successor per pair, stored contiguously.
        std::span<const std::uint32_t> idx(game.succ.data() + game.succ_off[first],
                                           count);
        return q + (maximise ? kernels::gather_max(v, idx)
                             : kernels::gather_min(v, idx));
      }
      double best = game.expect(first, v);
      for (std::size_t k = 1; k < count; ++k) {
        double x = game.expect(first + k, v);
        best = maximise ? std::max(best, x) : std::min(best, x);
      }
      return q + best;
    }
    case Shape::Matrix: {
      one_turn_game(game, s, v, scratch);
      MatrixGameSolution local = solve_matrix_game(scratch);
      double value = std::clamp(local.value, 0.0, 1.0);
      if (sol) *sol = std::move(local);
      return value;
    }
  }
  return 0.0;
}

// Lowest action index attaining the max (or min) of E[v | pair].
std::size_t extreme_action(const CompiledGame& game, std::size_t s,
                           const double* v, bool maximise) {
  const std::size_t first = game.pair_off[s];
  const std::size_t count = game.pair_off[s + 1] - first;
  std::size_t best_k = 0;
  double best = game.expect(first, v);
  for (std::size_t k = 1; k < count; ++k) {
    double x = game.expect(first + k, v);
    if (maximise ? x > best : x < best) {
      best = x;
      best_k = k;
    }
  }
  return best_k;
}

// Shared Jacobi loop. on_improve(s, prev) runs whenever v(i)(s) > v(i-1)(s),
// from the worker owning s; `prev` is v(i-1).
template <class OnImprove>
ValueVector iterate(const CompiledGame& game, const IterationOptions& options,
                    OnImprove&& on_improve) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const std::size_t size = game.size();
  const std::size_t max_iter =
      options.max_iter ? options.max_iter : 10 * size;

  ValueVector out;
  std::vector<double> cur(game.payoff), next(size);
  cur[game.index.terminal()] = 0.0;
  if (options.keep_history) out.history.push_back(cur);

  for (std::size_t it = 1; it <= max_iter; ++it) {
    detail::parallel_for(size, options.threads,
                         [&](std::size_t begin, std::size_t end) {
                           MatrixGame scratch(1, 1);
                           for (std::size_t s = begin; s < end; ++s) {
                             next[s] = backup(game, s, cur.data(), scratch);
                             // Val is monotone and v(1) >= q, so the iterates
                             // never decrease; this only absorbs LP round-off.
                             if (shape_of(game, s) == Shape::Matrix)
                               next[s] = std::max(next[s], cur[s]);
                             if (next[s] > cur[s]) on_improve(s, cur.data());
                           }
                         });
    out.residual = kernels::max_abs_diff(next, cur);
    out.monotone_violation = std::max(out.monotone_violation,
                                      kernels::monotone_violation(cur, next));
    cur.swap(next);
    out.iterations = it;
    if (options.keep_history) out.history.push_back(cur);
    if (out.residual < options.tol) {
      out.converged = true;
      break;
    }
  }
  out.values = std::move(cur);
  return out;
}

MoveDistribution to_distribution(std::span<const Vertex> actions,
                                 const std::vector<double>& weights) {
  MoveDistribution out;
  for (std::size_t k = 0; k < actions.size(); ++k)
    if (weights[k] > 0.0) out.emplace_back(actions[k], weights[k]);
  return out;
}

void require_variant(const CompiledGame& game, Variant v) {
  if (game.index.variant() != v)
    throw std::invalid_argument(std::string("expected a ") + to_string(v) +
                                " game");
}

void finish_report(const CompiledGame& game, SolveReport& report,
                   const IterationOptions& options, bool certify_now) {
  report.optimality_residual =
      optimality_residual(game, report.values.values);
  report.epsilon = 10.0 * options.tol;
  if (certify_now) {
    report.epsilon = certify(game, report, options).epsilon();
    report.epsilon_certified = true;
  }
}

// Strategy improvement on top of an extracted policy: evaluate it exactly
// against the opponent's best response (w), and wherever the one-turn game
// over w is strictly better for the policy's player than w(s), switch to that
// game's optimal strategy. States that do not improve keep their move, which
// rules out new stalling loops. Stops once w is within `target` of `values`.
void refine_policy(const CompiledGame& game, const std::vector<double>& values,
                   CopPolicy& policy, double target) {
  const int player = policy.player();
  const bool mixed = policy.kind() == PolicyKind::Mixed;
  constexpr double margin = 1e-13;
  constexpr std::size_t max_rounds = 200;
  MatrixGame scratch(1, 1);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    const ValueVector w = detail::solve_one_player(freeze_policy(game, policy));
    double gap = 0.0;
    for (std::size_t s = 0; s < values.size(); ++s)
      gap = std::max(gap, player == 1 ? values[s] - w.values[s]
                                      : w.values[s] - values[s]);
    if (gap <= target) return;
    bool switched = false;
    for (std::size_t s = 0; s < game.size(); ++s) {
      if (!game.index.is_decision_state(s, player)) continue;
      one_turn_game(game, s, w.values.data(), scratch);
      const MatrixGameSolution sol = solve_matrix_game(scratch);
      const double gain = player == 1 ? sol.value - w.values[s]
                                      : w.values[s] - sol.value;
      if (gain <= margin) continue;
      switched = true;
      const auto& weights = player == 1 ? sol.row_strategy : sol.col_strategy;
      const auto actions = player == 1 ? game.actions1(s) : game.actions2(s);
      if (mixed) {
        policy.set_distribution(s, to_distribution(actions, weights));
      } else {
        const auto it = std::max_element(weights.begin(), weights.end());
        policy.set_move(s, actions[static_cast<std::size_t>(it - weights.begin())]);
      }
    }
    if (!switched) return;
  }
}

// Largest gap of `policy` against the opponent's exact best response.
double policy_gap(const CompiledGame& game, const std::vector<double>& values,
                  const CopPolicy& policy) {
  const ValueVector w = detail::solve_one_player(freeze_policy(game, policy));
  double gap = 0.0;
  for (std::size_t s = 0; s < values.size(); ++s)
    gap = std::max(gap, policy.player() == 1 ? values[s] - w.values[s]
                                             : w.values[s] - values[s]);
  return gap;
}

// One-turn optima computed from an iterate just below the fixed point can
// carry vanishing weights that an opponent may wait for forever. Drops
// weights below `cutoff` times the largest one and renormalises.
CopPolicy drop_small_weights(const CompiledGame& game, const CopPolicy& policy,
                             double cutoff) {
  CopPolicy out = policy;
  for (std::size_t s = 0; s < game.size(); ++s) {
    if (!game.index.is_decision_state(s, policy.player())) continue;
    MoveDistribution d = policy.distribution(s);
    double top = 0.0, sum = 0.0;
    for (const auto& e : d) top = std::max(top, e.second);
    std::erase_if(d, [&](const auto& e) { return e.second < cutoff * top; });
    for (const auto& e : d) sum += e.second;
    for (auto& e : d) e.second /= sum;
    out.set_distribution(s, std::move(d));
  }
  return out;
}

}  // namespace

ValueVector value_iteration(const CompiledGame& game,
                            const IterationOptions& options) {
  return iterate(game, options, [](std::size_t, const double*) {});
}

double optimality_residual(const CompiledGame& game,
                           const std::vector<double>& values) {
  if (values.size() != game.size())
    throw std::invalid_argument("value vector size does not match the game");
  double worst = std::abs(values[game.index.terminal()]);
  MatrixGame scratch(1, 1);
  for (std::size_t s = 0; s < game.size(); ++s) {
    if (s == game.index.terminal()) continue;
    worst = std::max(worst,
                     std::abs(backup(game, s, values.data(), scratch) - values[s]));
  }
  return worst;
}

SolveReport solve_sequential(const CompiledGame& game,
                             const IterationOptions& options, bool certify_now) {
  require_variant(game, Variant::Sequential);
  const std::size_t size = game.size();
  const int n = game.index.n();
  // C1's move is refreshed only when its value strictly improves, so it
  // always points at a move that made progress toward capture.
  std::vector<std::uint32_t> improving(size, UINT32_MAX);
  ValueVector values =
      iterate(game, options, [&](std::size_t s, const double* prev) {
        if (shape_of(game, s) == Shape::Max)
          improving[s] =
              static_cast<std::uint32_t>(extreme_action(game, s, prev, true));
      });

  CopPolicy p1(1, PolicyKind::Deterministic, Variant::Sequential, n);
  CopPolicy p2(2, PolicyKind::Deterministic, Variant::Sequential, n);
  const double* v = values.values.data();
  for (std::size_t s = 0; s < size; ++s) {
    switch (shape_of(game, s)) {
      case Shape::Max: {
        std::size_t k = improving[s] != UINT32_MAX
                            ? improving[s]
                            : extreme_action(game, s, v, true);
        p1.set_move(s, game.actions1(s)[k]);
        break;
      }
      case Shape::Min:
        p2.set_move(s, game.actions2(s)[extreme_action(game, s, v, false)]);
        break;
      default:
        break;
    }
  }
  if (values.converged) refine_policy(game, values.values, p1, options.tol);
  SolveReport report{std::move(values), std::move(p1), std::move(p2)};
  finish_report(game, report, options, certify_now);
  return report;
}

SolveReport solve_sequential(const Graph& g, const RobberStrategy& sigma,
                             const IterationOptions& options, bool certify_now) {
  return solve_sequential(compile_game(g, sigma, Variant::Sequential), options,
                          certify_now);
}

SolveReport solve_concurrent(const CompiledGame& game,
                             const IterationOptions& options, bool certify_now) {
  require_variant(game, Variant::Concurrent);
  const std::size_t size = game.size();
  const int n = game.index.n();
  std::vector<std::vector<double>> improving(size);
  ValueVector values =
      iterate(game, options, [&](std::size_t s, const double* prev) {
        if (shape_of(game, s) != Shape::Matrix) return;
        MatrixGame scratch(1, 1);
        MatrixGameSolution sol;
        backup(game, s, prev, scratch, &sol);
        improving[s] = std::move(sol.row_strategy);
      });

  CopPolicy p1(1, PolicyKind::Mixed, Variant::Concurrent, n);
  CopPolicy p2(2, PolicyKind::Mixed, Variant::Concurrent, n);
  MatrixGame scratch(1, 1);
  for (std::size_t s = 0; s < size; ++s) {
    if (shape_of(game, s) != Shape::Matrix) continue;
    MatrixGameSolution sol;
    backup(game, s, values.values.data(), scratch, &sol);
    const auto& rows = improving[s].empty() ? sol.row_strategy : improving[s];
    p1.set_distribution(s, to_distribution(game.actions1(s), rows));
    p2.set_distribution(s, to_distribution(game.actions2(s), sol.col_strategy));
  }
  if (values.converged) {
    refine_policy(game, values.values, p1, options.tol);
    if (policy_gap(game, values.values, p2) > options.tol) {
      CopPolicy cleaned = drop_small_weights(game, p2, 1e-6);
      if (policy_gap(game, values.values, cleaned) <
          policy_gap(game, values.values, p2))
        p2 = std::move(cleaned);
    }
  }
  SolveReport report{std::move(values), std::move(p1), std::move(p2)};
  finish_report(game, report, options, certify_now);
  return report;
}

SolveReport solve_concurrent(const Graph& g, const RobberStrategy& sigma,
                             const IterationOptions& options, bool certify_now) {
  return solve_concurrent(compile_game(g, sigma, Variant::Concurrent), options,
                          certify_now);
}

ValueVector best_response(const CompiledGame& game, const CopPolicy& fixed,
                          const IterationOptions&) {
  return detail::solve_one_player(freeze_policy(game, fixed));
}

ValueVector best_response(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& fixed,
                          const IterationOptions& options) {
  return best_response(compile_game(g, sigma, fixed.variant()), fixed, options);
}

ValueVector evaluate_policies(const CompiledGame& game, const CopPolicy& pi1,
                              const CopPolicy& pi2, const IterationOptions&) {
  if (pi1.player() != 1 || pi2.player() != 2)
    throw std::invalid_argument("evaluate_policies expects (C1, C2) policies");
  return detail::solve_one_player(freeze_policy(freeze_policy(game, pi1), pi2));
}

ValueVector evaluate_policies(const Graph& g, const RobberStrategy& sigma,
                              const CopPolicy& pi1, const CopPolicy& pi2,
                              const IterationOptions& options) {
  return evaluate_policies(compile_game(g, sigma, pi1.variant()), pi1, pi2,
                           options);
}

Certificate certify(const CompiledGame& game, const SolveReport& report,
                    const IterationOptions& options) {
  const auto& v = report.values.values;
  ValueVector inf1 = best_response(game, report.policy1, options);
  ValueVector sup2 = best_response(game, report.policy2, options);
  Certificate c;
  for (std::size_t s = 0; s < v.size(); ++s) {
    c.policy1_gap = std::max(c.policy1_gap, v[s] - inf1.values[s]);
    c.policy2_gap = std::max(c.policy2_gap, sup2.values[s] - v[s]);
  }
  return c;
}

// ---------------------------------------------------------------------------

CaptureTimeTable oblivious_capture_times(const Graph& g,
                                         const RobberStrategy& sigma) {
  if (!sigma.is_oblivious())
    throw std::invalid_argument(
        "capture-time recursion needs an oblivious deterministic robber");
  constexpr int inf = CaptureTimeTable::kInfinity;
  const int n = g.vertex_count();
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  CaptureTimeTable table;
  table.n = n;
  table.time.assign(cells, inf);
  table.policy.assign(cells, 0);
  for (Vertex x = 1; x <= n; ++x)
    table.time[static_cast<std::size_t>(x - 1) * n + (x - 1)] = 0;

  std::vector<int> next(cells);
  auto sweep = [&](const std::vector<int>& prev, std::vector<int>& out,
                   bool record) {
    for (Vertex cop = 1; cop <= n; ++cop)
      for (Vertex rob = 1; rob <= n; ++rob) {
        const std::size_t c = static_cast<std::size_t>(cop - 1) * n + (rob - 1);
        if (cop == rob) {
          out[c] = 0;
          if (record) table.policy[c] = cop;
          continue;
        }
        const Vertex target = sigma.oblivious_move(rob);
        int best = inf;
        Vertex arg = cop;
        for (Vertex y : g.closed_neighborhood(cop)) {
          int t = prev[static_cast<std::size_t>(y - 1) * n + (target - 1)];
          int cand = t == inf ? inf : t + 1;
          if (cand < best) {
            best = cand;
            arg = y;
          }
        }
        out[c] = best;
        if (record) table.policy[c] = arg;
      }
  };

  // Each pair settles once its optimal time is reached; every finite time is
  // below n, so n sweeps always suffice. The bound guards the loop only.
  const std::size_t cap = cells + 2;
  for (std::size_t i = 1; i <= cap; ++i) {
    sweep(table.time, next, false);
    if (next == table.time) break;
    table.time.swap(next);
    table.iterations = i;
  }
  sweep(table.time, next, true);
  return table;
}

SolveReport solve_oblivious_concurrent(const Graph& g,
                                       const RobberStrategy& sigma) {
  if (!sigma.is_oblivious())
    throw std::invalid_argument(
        "solve_oblivious_concurrent requires an oblivious deterministic robber "
        "strategy");
  CaptureTimeTable table = oblivious_capture_times(g, sigma);
  const int n = g.vertex_count();
  StateIndex idx(n, Variant::Concurrent);
  ValueVector values;
  values.values.assign(idx.size(), 0.0);
  CopPolicy p1(1, PolicyKind::Deterministic, Variant::Concurrent, n);
  CopPolicy p2(2, PolicyKind::Deterministic, Variant::Concurrent, n);
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (s == idx.terminal()) continue;
    const Vertex x1 = idx.x1(s), x2 = idx.x2(s), x3 = idx.x3(s);
    values.values[s] = table.at(x1, x3) <= table.at(x2, x3) ? 1.0 : 0.0;
    if (idx.classify(s) == StateClass::Ordinary) {
      p1.set_move(s, table.move(x1, x3));
      p2.set_move(s, table.move(x2, x3));
    }
  }
  values.iterations = table.iterations;
  values.converged = true;
  SolveReport report{std::move(values), std::move(p1), std::move(p2)};
  report.optimality_residual = optimality_residual(
      compile_game(g, sigma, Variant::Concurrent), report.values.values);
  report.epsilon = 0.0;
  return report;
}

PureMinimax pure_minimax_at(const Graph& g, const RobberStrategy& sigma,
                            const std::vector<double>& values,
                            const ConcState& s) {
  StateIndex idx(g.vertex_count(), Variant::Concurrent);
  if (values.size() != idx.size())
    throw std::invalid_argument("value vector size does not match the game");
  const StateClass cls = classify(s);
  if (cls != StateClass::Ordinary) {
    double q = immediate_payoff(cls);
    return {q, q};
  }
  VertexSet a1 = legal_actions(g, s, 1), a2 = legal_actions(g, s, 2);
  MatrixGame m(a1.size(), a2.size());
  for (std::size_t i = 0; i < a1.size(); ++i)
    for (std::size_t j = 0; j < a2.size(); ++j) {
      auto next = conc_transition(g, sigma, s, a1[i], a2[j]);
      if (next.size() != 1)
        throw std::invalid_argument("pure minimax needs a deterministic robber");
      m(i, j) = values[idx.index(next.front().first)];
    }
  return {pure_maxmin(m), pure_minmax(m)};
}

double verify_pure_minimax(const Graph& g, const RobberStrategy& sigma,
                           const std::vector<double>& values) {
  if (!sigma.is_deterministic())
    throw std::invalid_argument("pure minimax needs a deterministic robber");
  StateIndex idx(g.vertex_count(), Variant::Concurrent);
  double worst = 0.0;
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (idx.classify(s) != StateClass::Ordinary) continue;
    PureMinimax pm = pure_minimax_at(g, sigma, values, idx.conc_state(s));
    worst = std::max({worst, std::abs(pm.maxmin - values[s]),
                      std::abs(pm.minmax - values[s])});
  }
  return worst;
}

}  // namespace scpr
