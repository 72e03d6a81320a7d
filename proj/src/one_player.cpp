#include "one_player.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace scpr::detail {

namespace {

// Improvements smaller than this are treated as ties so that round-off in
// the linear solves cannot make the policy cycle.
constexpr double kSwitchMargin = 1e-13;

enum class Chooser { None, Max, Min };

Chooser chooser(const CompiledGame& game, std::size_t s) {
  const std::size_t m1 = game.rows(s), m2 = game.cols(s);
  if (m1 > 1 && m2 > 1)
    throw std::logic_error("both players choose at " + game.index.describe(s));
  if (m1 > 1) return Chooser::Max;
  if (m2 > 1) return Chooser::Min;
  return Chooser::None;
}

std::size_t action_count(const CompiledGame& game, std::size_t s) {
  return game.pair_off[s + 1] - game.pair_off[s];
}

}  // namespace

ValueVector solve_one_player(const CompiledGame& game) {
  const std::size_t size = game.size();
  const std::size_t tau = game.index.terminal();
  std::vector<Chooser> who(size);
  std::vector<char> target(size, 0);
  for (std::size_t s = 0; s < size; ++s) {
    who[s] = chooser(game, s);
    target[s] = s != tau && game.payoff[s] > 0.0;
  }

  // Greatest set Z of non-target states closed under: every chance or
  // player-1 successor stays in Z, and player 2 has some action staying in Z.
  std::vector<char> zero(size, 0);
  for (std::size_t s = 0; s < size; ++s) zero[s] = !target[s];
  auto pair_inside = [&](std::size_t p) {
    for (std::uint32_t k = game.succ_off[p]; k < game.succ_off[p + 1]; ++k)
      if (!zero[game.succ[k]]) return false;
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < size; ++s) {
      if (!zero[s]) continue;
      const std::size_t first = game.pair_off[s], count = action_count(game, s);
      bool keep = who[s] != Chooser::Min;
      for (std::size_t a = 0; a < count; ++a) {
        const bool inside = pair_inside(first + a);
        if (who[s] == Chooser::Min)
          keep = keep || inside;
        else
          keep = keep && inside;
      }
      if (!keep) {
        zero[s] = 0;
        changed = true;
      }
    }
  }

  // Initial policy. Player 1 follows a shortest positive-probability route
  // to the target so that the first evaluation is well posed; player 2 may
  // start anywhere because every one of its policies leaves the non-zero
  // region almost surely.
  std::vector<std::size_t> policy(size, 0);
  {
    constexpr std::size_t unranked = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> rank(size, unranked);
    for (std::size_t s = 0; s < size; ++s)
      if (target[s]) rank[s] = 0;
    for (std::size_t level = 1, changed = 1; changed; ++level) {
      changed = 0;
      std::vector<std::size_t> next = rank;
      for (std::size_t s = 0; s < size; ++s) {
        if (rank[s] != unranked || zero[s]) continue;
        const std::size_t first = game.pair_off[s], count = action_count(game, s);
        for (std::size_t a = 0; a < count; ++a) {
          bool reaches = false;
          for (std::uint32_t k = game.succ_off[first + a];
               k < game.succ_off[first + a + 1]; ++k)
            reaches = reaches || (game.prob[k] > 0.0 && rank[game.succ[k]] < level);
          if (reaches) {
            next[s] = level;
            policy[s] = a;
            ++changed;
            break;
          }
        }
      }
      rank.swap(next);
    }
  }

  // Unknowns: states that are neither pinned to 0 nor targets.
  std::vector<std::ptrdiff_t> slot(size, -1);
  std::vector<std::size_t> unknown;
  for (std::size_t s = 0; s < size; ++s)
    if (!zero[s] && !target[s]) {
      slot[s] = static_cast<std::ptrdiff_t>(unknown.size());
      unknown.push_back(s);
    }
  const auto m = static_cast<Eigen::Index>(unknown.size());

  std::vector<double> x(size, 0.0);
  for (std::size_t s = 0; s < size; ++s)
    if (target[s]) x[s] = game.payoff[s];

  auto q_value = [&](std::size_t s, std::size_t a) {
    return game.expect(game.pair_off[s] + a, x.data());
  };

  ValueVector out;
  const std::size_t max_rounds = 10 * size + 10;
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    std::vector<Eigen::Triplet<double>> entries;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    for (Eigen::Index r = 0; r < m; ++r) {
      const std::size_t s = unknown[static_cast<std::size_t>(r)];
      const std::size_t p = game.pair_off[s] + policy[s];
      entries.emplace_back(r, r, 1.0);
      for (std::uint32_t k = game.succ_off[p]; k < game.succ_off[p + 1]; ++k) {
        const std::size_t t = game.succ[k];
        if (slot[t] >= 0)
          entries.emplace_back(r, slot[t], -game.prob[k]);
        else
          b(r) += game.prob[k] * x[t];
      }
    }
    if (m > 0) {
      Eigen::SparseMatrix<double> a(m, m);
      a.setFromTriplets(entries.begin(), entries.end());
      Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
      lu.compute(a);
      if (lu.info() != Eigen::Success)
        throw std::runtime_error("singular policy evaluation system");
      Eigen::VectorXd sol = lu.solve(b);
      for (Eigen::Index r = 0; r < m; ++r)
        x[unknown[static_cast<std::size_t>(r)]] = std::clamp(sol(r), 0.0, 1.0);
    }
    out.iterations = round;

    bool switched = false;
    for (std::size_t s : unknown) {
      if (who[s] == Chooser::None) continue;
      const bool maximise = who[s] == Chooser::Max;
      const double current = q_value(s, policy[s]);
      std::size_t best = policy[s];
      double best_q = current;
      for (std::size_t k = 0; k < action_count(game, s); ++k) {
        const double qk = q_value(s, k);
        if (maximise ? qk > best_q : qk < best_q) {
          best_q = qk;
          best = k;
        }
      }
      if (std::abs(best_q - current) > kSwitchMargin) {
        policy[s] = best;
        switched = true;
      }
    }
    if (!switched) {
      out.converged = true;
      break;
    }
  }

  // Bellman residual of the result.
  for (std::size_t s = 0; s < size; ++s) {
    if (s == tau) continue;
    double best = q_value(s, 0);
    for (std::size_t k = 1; k < action_count(game, s); ++k)
      best = who[s] == Chooser::Min ? std::min(best, q_value(s, k))
                                    : std::max(best, q_value(s, k));
    out.residual = std::max(out.residual, std::abs(game.payoff[s] + best - x[s]));
  }
  out.values = std::move(x);
  return out;
}

}  // namespace scpr::detail
