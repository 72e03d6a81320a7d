#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace scpr {

/**
 * Finite two-player zero-sum game in normal form. Entry (i, j) is the payoff
 * to the row player (the maximiser) when rows plays i and columns plays j.
 */
class MatrixGame {
 public:
  MatrixGame(std::size_t rows, std::size_t cols, double fill = 0.0);
  MatrixGame(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return a_; }

  // Reuses storage; contents are unspecified afterwards.
  void reshape(std::size_t rows, std::size_t cols);

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
};

struct MatrixGameSolution {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
};

inline constexpr double kMatrixGameTolerance = 1e-9;

// Value and one optimal pair of mixed strategies. Games with a pure saddle
// point are answered exactly from it; otherwise the linear program is solved
// by a dense simplex with Bland's rule. Throws std::invalid_argument on
// non-finite entries.
MatrixGameSolution solve_matrix_game(const MatrixGame& game);

// Always runs the simplex, skipping the saddle-point shortcut.
MatrixGameSolution solve_matrix_game_lp(const MatrixGame& game);

// (i, j) such that game(i, j) is the minimum of row i and the maximum of
// column j, smallest (i, j) first; empty when no pure saddle exists.
std::optional<std::pair<std::size_t, std::size_t>> pure_saddle_point(
    const MatrixGame& game);

// min_j p^T A e_j and max_i e_i^T A q.
double row_guarantee(const MatrixGame& game, const std::vector<double>& p);
double col_guarantee(const MatrixGame& game, const std::vector<double>& q);

// max_i min_j and min_j max_i over pure actions.
double pure_maxmin(const MatrixGame& game);
double pure_minmax(const MatrixGame& game);

}  // namespace scpr
