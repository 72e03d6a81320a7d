#include "scpr/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scpr {

MatrixGame::MatrixGame(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), a_(rows * cols, fill) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("MatrixGame: needs at least one row and column");
}

MatrixGame::MatrixGame(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0)
    throw std::invalid_argument("MatrixGame: needs at least one row and column");
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("MatrixGame: ragged rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

void MatrixGame::reshape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("MatrixGame: needs at least one row and column");
  rows_ = rows;
  cols_ = cols;
  a_.resize(rows * cols);
}

double row_guarantee(const MatrixGame& game, const std::vector<double>& p) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < game.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < game.rows(); ++i) s += p[i] * game(i, j);
    worst = std::min(worst, s);
  }
  return worst;
}

double col_guarantee(const MatrixGame& game, const std::vector<double>& q) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < game.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < game.cols(); ++j) s += game(i, j) * q[j];
    worst = std::max(worst, s);
  }
  return worst;
}

double pure_maxmin(const MatrixGame& game) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < game.rows(); ++i) {
    double m = game(i, 0);
    for (std::size_t j = 1; j < game.cols(); ++j) m = std::min(m, game(i, j));
    best = std::max(best, m);
  }
  return best;
}

double pure_minmax(const MatrixGame& game) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < game.cols(); ++j) {
    double m = game(0, j);
    for (std::size_t i = 1; i < game.rows(); ++i) m = std::max(m, game(i, j));
    best = std::min(best, m);
  }
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> pure_saddle_point(
    const MatrixGame& game) {
  const std::size_t m = game.rows(), k = game.cols();
  std::vector<double> row_min(m), col_max(k);
  for (std::size_t i = 0; i < m; ++i) {
    row_min[i] = game(i, 0);
    for (std::size_t j = 1; j < k; ++j) row_min[i] = std::min(row_min[i], game(i, j));
  }
  for (std::size_t j = 0; j < k; ++j) {
    col_max[j] = game(0, j);
    for (std::size_t i = 1; i < m; ++i) col_max[j] = std::max(col_max[j], game(i, j));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (game(i, j) == row_min[i] && game(i, j) == col_max[j])
        return std::make_pair(i, j);
  return std::nullopt;
}

namespace {

void check_finite(const MatrixGame& game) {
  for (double x : game.data())
    if (!std::isfinite(x))
      throw std::invalid_argument("MatrixGame: non-finite entry");
}

// Clamps round-off negatives and rescales to sum one.
void normalise(std::vector<double>& p) {
  double sum = 0.0;
  for (double& x : p) {
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  for (double& x : p) x /= sum;
}

}  // namespace

MatrixGameSolution solve_matrix_game_lp(const MatrixGame& game) {
  check_finite(game);
  const std::size_t m = game.rows(), k = game.cols();
  double lo = game.data().front(), hi = lo;
  for (double x : game.data()) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  // Shift so every entry is >= 1; the column player's LP
  //   max 1'y  s.t.  A y <= 1, y >= 0
  // then has optimum z = 1/v' with v' the shifted value.
  const double shift = 1.0 - lo;
  const std::size_t width = k + m + 1;  // y, slacks, rhs
  std::vector<double> t(m * width, 0.0);
  std::vector<double> obj(width, 0.0);  // reduced costs; obj[k+m] = z
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i * width + j] = game(i, j) + shift;
    t[i * width + k + i] = 1.0;
    t[i * width + k + m] = 1.0;
    basis[i] = k + i;
  }
  for (std::size_t j = 0; j < k; ++j) obj[j] = -1.0;

  constexpr double eps = 1e-12;
  for (;;) {
    // Bland: lowest-index improving column, lowest-index basic variable on
    // ratio ties.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (obj[j] < -eps) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      double a = t[i * width + enter];
      if (a <= eps) continue;
      double ratio = t[i * width + width - 1] / a;
      if (ratio < best - eps ||
          (std::abs(ratio - best) <= eps && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m)
      throw std::logic_error("matrix game LP unbounded (cannot happen)");

    double* prow = &t[leave * width];
    const double piv = prow[enter];
    for (std::size_t j = 0; j < width; ++j) prow[j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      double f = t[i * width + enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i * width + j] -= f * prow[j];
    }
    double f = obj[enter];
    for (std::size_t j = 0; j < width; ++j) obj[j] -= f * prow[j];
    basis[leave] = enter;
  }

  const double z = obj[width - 1];
  MatrixGameSolution sol;
  sol.col_strategy.assign(k, 0.0);
  sol.row_strategy.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < k) sol.col_strategy[basis[i]] = t[i * width + width - 1];
  for (std::size_t i = 0; i < m; ++i) sol.row_strategy[i] = obj[k + i];
  normalise(sol.col_strategy);
  normalise(sol.row_strategy);
  sol.value = std::clamp(1.0 / z - shift, lo, hi);
  return sol;
}

MatrixGameSolution solve_matrix_game(const MatrixGame& game) {
  check_finite(game);
  if (auto saddle = pure_saddle_point(game)) {
    MatrixGameSolution sol;
    sol.value = game(saddle->first, saddle->second);
    sol.row_strategy.assign(game.rows(), 0.0);
    sol.col_strategy.assign(game.cols(), 0.0);
    sol.row_strategy[saddle->first] = 1.0;
    sol.col_strategy[saddle->second] = 1.0;
    return sol;
  }
  return solve_matrix_game_lp(game);
}

}  // namespace scpr
