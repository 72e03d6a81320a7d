#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "scpr/matrix_game.hpp"
#include "support.hpp"

using namespace scpr;
using namespace scpr::testing;

namespace {

void check_strategy(const std::vector<double>& p, std::size_t size) {
  REQUIRE(p.size() == size);
  double s = 0.0;
  for (double x : p) {
    CHECK(x >= -1e-12);
    s += x;
  }
  CHECK(std::abs(s - 1.0) <= 1e-9);
}

}  // namespace

TEST_SUITE("matrix_game") {

TEST_CASE("identity game needs uniform play") {
  MatrixGame m{{1, 0}, {0, 1}};
  CHECK_FALSE(pure_saddle_point(m).has_value());
  MatrixGameSolution s = solve_matrix_game(m);
  CHECK(s.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.row_strategy[0] == doctest::Approx(0.5));
  CHECK(s.row_strategy[1] == doctest::Approx(0.5));
  CHECK(s.col_strategy[0] == doctest::Approx(0.5));
  CHECK(s.col_strategy[1] == doctest::Approx(0.5));
  CHECK(pure_maxmin(m) == 0.0);
  CHECK(pure_minmax(m) == 1.0);
}

TEST_CASE("matching pennies") {
  MatrixGameSolution s = solve_matrix_game(MatrixGame{{0, 1}, {1, 0}});
  CHECK(s.value == doctest::Approx(0.5));
  CHECK(s.row_strategy[0] == doctest::Approx(0.5));
  CHECK(s.col_strategy[1] == doctest::Approx(0.5));
}

TEST_CASE("single column and single row") {
  MatrixGame col{{0.3}, {0.7}, {0.1}};
  MatrixGameSolution s = solve_matrix_game(col);
  CHECK(s.value == doctest::Approx(0.7));
  CHECK(s.row_strategy[1] == doctest::Approx(1.0));
  CHECK(solve_matrix_game_lp(col).value == doctest::Approx(0.7));
  MatrixGame row{{0.3, 0.7, 0.1}};
  CHECK(solve_matrix_game(row).value == doctest::Approx(0.1));
  CHECK(solve_matrix_game_lp(row).value == doctest::Approx(0.1));
}

TEST_CASE("pure saddle points") {
  auto a = pure_saddle_point(MatrixGame{{1, 1}, {0, 1}});
  REQUIRE(a.has_value());
  CHECK(*a == std::pair<std::size_t, std::size_t>{0, 0});
  auto b = pure_saddle_point(MatrixGame{{0.25}});
  REQUIRE(b.has_value());
  CHECK(*b == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(solve_matrix_game(MatrixGame{{0.25}}).value == 0.25);
  CHECK_FALSE(pure_saddle_point(MatrixGame{{1, 0}, {0, 1}}).has_value());
}

TEST_CASE("non-finite entries are rejected") {
  MatrixGame m{{1, 0}, {0, 1}};
  m(0, 1) = std::nan("");
  CHECK_THROWS_AS(solve_matrix_game(m), std::invalid_argument);
}

TEST_CASE("2x2 games agree with the closed form") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    MatrixGame m = random_matrix(2, 2, rng, trial % 2 == 0);
    const double expect = oracle::value_2x2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
    CHECK(std::abs(solve_matrix_game(m).value - expect) <= 1e-9);
    CHECK(std::abs(solve_matrix_game_lp(m).value - expect) <= 1e-9);
  }
}

TEST_CASE("random games: duality, equivariance, monotonicity, saddles") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 6;
    MatrixGame m = random_matrix(r, c, rng, trial % 3 == 0);
    MatrixGameSolution s = solve_matrix_game(m);
    check_strategy(s.row_strategy, r);
    check_strategy(s.col_strategy, c);
    const double lo = row_guarantee(m, s.row_strategy);
    const double hi = col_guarantee(m, s.col_strategy);
    CHECK(hi - lo <= 2e-9);
    CHECK(std::abs(s.value - lo) <= 2e-9);
    CHECK(pure_maxmin(m) <= s.value + 1e-9);
    CHECK(s.value <= pure_minmax(m) + 1e-9);

    if (auto sp = pure_saddle_point(m))
      CHECK(std::abs(m(sp->first, sp->second) - s.value) <= 1e-9);

    const double alpha = 0.5 + 3.0 * unit(rng), beta = 4.0 * unit(rng) - 2.0;
    MatrixGame scaled(r, c), larger(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        scaled(i, j) = alpha * m(i, j) + beta;
        larger(i, j) = m(i, j) + unit(rng) * (unit(rng) < 0.5 ? 0.0 : 1.0);
      }
    CHECK(std::abs(solve_matrix_game(scaled).value - (alpha * s.value + beta)) <= 1e-8);
    CHECK(s.value <= solve_matrix_game(larger).value + 1e-9);
    CHECK(std::abs(solve_matrix_game_lp(m).value - s.value) <= 1e-9);
  }
}

}
