#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace scpr::testing {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

bool connected_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                    std::uint32_t mask) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  int comps = n;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1) {
      int a = find(pairs[k].first), b = find(pairs[k].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
  return comps == 1;
}

Graph from_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                std::uint32_t mask) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1) e.push_back(pairs[k]);
  return Graph(n, e);
}

}  // namespace

std::vector<Graph> connected_labelled_graphs(int n) {
  auto pairs = all_pairs(n);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask)
    if (connected_mask(n, pairs, mask)) out.push_back(from_mask(n, pairs, mask));
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  auto pairs = all_pairs(n);
  // pair_id[u][v] -> bit of edge {u, v}
  std::vector<std::vector<int>> pair_id(n + 1, std::vector<int>(n + 1, -1));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pair_id[pairs[k].first][pairs[k].second] = static_cast<int>(k);
    pair_id[pairs[k].second][pairs[k].first] = static_cast<int>(k);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    if (!connected_mask(n, pairs, mask)) continue;
    std::uint32_t canon = UINT32_MAX;
    for (const auto& perm : perms) {
      std::uint32_t m = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1)
          m |= 1u << pair_id[perm[pairs[k].first - 1]][perm[pairs[k].second - 1]];
      canon = std::min(canon, m);
    }
    if (seen.insert(canon).second) out.push_back(from_mask(n, pairs, canon));
  }
  return out;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<int, int>> edges;
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    int a = order[k], b = order[pick(rng)];
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  std::bernoulli_distribution coin(p);
  for (auto e : all_pairs(n))
    if (!edges.count(e) && coin(rng)) edges.insert(e);
  return Graph(n, {edges.begin(), edges.end()});
}

namespace {

Vertex random_neighbour(const Graph& g, Vertex x, std::mt19937_64& rng) {
  auto nb = g.closed_neighborhood(x);
  std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
  return nb[pick(rng)];
}

}  // namespace

RobberStrategy random_oblivious_robber(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> moves;
  for (Vertex x = 1; x <= g.vertex_count(); ++x)
    moves.push_back(random_neighbour(g, x, rng));
  return RobberStrategy::oblivious(g, moves);
}

RobberStrategy random_state_robber(const Graph& g, std::mt19937_64& rng) {
  std::map<Triple, Vertex> moves;
  const int n = g.vertex_count();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = 1; b <= n; ++b)
      for (Vertex c = 1; c <= n; ++c)
        moves[{a, b, c}] = random_neighbour(g, c, rng);
  return RobberStrategy::state_deterministic(g, moves);
}

RobberStrategy random_markov_robber(const Graph& g, std::mt19937_64& rng) {
  std::map<Triple, MoveDistribution> moves;
  const int n = g.vertex_count();
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::bernoulli_distribution keep(0.6);
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = 1; b <= n; ++b)
      for (Vertex c = 1; c <= n; ++c) {
        MoveDistribution d;
        for (Vertex y : g.closed_neighborhood(c))
          if (keep(rng)) d.emplace_back(y, weight(rng));
        if (d.empty()) d.emplace_back(random_neighbour(g, c, rng), 1.0);
        double sum = 0;
        for (auto& e : d) sum += e.second;
        for (auto& e : d) e.second /= sum;
        moves[{a, b, c}] = d;
      }
  return RobberStrategy::markov(g, moves);
}

MatrixGame random_matrix(std::size_t rows, std::size_t cols,
                         std::mt19937_64& rng, bool integer_entries) {
  MatrixGame m(rows, cols);
  std::uniform_real_distribution<double> real(-5.0, 5.0);
  std::uniform_int_distribution<int> small(-2, 2);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = integer_entries ? small(rng) : real(rng);
  return m;
}

namespace oracle {

namespace {

std::vector<std::vector<int>> closed_lists(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out(n + 1);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (x == y || g.adjacent(x, y)) out[x].push_back(y);
  return out;
}

std::vector<int> distances_from(const Graph& g, int src) {
  const int n = g.vertex_count();
  std::vector<int> d(n + 1, -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y = 1; y <= n; ++y)
      if (g.adjacent(x, y) && d[y] < 0) {
        d[y] = d[x] + 1;
        q.push(y);
      }
  }
  return d;
}

}  // namespace

bool one_cop_wins(const Graph& g) {
  const int n = g.vertex_count();
  auto nb = closed_lists(g);
  // win[turn][c][r], turn 0: cop to move, 1: robber to move.
  std::vector<std::vector<std::vector<char>>> win(
      2, std::vector<std::vector<char>>(n + 1, std::vector<char>(n + 1, 0)));
  for (int t = 0; t < 2; ++t)
    for (int x = 1; x <= n; ++x) win[t][x][x] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int c = 1; c <= n; ++c)
      for (int r = 1; r <= n; ++r) {
        if (!win[0][c][r])
          for (int c2 : nb[c])
            if (win[1][c2][r]) {
              win[0][c][r] = 1;
              changed = true;
              break;
            }
        if (!win[1][c][r]) {
          bool all = true;
          for (int r2 : nb[r]) all = all && win[0][c][r2];
          if (all) {
            win[1][c][r] = 1;
            changed = true;
          }
        }
      }
  }
  for (int c = 1; c <= n; ++c) {
    bool all = true;
    for (int r = 1; r <= n; ++r) all = all && win[0][c][r];
    if (all) return true;
  }
  return false;
}

int oblivious_capture_time(const Graph& g, const RobberStrategy& sigma,
                           Vertex cop, Vertex robber) {
  auto d = distances_from(g, cop);
  const int n = g.vertex_count();
  Vertex r = robber;
  // The robber's orbit is eventually periodic within n steps; n*n bounds
  // every useful k.
  for (int k = 0; k <= n * n + n; ++k) {
    if (d[r] <= k) return k;
    r = sigma.oblivious_move(r);
  }
  return -1;
}

std::map<SeqKey, double> sequential_backward_induction(
    const Graph& g, const RobberStrategy& sigma, int depth) {
  const int n = g.vertex_count();
  auto nb = closed_lists(g);
  auto id = [n](int x1, int x2, int x3, int u) {
    return (((x1 - 1) * n + (x2 - 1)) * n + (x3 - 1)) * 2 + (u - 1);
  };
  const int positions = 2 * n * n * n;
  std::vector<double> memo(static_cast<std::size_t>(positions) * (depth + 1),
                           -1.0);
  std::function<double(int, int, int, int, int)> value =
      [&](int x1, int x2, int x3, int u, int d) -> double {
    if (x1 == x3) return 1.0;
    if (x2 == x3) return 0.0;
    if (d == 0) return 0.0;
    double& slot = memo[static_cast<std::size_t>(id(x1, x2, x3, u)) * (depth + 1) + d];
    if (slot >= 0.0) return slot;
    double best;
    if (u == 1) {
      best = 0.0;
      for (int a : nb[x1]) best = std::max(best, value(a, x2, x3, 2, d - 1));
    } else {
      best = 1.0;
      for (int a : nb[x2]) {
        int r = a == x3 ? x3 : sigma.deterministic_move(x1, a, x3);
        best = std::min(best, value(x1, a, r, 1, d - 1));
      }
    }
    return slot = best;
  };
  std::map<SeqKey, double> out;
  for (int x1 = 1; x1 <= n; ++x1)
    for (int x2 = 1; x2 <= n; ++x2)
      for (int x3 = 1; x3 <= n; ++x3)
        for (int u = 1; u <= 2; ++u)
          out[{x1, x2, x3, u}] = value(x1, x2, x3, u, depth);
  return out;
}

double value_2x2(double a, double b, double c, double d) {
  // [[a, b], [c, d]]
  double lower = std::max(std::min(a, b), std::min(c, d));
  double upper = std::min(std::max(a, c), std::max(b, d));
  if (lower == upper) return lower;
  return (a * d - b * c) / (a + d - b - c);
}

}  // namespace oracle

}  // namespace scpr::testing
