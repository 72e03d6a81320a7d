#include "scpr/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "scpr/error.hpp"
#include "text_util.hpp"

namespace scpr {

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int vertex_count,
             const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(vertex_count) {
  if (n_ < 1) throw ValidationError("graph must have at least one vertex");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v))
      throw ValidationError("edge " + edge_name(u, v) +
                            ": endpoint outside 1.." + std::to_string(n_));
    if (u == v)
      throw ValidationError("edge " + edge_name(u, v) + ": self-loop");
    auto& cell = adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    if (cell) throw ValidationError("edge " + edge_name(u, v) + ": duplicate");
    cell = 1;
    adj_[static_cast<std::size_t>(v - 1) * n_ + (u - 1)] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  offset_.assign(n_ + 1, 0);
  for (Vertex x = 1; x <= n_; ++x) {
    for (Vertex y = 1; y <= n_; ++y)
      if (x == y || adjacent(x, y)) nbhd_.push_back(y);
    offset_[x] = nbhd_.size();
  }

  // Connectivity from vertex 1.
  std::vector<char> seen(n_ + 1, 0);
  std::deque<Vertex> queue{1};
  seen[1] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : closed_neighborhood(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
  }
  if (reached != n_) {
    Vertex missing = 1;
    while (seen[missing]) ++missing;
    throw ValidationError("graph is disconnected: vertex " +
                          std::to_string(missing) +
                          " is unreachable from vertex 1");
  }
}

bool Graph::adjacent(Vertex x, Vertex y) const {
  if (!contains(x) || !contains(y)) return false;
  return adj_[static_cast<std::size_t>(x - 1) * n_ + (y - 1)] != 0;
}

std::span<const Vertex> Graph::closed_neighborhood(Vertex x) const {
  if (!contains(x))
    throw std::out_of_range("vertex " + std::to_string(x) +
                            " outside 1.." + std::to_string(n_));
  return {nbhd_.data() + offset_[x - 1], offset_[x] - offset_[x - 1]};
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex x = 1; x <= n_; ++x)
    best = std::max(best, offset_[x] - offset_[x - 1] - 1);
  return static_cast<int>(best);
}

Graph load_graph(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("missing 'graph <n> <m>' header");
  const auto& head = lines.front();
  if (head.tokens.front() != "graph")
    throw ParseError(detail::where(head) + ": expected 'graph <n> <m>'");
  detail::expect_fields(head, 3, "graph");
  long n = detail::parse_int(head, 1);
  long m = detail::parse_int(head, 2);
  if (n < 1) throw ParseError(detail::where(head) + ": vertex count must be >= 1");
  if (m < 0) throw ParseError(detail::where(head) + ": edge count must be >= 0");
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1) + " edge lines");

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.front() != "e")
      throw ParseError(detail::where(line) + ": expected 'e <u> <v>'");
    detail::expect_fields(line, 3, "e");
    long u = detail::parse_int(line, 1);
    long v = detail::parse_int(line, 2);
    std::string id = detail::where(line) + ": edge " +
                     edge_name(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (u < 1 || u > n || v < 1 || v > n)
      throw ValidationError(id + ": endpoint outside 1.." + std::to_string(n));
    if (u == v) throw ValidationError(id + ": self-loop");
    auto& cell = seen[(std::min(u, v) - 1) * n + (std::max(u, v) - 1)];
    if (cell) throw ValidationError(id + ": duplicate edge");
    cell = 1;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph load_graph_file(const std::string& path) {
  return load_graph(detail::read_file(path));
}

VertexSet closed_neighborhood(const Graph& g, Vertex x) {
  auto span = g.closed_neighborhood(x);
  return {span.begin(), span.end()};
}

int bfs_distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v))
    throw std::out_of_range("bfs_distance: vertex outside 1.." +
                            std::to_string(g.vertex_count()));
  if (u == v) return 0;
  std::vector<int> dist(g.vertex_count() + 1, -1);
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.closed_neighborhood(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  throw std::logic_error("bfs_distance: graph not connected");
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> out(static_cast<std::size_t>(n) * n, -1);
  for (Vertex s = 1; s <= n; ++s) {
    int* row = out.data() + static_cast<std::size_t>(s - 1) * n;
    std::deque<Vertex> queue{s};
    row[s - 1] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.closed_neighborhood(x))
        if (row[y - 1] < 0) {
          row[y - 1] = row[x - 1] + 1;
          queue.push_back(y);
        }
    }
  }
  return out;
}

bool is_cop_win(const Graph& g) {
  // Corner removal: u is a corner if some other live v dominates N[u]
  // restricted to the live vertices. Dismantlability does not depend on
  // the order in which corners are removed.
  const int n = g.vertex_count();
  std::vector<char> alive(n + 1, 1);
  int remaining = n;
  bool removed = true;
  while (remaining > 1 && removed) {
    removed = false;
    for (Vertex u = 1; u <= n && !removed; ++u) {
      if (!alive[u]) continue;
      for (Vertex v = 1; v <= n; ++v) {
        if (v == u || !alive[v]) continue;
        bool dominated = true;
        for (Vertex w : g.closed_neighborhood(u))
          if (alive[w] && w != v && !g.adjacent(v, w)) {
            dominated = false;
            break;
          }
        if (dominated) {
          alive[u] = 0;
          --remaining;
          removed = true;
          break;
        }
      }
    }
  }
  return remaining == 1;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace scpr
