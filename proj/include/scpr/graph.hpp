#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scpr {

// Vertices are dense identifiers 1..n.
using Vertex = int;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

/**
 * Undirected, simple, connected graph on vertices 1..n.
 *
 * Construction validates every invariant and throws ValidationError on
 * self-loops, duplicate edges, out-of-range endpoints or a disconnected
 * edge set. Closed neighborhoods are precomputed; the object is immutable.
 */
class Graph {
 public:
  Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  bool contains(Vertex x) const { return x >= 1 && x <= n_; }
  bool adjacent(Vertex x, Vertex y) const;

  // N[x] = {x} plus neighbours, sorted. Throws std::out_of_range.
  std::span<const Vertex> closed_neighborhood(Vertex x) const;

  int max_degree() const;

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // u < v
  std::vector<std::size_t> offset_;               // CSR over closed nbhds
  std::vector<Vertex> nbhd_;
  std::vector<char> adj_;  // n*n adjacency matrix
};

// Parses the edge-list document:
//   # comment
//   graph <n> <m>
//   e <u> <v>      (exactly m lines)
// Throws ParseError / ValidationError naming the offending line.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

VertexSet closed_neighborhood(const Graph& g, Vertex x);

// Shortest-path length. Throws std::out_of_range for bad vertices.
int bfs_distance(const Graph& g, Vertex u, Vertex v);

// All-pairs distances, row-major n*n (0-based indices).
std::vector<int> all_pairs_distances(const Graph& g);

// True iff the graph is dismantlable (cop number one).
bool is_cop_win(const Graph& g);

// Serialises to the edge-list format.
std::string to_edge_list(const Graph& g);

}  // namespace scpr
