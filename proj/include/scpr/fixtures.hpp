#pragma once
// The six-vertex example whose one-turn concurrent game at (2,6,1) has no
// pure saddle point.

#include "scpr/graph.hpp"
#include "scpr/strategy.hpp"

namespace scpr::fixtures {

inline constexpr const char* kSixVertexGraph =
    "graph 6 5\n"
    "e 1 4\n"
    "e 2 3\n"
    "e 3 4\n"
    "e 4 5\n"
    "e 5 6\n";

inline constexpr const char* kSixVertexRobber =
    "robber state\n"
    "m 2 6 1 4\n"
    "m 2 6 4 3\n"
    "m 2 5 4 5\n"
    "m 3 6 4 5\n"
    "m 3 5 4 3\n";

inline Graph six_vertex_graph() { return load_graph(kSixVertexGraph); }

inline RobberStrategy six_vertex_robber(const Graph& g) {
  return load_robber_strategy(kSixVertexRobber, g);
}

}  // namespace scpr::fixtures
