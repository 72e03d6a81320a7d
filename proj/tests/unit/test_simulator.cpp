#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "scpr/fixtures.hpp"
#include "scpr/game.hpp"
#include "scpr/simulator.hpp"
#include "scpr/solvers.hpp"
#include "support.hpp"

using namespace scpr;
using namespace scpr::testing;

namespace {

// Probability of moving from a to b in one turn under the two policies.
double step_probability(const Graph& g, const RobberStrategy& sigma,
                        const CopPolicy& pi1, const CopPolicy& pi2,
                        std::size_t a, std::size_t b) {
  const StateIndex& idx = pi1.states();
  double total = 0.0;
  if (idx.variant() == Variant::Sequential) {
    SeqState s = idx.seq_state(a);
    MoveDistribution law = {{kNullMove, 1.0}};
    if (idx.is_decision_state(a, s.u)) law = (s.u == 1 ? pi1 : pi2).distribution(a);
    else if (idx.classify(a) == StateClass::Ordinary) law = {{s.u == 1 ? s.x1 : s.x2, 1.0}};
    for (const auto& [act, p] : law)
      for (const auto& [t, q] : seq_transition(g, sigma, s, act))
        if (idx.index(t) == b) total += p * q;
  } else {
    ConcState s = idx.conc_state(a);
    MoveDistribution l1 = {{kNullMove, 1.0}}, l2 = l1;
    if (idx.classify(a) == StateClass::Ordinary) {
      l1 = pi1.distribution(a);
      l2 = pi2.distribution(a);
    }
    for (const auto& [a1, p1] : l1)
      for (const auto& [a2, p2] : l2)
        for (const auto& [t, q] : conc_transition(g, sigma, s, a1, a2))
          if (idx.index(t) == b) total += p1 * p2 * q;
  }
  return total;
}

std::uint64_t splitmix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

TEST_SUITE("simulator") {

TEST_CASE("episode seeds") {
  CHECK(episode_seed(0, 0) == splitmix(0x9E3779B97F4A7C15ull));
  CHECK(episode_seed(42, 7) == splitmix(42 + 8 * 0x9E3779B97F4A7C15ull));
  CHECK(episode_seed(1, 0) != episode_seed(0, 0));
}

TEST_CASE("default horizon") {
  CHECK(default_horizon(path_graph(3)) == 36);
  CHECK(default_horizon(fixtures::six_vertex_graph()) == 144);
}

TEST_CASE("trace through the swap state") {
  Graph g = fixtures::six_vertex_graph();
  RobberStrategy sigma = fixtures::six_vertex_robber(g);
  StateIndex idx(6, Variant::Concurrent);
  CopPolicy pi1(1, PolicyKind::Deterministic, Variant::Concurrent, 6);
  pi1.set_move(idx.index(ConcState{2, 6, 4}), 3);
  CopPolicy pi2 = CopPolicy::stay(2, Variant::Concurrent, 6);
  EpisodeTrace t = play_episode(g, sigma, pi1, pi2, ConcState{2, 6, 1}, 100, 1);
  CHECK(t.outcome == Outcome::C1Wins);
  REQUIRE(t.states.size() == 3);
  CHECK(t.length == 2);
  CHECK(t.states[1] == idx.index(ConcState{2, 6, 4}));
  CHECK(t.states[2] == idx.index(ConcState{3, 6, 3}));
  CHECK(trace_to_text(t) == "0 2 6 1\n1 2 6 4\n2 3 6 3\noutcome C1\n");
}

TEST_CASE("captured and static starts") {
  Graph p = path_graph(3);
  RobberStrategy stay = RobberStrategy::stay(p);
  for (Variant v : {Variant::Sequential, Variant::Concurrent}) {
    CopPolicy pi1 = CopPolicy::stay(1, v, 3), pi2 = CopPolicy::stay(2, v, 3);
    StateIndex idx(3, v);
    const std::size_t caught = v == Variant::Sequential ? idx.index(SeqState{2, 1, 2, 1})
                                                        : idx.index(ConcState{2, 1, 2});
    EpisodeTrace c = play_episode(p, stay, pi1, pi2, caught, 10, 5);
    CHECK(c.outcome == Outcome::C1Wins);
    CHECK(c.length == 0);
    const std::size_t apart = v == Variant::Sequential ? idx.index(SeqState{1, 1, 3, 1})
                                                       : idx.index(ConcState{1, 1, 3});
    EpisodeTrace s = play_episode(p, stay, pi1, pi2, apart, 10, 5);
    CHECK(s.outcome == Outcome::Truncated);
    CHECK(s.length == 10);
    CHECK(s.states.size() == 11);
  }
  CopPolicy s1 = CopPolicy::stay(1, Variant::Sequential, 3);
  CopPolicy s2 = CopPolicy::stay(2, Variant::Sequential, 3);
  EpisodeTrace lost = play_episode(p, stay, s1, s2, SeqState{1, 3, 3, 2}, 10, 0);
  CHECK(lost.outcome == Outcome::C2Wins);
  CHECK(lost.length == 0);
}

TEST_CASE("mixed optimal play wins half the time") {
  Graph g = fixtures::six_vertex_graph();
  RobberStrategy sigma = fixtures::six_vertex_robber(g);
  SolveReport r = solve_concurrent(g, sigma);
  const std::size_t s0 = r.policy1.states().index(ConcState{2, 6, 1});
  Estimate e = estimate_value(g, sigma, r.policy1, r.policy2, s0, 100000,
                              default_horizon(g), 2024, 4);
  CHECK(e.episodes == 100000);
  CHECK(e.standard_error > 0.0);
  CHECK(std::abs(e.mean - 0.5) <= 3.0 * e.standard_error);
  CHECK(e.truncated_fraction == 0.0);
}

TEST_CASE("deterministic chains give exact estimates") {
  Graph p = path_graph(3);
  RobberStrategy stay = RobberStrategy::stay(p);
  SolveReport r = solve_oblivious_concurrent(p, stay);
  const StateIndex& idx = r.policy1.states();
  Estimate win = estimate_value(p, stay, r.policy1, r.policy2,
                                idx.index(ConcState{3, 1, 2}), 500, 36, 3);
  CHECK(win.mean == 1.0);
  CHECK(win.standard_error == 0.0);
  Estimate loss = estimate_value(p, stay, r.policy1, r.policy2,
                                 idx.index(ConcState{1, 2, 3}), 500, 36, 3);
  CHECK(loss.mean == 0.0);
  CHECK(loss.standard_error == 0.0);
  Estimate once = estimate_value(p, stay, r.policy1, r.policy2,
                                 idx.index(ConcState{3, 1, 2}), 1, 36, 3);
  CHECK(once.mean == 1.0);
}

TEST_CASE("estimates do not depend on the thread count") {
  std::mt19937_64 rng(21);
  Graph g = random_connected_graph(5, 0.4, rng);
  RobberStrategy sigma = random_markov_robber(g, rng);
  SolveReport r = solve_sequential(g, sigma);
  const std::size_t s0 = r.policy1.states().index(SeqState{1, 2, 5, 1});
  Estimate a = estimate_value(g, sigma, r.policy1, r.policy2, s0, 3000, 100, 77, 1);
  Estimate b = estimate_value(g, sigma, r.policy1, r.policy2, s0, 3000, 100, 77, 4);
  Estimate c = estimate_value(g, sigma, r.policy1, r.policy2, s0, 3000, 100, 77, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.truncated_fraction == b.truncated_fraction);
  CHECK(a.mean == c.mean);
  CHECK(play_episode(g, sigma, r.policy1, r.policy2, s0, 100, 9).states ==
        play_episode(g, sigma, r.policy1, r.policy2, s0, 100, 9).states);
}

TEST_CASE("every step of every trace is possible") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_connected_graph(3 + trial % 4, 0.4, rng);
    RobberStrategy sigma = random_markov_robber(g, rng);
    const Variant v = trial % 2 ? Variant::Concurrent : Variant::Sequential;
    SolveReport r = v == Variant::Sequential ? solve_sequential(g, sigma)
                                             : solve_concurrent(g, sigma);
    const StateIndex& idx = r.policy1.states();
    for (std::uint64_t k = 0; k < 40; ++k) {
      const std::size_t s0 = rng() % (idx.size() - 1);
      EpisodeTrace t = play_episode(g, sigma, r.policy1, r.policy2, s0, 60, k);
      CHECK(t.states.size() == t.length + 1);
      for (std::size_t i = 0; i + 1 < t.states.size(); ++i)
        CHECK(step_probability(g, sigma, r.policy1, r.policy2, t.states[i],
                               t.states[i + 1]) > 0.0);
      const StateClass last = idx.classify(t.states.back());
      if (t.outcome == Outcome::C1Wins) CHECK(last == StateClass::C1Capture);
      if (t.outcome == Outcome::C2Wins) CHECK(last == StateClass::C2Capture);
      if (t.outcome == Outcome::Truncated) CHECK(t.length == 60);
    }
  }
}

}
