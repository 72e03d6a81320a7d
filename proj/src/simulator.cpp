#include "scpr/simulator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "parallel.hpp"
#include "scpr/game.hpp"

namespace scpr {

namespace {

template <class Dist>
std::size_t draw(std::mt19937_64& rng, const Dist& dist) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double cum = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    cum += dist[k].second;
    if (u < cum) return k;
  }
  return dist.size() - 1;
}

void check_policies(const StateIndex& idx, const CopPolicy& pi1,
                    const CopPolicy& pi2) {
  if (pi1.player() != 1 || pi2.player() != 2)
    throw std::invalid_argument("expected policies for C1 and C2");
  if (!(pi1.states() == idx) || !(pi2.states() == idx))
    throw std::invalid_argument("policy does not match the game's state space");
}

Vertex choose(std::mt19937_64& rng, const StateIndex& idx, const CopPolicy& pi,
              std::size_t s) {
  if (!idx.is_decision_state(s, pi.player())) return pi.own_vertex(s);
  MoveDistribution d = pi.distribution(s);
  return d[draw(rng, d)].first;
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::C1Wins: return "C1";
    case Outcome::C2Wins: return "C2";
    case Outcome::Truncated: return "TRUNC";
  }
  return "?";
}

std::size_t default_horizon(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  return 4 * n * n;
}

std::uint64_t episode_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EpisodeTrace play_episode(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& pi1, const CopPolicy& pi2,
                          std::size_t s0, std::size_t horizon,
                          std::uint64_t seed) {
  const StateIndex& idx = pi1.states();
  check_policies(idx, pi1, pi2);
  if (idx.n() != g.vertex_count())
    throw std::invalid_argument("policy and graph sizes differ");
  if (s0 >= idx.terminal())
    throw std::invalid_argument("start state must not be the terminal");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");

  std::mt19937_64 rng(seed);
  EpisodeTrace trace;
  trace.index = idx;
  std::size_t s = s0;
  trace.states.push_back(s);
  const bool seq = idx.variant() == Variant::Sequential;
  while (true) {
    const StateClass cls = idx.classify(s);
    if (cls == StateClass::C1Capture) {
      trace.outcome = Outcome::C1Wins;
      break;
    }
    if (cls == StateClass::C2Capture) {
      trace.outcome = Outcome::C2Wins;
      break;
    }
    if (trace.length == horizon) {
      trace.outcome = Outcome::Truncated;
      break;
    }
    const Vertex a1 = choose(rng, idx, pi1, s);
    const Vertex a2 = choose(rng, idx, pi2, s);
    if (seq) {
      const SeqState st = idx.seq_state(s);
      auto next = seq_transition(g, sigma, st, st.u == 1 ? a1 : a2);
      s = idx.index(next[draw(rng, next)].first);
    } else {
      auto next = conc_transition(g, sigma, idx.conc_state(s), a1, a2);
      s = idx.index(next[draw(rng, next)].first);
    }
    trace.states.push_back(s);
    ++trace.length;
  }
  return trace;
}

EpisodeTrace play_episode(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& pi1, const CopPolicy& pi2,
                          const SeqState& s0, std::size_t horizon,
                          std::uint64_t seed) {
  return play_episode(g, sigma, pi1, pi2, pi1.states().index(s0), horizon,
                      seed);
}

EpisodeTrace play_episode(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& pi1, const CopPolicy& pi2,
                          const ConcState& s0, std::size_t horizon,
                          std::uint64_t seed) {
  return play_episode(g, sigma, pi1, pi2, pi1.states().index(s0), horizon,
                      seed);
}

Estimate estimate_value(const Graph& g, const RobberStrategy& sigma,
                        const CopPolicy& pi1, const CopPolicy& pi2,
                        std::size_t s0, std::size_t episodes,
                        std::size_t horizon, std::uint64_t master_seed,
                        unsigned threads) {
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  std::vector<Outcome> outcomes(episodes);
  detail::parallel_for(episodes, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e)
      outcomes[e] = play_episode(g, sigma, pi1, pi2, s0, horizon,
                                 episode_seed(master_seed, e))
                        .outcome;
  });
  std::size_t wins = 0, truncated = 0;
  for (Outcome o : outcomes) {
    wins += o == Outcome::C1Wins;
    truncated += o == Outcome::Truncated;
  }
  Estimate est;
  est.episodes = episodes;
  est.mean = static_cast<double>(wins) / static_cast<double>(episodes);
  est.standard_error =
      std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(episodes));
  est.truncated_fraction =
      static_cast<double>(truncated) / static_cast<double>(episodes);
  return est;
}

std::string trace_to_text(const EpisodeTrace& trace) {
  const StateIndex& idx = trace.index;
  std::string out;
  for (std::size_t t = 0; t < trace.states.size(); ++t) {
    const std::size_t s = trace.states[t];
    out += std::to_string(t) + " " + std::to_string(idx.x1(s)) + " " +
           std::to_string(idx.x2(s)) + " " + std::to_string(idx.x3(s));
    if (idx.variant() == Variant::Sequential)
      out += " " + std::to_string(idx.u(s));
    out += "\n";
  }
  out += std::string("outcome ") + to_string(trace.outcome) + "\n";
  return out;
}

}  // namespace scpr
