#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scpr/graph.hpp"
#include "scpr/state.hpp"
#include "scpr/strategy.hpp"

namespace scpr {

enum class Outcome { C1Wins, C2Wins, Truncated };

const char* to_string(Outcome o);

// A finite play s0 s1 ... as state indices of one variant.
struct EpisodeTrace {
  StateIndex index{1, Variant::Sequential};
  std::vector<std::size_t> states;
  Outcome outcome = Outcome::Truncated;
  std::size_t length = 0;  // number of turns played
};

struct Estimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t episodes = 0;
  double truncated_fraction = 0.0;
};

// Default horizon: 4 n^2 turns.
std::size_t default_horizon(const Graph& g);

// Seed of episode `index`: the splitmix64 finaliser applied to
// master_seed + (index + 1) * 0x9E3779B97F4A7C15.
std::uint64_t episode_seed(std::uint64_t master_seed, std::uint64_t index);

/**
 * Plays one episode from s0 until the first capture state or until `horizon`
 * turns have been played. Each turn draws, in order, C1's move (at C1's
 * decision states), C2's move (at C2's decision states) and the successor,
 * each by inverse CDF over the sorted support with u = (rng() >> 11) / 2^53
 * from an mt19937_64 seeded with `seed`.
 */
EpisodeTrace play_episode(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& pi1, const CopPolicy& pi2,
                          std::size_t s0, std::size_t horizon,
                          std::uint64_t seed);
EpisodeTrace play_episode(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& pi1, const CopPolicy& pi2,
                          const SeqState& s0, std::size_t horizon,
                          std::uint64_t seed);
EpisodeTrace play_episode(const Graph& g, const RobberStrategy& sigma,
                          const CopPolicy& pi1, const CopPolicy& pi2,
                          const ConcState& s0, std::size_t horizon,
                          std::uint64_t seed);

// Fraction of C1 wins over `episodes` independent plays. Results do not
// depend on `threads`.
Estimate estimate_value(const Graph& g, const RobberStrategy& sigma,
                        const CopPolicy& pi1, const CopPolicy& pi2,
                        std::size_t s0, std::size_t episodes,
                        std::size_t horizon, std::uint64_t master_seed,
                        unsigned threads = 1);

// `t x1 x2 x3 [u]` per state, then `outcome C1|C2|TRUNC`.
std::string trace_to_text(const EpisodeTrace& trace);

}  // namespace scpr
