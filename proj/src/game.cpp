#include "scpr/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scpr {

namespace {

bool in_nbhd(const Graph& g, Vertex from, Vertex to) {
  auto nb = g.closed_neighborhood(from);
  return std::binary_search(nb.begin(), nb.end(), to);
}

[[noreturn]] void illegal(const std::string& state, int player, Vertex a) {
  throw std::invalid_argument("illegal action " + std::to_string(a) +
                              " for C" + std::to_string(player) + " at " +
                              state);
}

// Sorts by key and sums probabilities of equal keys.
template <class Key>
void merge_entries(std::vector<std::pair<Key, double>>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (w > 0 && v[w - 1].first == v[r].first)
      v[w - 1].second += v[r].second;
    else
      v[w++] = v[r];
  }
  v.resize(w);
}

}  // namespace

std::vector<SeqState> enumerate_seq_states(const Graph& g) {
  StateIndex idx(g.vertex_count(), Variant::Sequential);
  std::vector<SeqState> out;
  out.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(idx.seq_state(i));
  return out;
}

std::vector<ConcState> enumerate_conc_states(const Graph& g) {
  StateIndex idx(g.vertex_count(), Variant::Concurrent);
  std::vector<ConcState> out;
  out.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(idx.conc_state(i));
  return out;
}

VertexSet legal_actions(const Graph& g, const SeqState& s, int player) {
  if (classify(s) != StateClass::Ordinary) return {kNullMove};
  Vertex own = player == 1 ? s.x1 : s.x2;
  if (s.u == player) return closed_neighborhood(g, own);
  return {own};
}

VertexSet legal_actions(const Graph& g, const ConcState& s, int player) {
  if (classify(s) != StateClass::Ordinary) return {kNullMove};
  return closed_neighborhood(g, player == 1 ? s.x1 : s.x2);
}

TransitionDistribution<SeqState> seq_transition(const Graph& g,
                                                const RobberStrategy& sigma,
                                                const SeqState& s,
                                                Vertex action) {
  if (classify(s) != StateClass::Ordinary) {
    if (action != kNullMove) illegal(to_string(s), s.terminal ? 1 : s.u, action);
    return {{SeqState::Terminal(), 1.0}};
  }
  if (s.u == 1) {
    if (!in_nbhd(g, s.x1, action)) illegal(to_string(s), 1, action);
    return {{SeqState{action, s.x2, s.x3, 2, false}, 1.0}};
  }
  if (!in_nbhd(g, s.x2, action)) illegal(to_string(s), 2, action);
  // C2 lands on the robber: capture regardless of the robber's move.
  if (action == s.x3) return {{SeqState{s.x1, action, s.x3, 1, false}, 1.0}};
  TransitionDistribution<SeqState> out;
  for (auto [r, p] : sigma.distribution(s.x1, action, s.x3))
    out.emplace_back(SeqState{s.x1, action, r, 1, false}, p);
  return out;
}

TransitionDistribution<ConcState> conc_transition(const Graph& g,
                                                  const RobberStrategy& sigma,
                                                  const ConcState& s,
                                                  Vertex a1, Vertex a2) {
  if (classify(s) != StateClass::Ordinary) {
    if (a1 != kNullMove) illegal(to_string(s), 1, a1);
    if (a2 != kNullMove) illegal(to_string(s), 2, a2);
    return {{ConcState::Terminal(), 1.0}};
  }
  if (!in_nbhd(g, s.x1, a1)) illegal(to_string(s), 1, a1);
  if (!in_nbhd(g, s.x2, a2)) illegal(to_string(s), 2, a2);
  std::vector<std::pair<Vertex, double>> robber;
  for (auto [r, p] : sigma.distribution(s.x1, s.x2, s.x3)) {
    const bool c1 = a1 == r || (a1 == s.x3 && r == s.x1);
    const bool c2 = a2 == r || (a2 == s.x3 && r == s.x2);
    robber.emplace_back(c1 ? a1 : c2 ? a2 : r, p);
  }
  merge_entries(robber);
  TransitionDistribution<ConcState> out;
  for (auto [r, p] : robber) out.emplace_back(ConcState{a1, a2, r, false}, p);
  return out;
}

CompiledGame compile_game(const Graph& g, const RobberStrategy& sigma,
                          Variant variant) {
  if (sigma.vertex_count() != g.vertex_count())
    throw std::invalid_argument("robber strategy and graph sizes differ");
  CompiledGame game;
  game.index = StateIndex(g.vertex_count(), variant);
  const StateIndex& idx = game.index;
  const std::size_t size = idx.size();
  if (size > UINT32_MAX)
    throw std::length_error("state space too large for 32-bit indices");
  game.payoff.resize(size);
  game.act1_off.assign(1, 0);
  game.act2_off.assign(1, 0);
  game.pair_off.assign(1, 0);
  game.succ_off.assign(1, 0);

  auto add_pair = [&](const auto& dist) {
    for (const auto& [next, p] : dist) {
      std::size_t t = next.terminal ? idx.terminal() : idx.index(next);
      game.succ.push_back(static_cast<std::uint32_t>(t));
      game.prob.push_back(p);
    }
    if (dist.size() != 1) game.deterministic = false;
    game.succ_off.push_back(static_cast<std::uint32_t>(game.succ.size()));
  };

  for (std::size_t s = 0; s < size; ++s) {
    const StateClass cls = idx.classify(s);
    game.payoff[s] = immediate_payoff(cls);
    if (variant == Variant::Sequential) {
      const SeqState st = idx.seq_state(s);
      VertexSet a1 = legal_actions(g, st, 1), a2 = legal_actions(g, st, 2);
      game.act1.insert(game.act1.end(), a1.begin(), a1.end());
      game.act2.insert(game.act2.end(), a2.begin(), a2.end());
      const int mover = st.terminal ? 1 : st.u;
      const VertexSet& moves = mover == 1 ? a1 : a2;
      for (Vertex a : moves) {
        auto dist = seq_transition(g, sigma, st, a);
        std::sort(dist.begin(), dist.end(), [&](const auto& x, const auto& y) {
          return idx.index(x.first) < idx.index(y.first);
        });
        add_pair(dist);
      }
    } else {
      const ConcState st = idx.conc_state(s);
      VertexSet a1 = legal_actions(g, st, 1), a2 = legal_actions(g, st, 2);
      game.act1.insert(game.act1.end(), a1.begin(), a1.end());
      game.act2.insert(game.act2.end(), a2.begin(), a2.end());
      for (Vertex b1 : a1)
        for (Vertex b2 : a2) add_pair(conc_transition(g, sigma, st, b1, b2));
    }
    game.act1_off.push_back(static_cast<std::uint32_t>(game.act1.size()));
    game.act2_off.push_back(static_cast<std::uint32_t>(game.act2.size()));
    game.pair_off.push_back(static_cast<std::uint32_t>(game.succ_off.size() - 1));
  }
  return game;
}

CompiledGame freeze_policy(const CompiledGame& game, const CopPolicy& policy) {
  if (!(policy.states() == game.index))
    throw std::invalid_argument("policy does not match the game's state space");
  const int player = policy.player();
  CompiledGame out;
  out.index = game.index;
  out.payoff = game.payoff;
  out.act1_off.assign(1, 0);
  out.act2_off.assign(1, 0);
  out.pair_off.assign(1, 0);
  out.succ_off.assign(1, 0);

  std::vector<std::pair<std::uint32_t, double>> acc;
  for (std::size_t s = 0; s < game.size(); ++s) {
    const std::size_t m1 = game.rows(s), m2 = game.cols(s);
    const bool frozen = game.index.is_decision_state(s, player);
    // (weight, action index) of the frozen player at this state.
    std::vector<std::pair<double, std::size_t>> mix;
    if (frozen) {
      auto own = player == 1 ? game.actions1(s) : game.actions2(s);
      for (auto [dest, w] : policy.distribution(s)) {
        auto it = std::find(own.begin(), own.end(), dest);
        if (it == own.end())
          throw std::invalid_argument(
              "policy for C" + std::to_string(player) + " plays illegal move " +
              std::to_string(dest) + " at " + game.index.describe(s));
        mix.emplace_back(w, static_cast<std::size_t>(it - own.begin()));
      }
    }
    auto copy_actions = [&](std::span<const Vertex> a, std::vector<Vertex>& dst,
                            bool collapse, Vertex label) {
      if (collapse)
        dst.push_back(label);
      else
        dst.insert(dst.end(), a.begin(), a.end());
    };
    const Vertex label = policy.kind() == PolicyKind::Deterministic && frozen
                             ? policy.move(s)
                             : kNullMove;
    copy_actions(game.actions1(s), out.act1, frozen && player == 1, label);
    copy_actions(game.actions2(s), out.act2, frozen && player == 2, label);

    const std::size_t free_count = frozen ? (player == 1 ? m2 : m1) : m1 * m2;
    for (std::size_t f = 0; f < free_count; ++f) {
      acc.clear();
      if (!frozen) {
        std::size_t p = game.pair_off[s] + f;
        for (std::uint32_t k = game.succ_off[p]; k < game.succ_off[p + 1]; ++k)
          acc.emplace_back(game.succ[k], game.prob[k]);
      } else {
        for (auto [w, a] : mix) {
          std::size_t p = player == 1 ? game.pair(s, a, f) : game.pair(s, f, a);
          for (std::uint32_t k = game.succ_off[p]; k < game.succ_off[p + 1]; ++k)
            acc.emplace_back(game.succ[k], w * game.prob[k]);
        }
        merge_entries(acc);
      }
      for (auto [t, p] : acc) {
        out.succ.push_back(t);
        out.prob.push_back(p);
      }
      if (acc.size() != 1) out.deterministic = false;
      out.succ_off.push_back(static_cast<std::uint32_t>(out.succ.size()));
    }
    out.act1_off.push_back(static_cast<std::uint32_t>(out.act1.size()));
    out.act2_off.push_back(static_cast<std::uint32_t>(out.act2.size()));
    out.pair_off.push_back(static_cast<std::uint32_t>(out.succ_off.size() - 1));
  }
  return out;
}

}  // namespace scpr
