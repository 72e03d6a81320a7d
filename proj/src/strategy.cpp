#include "scpr/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "scpr/error.hpp"
#include "text_util.hpp"

namespace scpr {

namespace {

std::string triple_name(const Triple& t) {
  auto [a, b, c] = t;
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

std::string real_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_triple(const Graph& g, const Triple& t) {
  auto [a, b, c] = t;
  if (!g.contains(a) || !g.contains(b) || !g.contains(c))
    throw ValidationError("state " + triple_name(t) + ": vertex outside 1.." +
                          std::to_string(g.vertex_count()));
}

void check_move(const Graph& g, const std::string& state, Vertex from,
                Vertex dest) {
  if (!g.contains(dest) || (dest != from && !g.adjacent(from, dest)))
    throw ValidationError("state " + state + ": illegal move to " +
                          std::to_string(dest) + " (not in N[" +
                          std::to_string(from) + "])");
}

// Drops zero weights, merges nothing (duplicates are an error), sorts.
MoveDistribution normalise_robber(const Graph& g, const Triple& t,
                                  MoveDistribution dist) {
  const Vertex from = std::get<2>(t);
  double sum = 0.0;
  MoveDistribution out;
  for (auto [dest, p] : dist) {
    check_move(g, triple_name(t), from, dest);
    if (!(p >= 0.0) || !std::isfinite(p))
      throw ValidationError("state " + triple_name(t) +
                            ": negative or non-finite probability for " +
                            std::to_string(dest));
    sum += p;
    if (p > 0.0) out.emplace_back(dest, p);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t k = 1; k < out.size(); ++k)
    if (out[k].first == out[k - 1].first)
      throw ValidationError("state " + triple_name(t) +
                            ": destination " + std::to_string(out[k].first) +
                            " listed twice");
  if (std::abs(sum - 1.0) > kDistributionTolerance)
    throw ValidationError("state " + triple_name(t) +
                          ": probabilities sum to " + real_text(sum) +
                          ", not 1");
  return out;
}

}  // namespace

const char* to_string(RobberKind k) {
  switch (k) {
    case RobberKind::ObliviousDeterministic: return "oblivious";
    case RobberKind::StateDeterministic: return "state";
    case RobberKind::StationaryMarkov: return "markov";
  }
  return "?";
}

RobberStrategy RobberStrategy::stay(const Graph& g) {
  std::vector<Vertex> moves(g.vertex_count());
  for (int x = 1; x <= g.vertex_count(); ++x) moves[x - 1] = x;
  return oblivious(g, std::move(moves));
}

RobberStrategy RobberStrategy::oblivious(const Graph& g,
                                         std::vector<Vertex> moves) {
  if (static_cast<int>(moves.size()) != g.vertex_count())
    throw ValidationError("oblivious strategy needs one destination per vertex");
  for (Vertex x = 1; x <= g.vertex_count(); ++x)
    check_move(g, "(" + std::to_string(x) + ")", x, moves[x - 1]);
  RobberStrategy s(RobberKind::ObliviousDeterministic, g.vertex_count());
  s.oblivious_ = std::move(moves);
  return s;
}

RobberStrategy RobberStrategy::state_deterministic(
    const Graph& g, std::map<Triple, Vertex> moves) {
  for (const auto& [t, dest] : moves) {
    check_triple(g, t);
    check_move(g, triple_name(t), std::get<2>(t), dest);
  }
  RobberStrategy s(RobberKind::StateDeterministic, g.vertex_count());
  s.state_moves_ = std::move(moves);
  return s;
}

RobberStrategy RobberStrategy::markov(
    const Graph& g, std::map<Triple, MoveDistribution> moves) {
  RobberStrategy s(RobberKind::StationaryMarkov, g.vertex_count());
  for (auto& [t, dist] : moves) {
    check_triple(g, t);
    s.dists_.emplace(t, normalise_robber(g, t, std::move(dist)));
  }
  return s;
}

bool RobberStrategy::is_deterministic() const {
  if (kind_ != RobberKind::StationaryMarkov) return true;
  return std::all_of(dists_.begin(), dists_.end(),
                     [](const auto& kv) { return kv.second.size() == 1; });
}

MoveDistribution RobberStrategy::distribution(Vertex x1, Vertex x2,
                                              Vertex x3) const {
  switch (kind_) {
    case RobberKind::ObliviousDeterministic:
      return {{oblivious_.at(x3 - 1), 1.0}};
    case RobberKind::StateDeterministic: {
      auto it = state_moves_.find({x1, x2, x3});
      return {{it == state_moves_.end() ? x3 : it->second, 1.0}};
    }
    case RobberKind::StationaryMarkov: {
      auto it = dists_.find({x1, x2, x3});
      if (it == dists_.end()) return {{x3, 1.0}};
      return it->second;
    }
  }
  return {{x3, 1.0}};
}

Vertex RobberStrategy::deterministic_move(Vertex x1, Vertex x2,
                                          Vertex x3) const {
  auto dist = distribution(x1, x2, x3);
  if (dist.size() != 1)
    throw std::logic_error("robber strategy is not deterministic at " +
                           triple_name({x1, x2, x3}));
  return dist.front().first;
}

Vertex RobberStrategy::oblivious_move(Vertex x3) const {
  if (kind_ != RobberKind::ObliviousDeterministic)
    throw std::logic_error("robber strategy is not oblivious");
  return oblivious_.at(x3 - 1);
}

std::string RobberStrategy::to_text() const {
  std::string out = std::string("robber ") + to_string(kind_) + "\n";
  switch (kind_) {
    case RobberKind::ObliviousDeterministic:
      for (Vertex x = 1; x <= n_; ++x)
        if (oblivious_[x - 1] != x)
          out += "m " + std::to_string(x) + " " +
                 std::to_string(oblivious_[x - 1]) + "\n";
      break;
    case RobberKind::StateDeterministic:
      for (const auto& [t, dest] : state_moves_) {
        auto [a, b, c] = t;
        out += "m " + std::to_string(a) + " " + std::to_string(b) + " " +
               std::to_string(c) + " " + std::to_string(dest) + "\n";
      }
      break;
    case RobberKind::StationaryMarkov:
      for (const auto& [t, dist] : dists_) {
        auto [a, b, c] = t;
        for (auto [dest, p] : dist)
          out += "p " + std::to_string(a) + " " + std::to_string(b) + " " +
                 std::to_string(c) + " " + std::to_string(dest) + " " +
                 real_text(p) + "\n";
      }
      break;
  }
  return out;
}

RobberStrategy load_robber_strategy(std::string_view text, const Graph& g) {
  auto lines = detail::tokenize(text);
  if (lines.empty())
    throw ParseError("missing 'robber <oblivious|state|markov>' header");
  const auto& head = lines.front();
  if (head.tokens.front() != "robber" || head.tokens.size() != 2)
    throw ParseError(detail::where(head) +
                     ": expected 'robber <oblivious|state|markov>'");
  const std::string_view kind = head.tokens[1];
  const long n = g.vertex_count();
  auto vertex = [&](const detail::Line& line, std::size_t k) {
    long x = detail::parse_int(line, k);
    if (x < 1 || x > n)
      throw ValidationError(detail::where(line) + ": vertex " +
                            std::to_string(x) + " outside 1.." +
                            std::to_string(n));
    return static_cast<Vertex>(x);
  };
  auto at = [](const detail::Line& line, const std::string& what) {
    return detail::where(line) + ": " + what;
  };

  if (kind == "oblivious") {
    std::vector<Vertex> moves(n);
    std::vector<char> seen(n + 1, 0);
    for (Vertex x = 1; x <= n; ++x) moves[x - 1] = x;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& line = lines[k];
      if (line.tokens.front() != "m")
        throw ParseError(at(line, "expected 'm <x3> <dest>'"));
      detail::expect_fields(line, 3, "m");
      Vertex from = vertex(line, 1), dest = vertex(line, 2);
      if (seen[from])
        throw ValidationError(at(line, "vertex " + std::to_string(from) +
                                           " listed twice"));
      seen[from] = 1;
      try {
        check_move(g, "(" + std::to_string(from) + ")", from, dest);
      } catch (const ValidationError& e) {
        throw ValidationError(at(line, e.what()));
      }
      moves[from - 1] = dest;
    }
    return RobberStrategy::oblivious(g, std::move(moves));
  }

  if (kind == "state") {
    std::map<Triple, Vertex> moves;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& line = lines[k];
      if (line.tokens.front() != "m")
        throw ParseError(at(line, "expected 'm <x1> <x2> <x3> <dest>'"));
      detail::expect_fields(line, 5, "m");
      Triple t{vertex(line, 1), vertex(line, 2), vertex(line, 3)};
      Vertex dest = vertex(line, 4);
      try {
        check_move(g, triple_name(t), std::get<2>(t), dest);
      } catch (const ValidationError& e) {
        throw ValidationError(at(line, e.what()));
      }
      if (!moves.emplace(t, dest).second)
        throw ValidationError(at(line, "state " + triple_name(t) +
                                           " listed twice"));
    }
    return RobberStrategy::state_deterministic(g, std::move(moves));
  }

  if (kind == "markov") {
    std::map<Triple, MoveDistribution> moves;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& line = lines[k];
      if (line.tokens.front() != "p")
        throw ParseError(at(line, "expected 'p <x1> <x2> <x3> <dest> <prob>'"));
      detail::expect_fields(line, 6, "p");
      Triple t{vertex(line, 1), vertex(line, 2), vertex(line, 3)};
      Vertex dest = vertex(line, 4);
      double p = detail::parse_real(line, 5);
      try {
        check_move(g, triple_name(t), std::get<2>(t), dest);
      } catch (const ValidationError& e) {
        throw ValidationError(at(line, e.what()));
      }
      moves[t].emplace_back(dest, p);
    }
    return RobberStrategy::markov(g, std::move(moves));
  }

  throw ParseError(detail::where(head) + ": unknown robber kind '" +
                   std::string(kind) + "'");
}

RobberStrategy load_robber_strategy_file(const std::string& path,
                                         const Graph& g) {
  return load_robber_strategy(detail::read_file(path), g);
}

// ---------------------------------------------------------------------------
// CopPolicy

CopPolicy::CopPolicy(int player, PolicyKind kind, Variant variant, int n)
    : player_(player), kind_(kind), index_(n, variant) {
  if (player != 1 && player != 2)
    throw std::invalid_argument("CopPolicy: player must be 1 or 2");
  if (kind == PolicyKind::Deterministic)
    moves_.assign(index_.size(), 0);
  else
    mixed_.assign(index_.size(), {});
}

CopPolicy CopPolicy::stay(int player, Variant variant, int n) {
  return CopPolicy(player, PolicyKind::Deterministic, variant, n);
}

void CopPolicy::set_move(std::size_t state, Vertex dest) {
  if (kind_ == PolicyKind::Deterministic)
    moves_.at(state) = dest;
  else
    mixed_.at(state) = {{dest, 1.0}};
}

void CopPolicy::set_distribution(std::size_t state, MoveDistribution dist) {
  if (kind_ != PolicyKind::Mixed)
    throw std::logic_error("set_distribution on a deterministic policy");
  std::sort(dist.begin(), dist.end());
  mixed_.at(state) = std::move(dist);
}

Vertex CopPolicy::own_vertex(std::size_t state) const {
  return player_ == 1 ? index_.x1(state) : index_.x2(state);
}

MoveDistribution CopPolicy::distribution(std::size_t state) const {
  if (kind_ == PolicyKind::Deterministic) return {{move(state), 1.0}};
  const auto& d = mixed_.at(state);
  if (d.empty()) return {{own_vertex(state), 1.0}};
  MoveDistribution out;
  for (auto [dest, p] : d)
    if (p > 0.0) out.emplace_back(dest, p);
  return out;
}

Vertex CopPolicy::move(std::size_t state) const {
  if (kind_ != PolicyKind::Deterministic)
    throw std::logic_error("move() on a mixed policy");
  Vertex m = moves_.at(state);
  return m == 0 ? own_vertex(state) : m;
}

std::vector<std::string> validate_policy(const CopPolicy& policy,
                                         const Graph& g, Variant variant) {
  std::vector<std::string> errors;
  if (policy.variant() != variant) {
    errors.push_back(std::string("policy is for the ") +
                     to_string(policy.variant()) + " variant, expected " +
                     to_string(variant));
    return errors;
  }
  if (policy.states().n() != g.vertex_count()) {
    errors.push_back("policy covers " + std::to_string(policy.states().n()) +
                     " vertices, graph has " +
                     std::to_string(g.vertex_count()));
    return errors;
  }
  const StateIndex& idx = policy.states();
  const std::string who = "C" + std::to_string(policy.player());
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (!idx.is_decision_state(s, policy.player())) continue;
    const Vertex from = policy.own_vertex(s);
    const std::string here = idx.describe(s);
    MoveDistribution dist;
    if (policy.kind() == PolicyKind::Deterministic) {
      dist = {{policy.move(s), 1.0}};
    } else if (policy.raw_distribution(s).empty()) {
      dist = {{from, 1.0}};
    } else {
      dist = policy.raw_distribution(s);
      double sum = 0.0;
      for (auto [dest, p] : dist) {
        if (!(p >= 0.0) || !std::isfinite(p))
          errors.push_back(here + ": " + who + " gives move " +
                           std::to_string(dest) + " weight " + real_text(p));
        sum += p;
      }
      if (std::abs(sum - 1.0) > kDistributionTolerance)
        errors.push_back(here + ": " + who + " move weights sum to " +
                         real_text(sum));
      for (std::size_t k = 1; k < dist.size(); ++k)
        if (dist[k].first == dist[k - 1].first)
          errors.push_back(here + ": " + who + " lists move " +
                           std::to_string(dist[k].first) + " twice");
    }
    for (auto [dest, p] : dist)
      if (!g.contains(dest) || (dest != from && !g.adjacent(from, dest)))
        errors.push_back(here + ": " + who + " moves from " +
                         std::to_string(from) + " to " + std::to_string(dest) +
                         " (not in N[" + std::to_string(from) + "])");
  }
  return errors;
}

std::string policy_to_text(const CopPolicy& policy) {
  const StateIndex& idx = policy.states();
  const bool seq = idx.variant() == Variant::Sequential;
  const bool det = policy.kind() == PolicyKind::Deterministic;
  std::string out = "cop " + std::to_string(policy.player()) +
                    (det ? " deterministic\n" : " mixed\n");
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (!idx.is_decision_state(s, policy.player())) continue;
    std::string key = std::to_string(idx.x1(s)) + " " +
                      std::to_string(idx.x2(s)) + " " +
                      std::to_string(idx.x3(s));
    if (seq) key += " " + std::to_string(idx.u(s));
    if (det) {
      out += "m " + key + " " + std::to_string(policy.move(s)) + "\n";
    } else {
      for (auto [dest, p] : policy.distribution(s))
        out += "p " + key + " " + std::to_string(dest) + " " + real_text(p) +
               "\n";
    }
  }
  return out;
}

std::vector<CopPolicy> load_cop_policies(std::string_view text, const Graph& g,
                                         Variant variant) {
  auto lines = detail::tokenize(text);
  const bool seq = variant == Variant::Sequential;
  const std::size_t key_fields = seq ? 4 : 3;
  const long n = g.vertex_count();
  std::vector<CopPolicy> out;
  std::vector<char> touched;
  for (const auto& line : lines) {
    const auto& head = line.tokens.front();
    if (head == "cop") {
      detail::expect_fields(line, 3, "cop");
      long player = detail::parse_int(line, 1);
      if (player != 1 && player != 2)
        throw ParseError(detail::where(line) + ": player must be 1 or 2");
      PolicyKind kind;
      if (line.tokens[2] == "deterministic")
        kind = PolicyKind::Deterministic;
      else if (line.tokens[2] == "mixed")
        kind = PolicyKind::Mixed;
      else
        throw ParseError(detail::where(line) + ": unknown policy kind '" +
                         std::string(line.tokens[2]) + "'");
      out.emplace_back(static_cast<int>(player), kind, variant,
                       static_cast<int>(n));
      touched.assign(out.back().states().size(), 0);
      continue;
    }
    if (out.empty())
      throw ParseError(detail::where(line) +
                       ": expected 'cop <player> <kind>' header");
    CopPolicy& policy = out.back();
    const bool det = policy.kind() == PolicyKind::Deterministic;
    if (head != (det ? "m" : "p"))
      throw ParseError(detail::where(line) + ": expected '" +
                       std::string(det ? "m" : "p") + "' line");
    detail::expect_fields(line, 1 + key_fields + (det ? 1 : 2), head);
    long x[4] = {0, 0, 0, 1};
    for (std::size_t k = 0; k < key_fields; ++k) {
      x[k] = detail::parse_int(line, 1 + k);
      long hi = k == 3 ? 2 : n;
      if (x[k] < 1 || x[k] > hi)
        throw ValidationError(detail::where(line) + ": field " +
                              std::to_string(k + 1) + " out of range");
    }
    std::size_t s =
        seq ? policy.states().index(SeqState{static_cast<Vertex>(x[0]),
                                             static_cast<Vertex>(x[1]),
                                             static_cast<Vertex>(x[2]),
                                             static_cast<int>(x[3]), false})
            : policy.states().index(ConcState{static_cast<Vertex>(x[0]),
                                              static_cast<Vertex>(x[1]),
                                              static_cast<Vertex>(x[2]),
                                              false});
    long dest = detail::parse_int(line, 1 + key_fields);
    if (det) {
      if (touched[s])
        throw ValidationError(detail::where(line) + ": state listed twice");
      touched[s] = 1;
      policy.set_move(s, static_cast<Vertex>(dest));
    } else {
      double p = detail::parse_real(line, 2 + key_fields);
      MoveDistribution dist =
          touched[s] ? policy.distribution(s) : MoveDistribution{};
      touched[s] = 1;
      dist.emplace_back(static_cast<Vertex>(dest), p);
      policy.set_distribution(s, std::move(dist));
    }
  }
  return out;
}

}  // namespace scpr
