#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scpr/error.hpp"
#include "scpr/fixtures.hpp"
#include "scpr/game.hpp"
#include "scpr/io.hpp"
#include "scpr/matrix_game.hpp"
#include "scpr/simulator.hpp"
#include "scpr/solvers.hpp"

namespace scpr::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotConverged = 2;

struct Config {
  std::string variant = "sequential";
  std::string graph_path;
  std::string robber_path;
  std::string policy_path;
  std::string start;
  std::string trace_path;
  std::string out;
  double tol = 1e-10;
  std::size_t max_iter = 0;
  std::size_t episodes = 100000;
  std::size_t horizon = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool certify = false;
};

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

Variant parse_variant(const std::string& s) {
  if (s == "sequential") return Variant::Sequential;
  if (s == "concurrent") return Variant::Concurrent;
  throw ValidationError("unknown variant '" + s + "'");
}

RobberStrategy load_robber(const Config& c, const Graph& g) {
  return c.robber_path.empty() ? RobberStrategy::stay(g)
                               : load_robber_strategy_file(c.robber_path, g);
}

// "x1,x2,x3" or "x1,x2,x3,u".
std::size_t parse_start(const std::string& text, const StateIndex& idx) {
  std::vector<int> f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      f.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ValidationError("bad start state '" + text + "'");
    }
  }
  const bool seq = idx.variant() == Variant::Sequential;
  if (f.size() != (seq ? 4u : 3u))
    throw ValidationError("start state needs " + std::string(seq ? "4" : "3") +
                          " comma-separated fields");
  for (std::size_t k = 0; k < 3; ++k)
    if (f[k] < 1 || f[k] > idx.n())
      throw ValidationError("start state vertex out of range");
  if (seq && f[3] != 1 && f[3] != 2)
    throw ValidationError("start state u must be 1 or 2");
  return seq ? idx.index(SeqState{f[0], f[1], f[2], f[3], false})
             : idx.index(ConcState{f[0], f[1], f[2], false});
}

IterationOptions iteration_options(const Config& c) {
  if (!(c.tol > 0.0)) throw ValidationError("--tol must be > 0");
  return {c.tol, c.max_iter, c.threads, false};
}

SolveReport run_solver(const Graph& g, const RobberStrategy& sigma,
                       Variant v, const Config& c) {
  auto opts = iteration_options(c);
  return v == Variant::Sequential ? solve_sequential(g, sigma, opts, c.certify)
                                  : solve_concurrent(g, sigma, opts, c.certify);
}

int cmd_solve(const Config& c, std::ostream& out, std::ostream& err) {
  const Variant v = parse_variant(c.variant);
  Graph g = load_graph_file(c.graph_path);
  RobberStrategy sigma = load_robber(c, g);
  SolveReport r = run_solver(g, sigma, v, c);
  const StateIndex idx(g.vertex_count(), v);
  const std::string prefix = c.out.empty() ? "scpr" : c.out;
  write_file(prefix + ".values.csv", values_to_csv(idx, r.values.values));
  write_file(prefix + ".policy", policies_to_text(r.policy1, r.policy2));
  out << "variant: " << to_string(v) << "\n"
      << "states: " << idx.size() << "\n"
      << "iterations: " << r.values.iterations << "\n"
      << "residual: " << fmt("%.3e", r.values.residual) << "\n"
      << "optimality_residual: " << fmt("%.3e", r.optimality_residual) << "\n"
      << "converged: " << (r.values.converged ? "true" : "false") << "\n";
  if (c.certify) out << "epsilon: " << fmt("%.3e", r.epsilon) << "\n";
  if (!c.start.empty()) {
    std::size_t s = parse_start(c.start, idx);
    out << "value " << idx.describe(s) << ": "
        << fmt("%.17g", r.values.values[s]) << "\n";
  }
  out << "wrote: " << prefix << ".values.csv " << prefix << ".policy\n";
  if (!r.values.converged) {
    err << "error: value iteration did not converge within "
        << r.values.iterations << " iterations\n";
    return kNotConverged;
  }
  return kOk;
}

int cmd_oblivious(const Config& c, std::ostream& out, std::ostream&) {
  Graph g = load_graph_file(c.graph_path);
  RobberStrategy sigma = load_robber(c, g);
  if (!sigma.is_oblivious())
    throw ValidationError("the oblivious command needs an oblivious robber");
  CaptureTimeTable table = oblivious_capture_times(g, sigma);
  SolveReport r = solve_oblivious_concurrent(g, sigma);
  const StateIndex idx(g.vertex_count(), Variant::Concurrent);
  const std::string prefix = c.out.empty() ? "scpr" : c.out;
  write_file(prefix + ".times", capture_times_to_text(table));
  write_file(prefix + ".values.csv", values_to_csv(idx, r.values.values));
  write_file(prefix + ".policy", policies_to_text(r.policy1, r.policy2));
  const double pm = verify_pure_minimax(g, sigma, r.values.values);
  int worst = 0;
  for (int t : table.time)
    if (t != CaptureTimeTable::kInfinity) worst = std::max(worst, t);
  out << "sweeps: " << table.iterations << "\n"
      << "max_capture_time: " << worst << "\n"
      << "optimality_residual: " << fmt("%.3e", r.optimality_residual) << "\n"
      << "pure_minimax_residual: " << fmt("%.3e", pm) << "\n"
      << "wrote: " << prefix << ".times " << prefix << ".values.csv " << prefix
      << ".policy\n";
  return kOk;
}

int cmd_simulate(const Config& c, std::ostream& out, std::ostream& err) {
  const Variant v = parse_variant(c.variant);
  Graph g = load_graph_file(c.graph_path);
  RobberStrategy sigma = load_robber(c, g);
  const StateIndex idx(g.vertex_count(), v);
  if (c.start.empty()) throw ValidationError("simulate needs --start");
  if (c.episodes < 1) throw ValidationError("--episodes must be >= 1");
  const std::size_t s0 = parse_start(c.start, idx);
  const std::size_t horizon = c.horizon ? c.horizon : default_horizon(g);

  std::optional<CopPolicy> pi1, pi2;
  std::optional<double> value;
  if (!c.policy_path.empty()) {
    std::ifstream f(c.policy_path);
    if (!f) throw ValidationError("cannot read " + c.policy_path);
    std::stringstream buf;
    buf << f.rdbuf();
    for (auto& p : load_cop_policies(buf.str(), g, v)) {
      for (const auto& e : validate_policy(p, g, v)) throw ValidationError(e);
      (p.player() == 1 ? pi1 : pi2) = p;
    }
    if (!pi1 || !pi2)
      throw ValidationError("policy file must hold sections for both cops");
  } else {
    SolveReport r = run_solver(g, sigma, v, c);
    if (!r.values.converged) {
      err << "error: value iteration did not converge\n";
      return kNotConverged;
    }
    pi1 = r.policy1;
    pi2 = r.policy2;
    value = r.values.values[s0];
  }
  Estimate e = estimate_value(g, sigma, *pi1, *pi2, s0, c.episodes, horizon,
                              c.seed, c.threads);
  out << "mean: " << fmt("%.17g", e.mean) << "\n"
      << "standard_error: " << fmt("%.17g", e.standard_error) << "\n"
      << "episodes: " << e.episodes << "\n"
      << "truncated_fraction: " << fmt("%.17g", e.truncated_fraction) << "\n";
  if (value) out << "value: " << fmt("%.17g", *value) << "\n";
  if (!c.trace_path.empty()) {
    auto trace = play_episode(g, sigma, *pi1, *pi2, s0, horizon,
                              episode_seed(c.seed, 0));
    write_file(c.trace_path, trace_to_text(trace));
  }
  return kOk;
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
  Graph g = load_graph_file(c.graph_path);
  out << "vertices: " << g.vertex_count() << "\n"
      << "edges: " << g.edge_count() << "\n";
  const bool cop_win = is_cop_win(g);
  out << "cop-win: " << (cop_win ? "true" : "false") << "\n";
  if (!cop_win)
    err << "warning: the graph is not cop-win, so captures are not "
           "guaranteed\n";
  if (!c.robber_path.empty()) {
    RobberStrategy sigma = load_robber_strategy_file(c.robber_path, g);
    out << "robber: " << to_string(sigma.kind()) << "\n";
  }
  if (!c.policy_path.empty()) {
    const Variant v = parse_variant(c.variant);
    std::ifstream f(c.policy_path);
    if (!f) throw ValidationError("cannot read " + c.policy_path);
    std::stringstream buf;
    buf << f.rdbuf();
    bool ok = true;
    for (const auto& p : load_cop_policies(buf.str(), g, v))
      for (const auto& e : validate_policy(p, g, v)) {
        err << "error: " << e << "\n";
        ok = false;
      }
    if (!ok) return kInputError;
    out << "policy: ok\n";
  }
  return kOk;
}

std::string strategy_text(const std::vector<double>& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k)
    s += (k ? "," : "") + fmt("%.12g", p[k]);
  return s + ")";
}

// Own vertex first, then the rest in ascending order.
std::vector<Vertex> stay_first(const Graph& g, Vertex x) {
  std::vector<Vertex> out{x};
  for (Vertex y : g.closed_neighborhood(x))
    if (y != x) out.push_back(y);
  return out;
}

int cmd_repro(const Config&, std::ostream& out, std::ostream&) {
  Graph g = fixtures::six_vertex_graph();
  RobberStrategy sigma = fixtures::six_vertex_robber(g);
  SolveReport r = solve_concurrent(g, sigma);
  const StateIndex idx(g.vertex_count(), Variant::Concurrent);
  const ConcState s{2, 6, 1, false};
  auto rows = stay_first(g, s.x1), cols = stay_first(g, s.x2);

  out << "six-vertex example, cop-dependent robber, concurrent game at "
      << to_string(s) << "\n\nsuccessors:\n";
  MatrixGame m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto next = conc_transition(g, sigma, s, rows[i], cols[j]);
      const ConcState t = next.front().first;
      m(i, j) = immediate_payoff(s) + r.values.values[idx.index(t)];
      out << "  a1=" << rows[i] << " a2=" << cols[j] << " -> " << to_string(t)
          << " p=" << fmt("%.12g", next.front().second)
          << " v=" << fmt("%.12g", r.values.values[idx.index(t)]) << "\n";
    }
  out << "\none-turn matrix game (rows a1 in {";
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i];
  out << "}, columns a2 in {";
  for (std::size_t j = 0; j < cols.size(); ++j) out << (j ? "," : "") << cols[j];
  out << "}):\n[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? "," : "") << fmt("%.12g", m(i, j));
    out << "]";
  }
  out << "]\n";
  MatrixGameSolution sol = solve_matrix_game(m);
  out << "pure max-min: " << fmt("%.12g", pure_maxmin(m))
      << "  pure min-max: " << fmt("%.12g", pure_minmax(m)) << "\n"
      << "value: " << fmt("%.12g", sol.value) << "\n"
      << "C1 strategy: " << strategy_text(sol.row_strategy) << "\n"
      << "C2 strategy: " << strategy_text(sol.col_strategy) << "\n"
      << "value iteration v" << to_string(s) << ": "
      << fmt("%.12g", r.values.values[idx.index(s)]) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Selfish cops and passive robber solver", "scpr"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub, bool graph_required) {
    auto* opt = sub->add_option("--graph", c.graph_path, "edge-list graph file");
    if (graph_required) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--robber", c.robber_path, "robber strategy file (default: stay)")
        ->check(CLI::ExistingFile);
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", c.variant, "sequential | concurrent")
        ->check(CLI::IsMember({"sequential", "concurrent"}));
  };
  auto add_iteration = [&](CLI::App* sub) {
    sub->add_option("--tol", c.tol, "value-iteration tolerance");
    sub->add_option("--max-iter", c.max_iter, "sweep limit (0: 10 |S|)");
    sub->add_option("--threads", c.threads, "worker threads");
  };

  auto* solve = app.add_subcommand("solve", "solve a game by value iteration");
  add_common(solve, true);
  add_variant(solve);
  add_iteration(solve);
  solve->add_option("--out", c.out, "output prefix for .values.csv and .policy");
  solve->add_option("--start", c.start, "print the value of x1,x2,x3[,u]");
  solve->add_flag("--certify", c.certify, "compute the epsilon certificate");

  auto* obl = app.add_subcommand("oblivious", "capture-time solution for an oblivious robber");
  add_common(obl, true);
  obl->add_option("--out", c.out, "output prefix");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of C1's win probability");
  add_common(sim, true);
  add_variant(sim);
  add_iteration(sim);
  sim->add_option("--start", c.start, "start state x1,x2,x3[,u]")->required();
  sim->add_option("--policy", c.policy_path, "policy file (default: solve first)")
      ->check(CLI::ExistingFile);
  sim->add_option("--episodes", c.episodes, "number of episodes");
  sim->add_option("--horizon", c.horizon, "turn limit (0: 4 n^2)");
  sim->add_option("--seed", c.seed, "master seed");
  sim->add_option("--trace", c.trace_path, "dump the first episode's trace");
  sim->add_flag("--certify", c.certify, "compute the epsilon certificate");

  auto* check = app.add_subcommand("check", "validate inputs and test cop-win");
  add_common(check, true);
  add_variant(check);
  check->add_option("--policy", c.policy_path, "policy file to validate")
      ->check(CLI::ExistingFile);

  auto* repro = app.add_subcommand("repro", "reproduce the six-vertex mixing example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return cmd_solve(c, out, err);
    if (*obl) return cmd_oblivious(c, out, err);
    if (*sim) return cmd_simulate(c, out, err);
    if (*check) return cmd_check(c, out, err);
    if (*repro) return cmd_repro(c, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace scpr::cli
