#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "scpr/io.hpp"

using namespace scpr;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "scpr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SCPR_DATA_DIR) + "/" + name; }
std::string scratch(const std::string& name) { return std::string(SCPR_SCRATCH_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("repro prints the one-turn game") {
  Result r = run({"repro"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[[1,0],[0,1]]"));
  CHECK(contains(r.out, "value: 0.5"));
  CHECK(contains(r.out, "C1 strategy: (0.5,0.5)"));
  CHECK(contains(r.out, "C2 strategy: (0.5,0.5)"));
}

TEST_CASE("check reports cop-win") {
  Result r = run({"check", "--graph", data("six.g"), "--robber", data("six.r")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "cop-win: true"));
}

TEST_CASE("solve writes values and policies") {
  const std::string prefix = scratch("unit_p2");
  Result r = run({"solve", "--variant", "sequential", "--graph", data("p2.g"),
                  "--robber", data("stay.r"), "--start", "1,2,2,1", "--out", prefix});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "converged: true"));
  const std::string csv = slurp(prefix + ".values.csv");
  CHECK(contains(csv, "\n1,2,2,1,0\n"));
  CHECK(contains(csv, "\nTAU,,,,0\n"));
  StateIndex idx(2, Variant::Sequential);
  std::vector<double> v = load_values_csv(csv, idx);
  CHECK(v.size() == 17);
  CHECK(v[idx.index(SeqState{1, 2, 2, 1})] == 0.0);
  CHECK(v[idx.index(SeqState{2, 2, 2, 1})] == 1.0);
  CHECK(contains(slurp(prefix + ".policy"), "cop 1 deterministic"));
}

TEST_CASE("value tables round-trip") {
  const std::string prefix = scratch("unit_six");
  Result r = run({"solve", "--variant", "concurrent", "--graph", data("six.g"),
                  "--robber", data("six.r"), "--out", prefix, "--certify"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "epsilon: "));
  StateIndex idx(6, Variant::Concurrent);
  std::vector<double> v = load_values_csv(slurp(prefix + ".values.csv"), idx);
  REQUIRE(v.size() == 217);
  CHECK(v[idx.index(ConcState{2, 6, 1})] == doctest::Approx(0.5).epsilon(1e-12));
  std::vector<double> again = load_values_csv(values_to_csv(idx, v), idx);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(again[i] - v[i]) <= 1e-12);

  Result sim = run({"simulate", "--variant", "concurrent", "--graph", data("six.g"),
                    "--robber", data("six.r"), "--start", "2,6,1", "--policy",
                    prefix + ".policy", "--episodes", "2000", "--seed", "5"});
  CHECK(sim.code == 0);
  CHECK(contains(sim.out, "episodes: 2000"));
}

TEST_CASE("oblivious command") {
  const std::string prefix = scratch("unit_obl");
  Result r = run({"oblivious", "--graph", data("six.g"), "--out", prefix});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "pure_minimax_residual: 0.000e+00"));
  CHECK(contains(slurp(prefix + ".times"), "# cop robber time next"));
  CHECK(run({"oblivious", "--graph", data("six.g"), "--robber", data("six.r"),
             "--out", prefix}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({"solve", "--graph", data("missing.g")}).code == 1);
  CHECK(run({"solve", "--graph", data("six.g"), "--variant", "diagonal",
             "--out", scratch("unit_bad")}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"simulate", "--graph", data("six.g"), "--start", "2,6,1",
             "--episodes", "0"}).code == 1);
  CHECK(run({"solve", "--graph", data("six.g"), "--start", "9,9,9",
             "--variant", "concurrent", "--out", scratch("unit_bad")}).code == 1);
  Result slow = run({"solve", "--variant", "concurrent", "--graph", data("six.g"),
                     "--robber", data("six.r"), "--max-iter", "1",
                     "--out", scratch("unit_slow")});
  CHECK(slow.code == 2);
  CHECK(contains(slow.err, "did not converge"));
}

}
