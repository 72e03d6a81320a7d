#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "scpr/graph.hpp"

namespace scpr {

enum class Variant { Sequential, Concurrent };

const char* to_string(Variant v);

// (x1, x2, x3, u) with u in {1,2}, or the absorbing terminal state.
struct SeqState {
  Vertex x1 = 1, x2 = 1, x3 = 1;
  int u = 1;
  bool terminal = false;

  static SeqState Terminal() { return {1, 1, 1, 1, true}; }
  friend bool operator==(const SeqState& a, const SeqState& b) {
    if (a.terminal || b.terminal) return a.terminal == b.terminal;
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.u == b.u;
  }
};

// (x1, x2, x3), or the absorbing terminal state.
struct ConcState {
  Vertex x1 = 1, x2 = 1, x3 = 1;
  bool terminal = false;

  static ConcState Terminal() { return {1, 1, 1, true}; }
  friend bool operator==(const ConcState& a, const ConcState& b) {
    if (a.terminal || b.terminal) return a.terminal == b.terminal;
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
};

std::string to_string(const SeqState& s);
std::string to_string(const ConcState& s);

enum class StateClass { Ordinary, C1Capture, C2Capture, Terminal };

const char* to_string(StateClass c);

// x1 == x3 is a C1 capture (including x1 == x2 == x3); x2 == x3 with
// x1 != x3 is a C2 capture.
StateClass classify(const SeqState& s);
StateClass classify(const ConcState& s);

inline bool is_capture(StateClass c) {
  return c == StateClass::C1Capture || c == StateClass::C2Capture;
}

// Immediate payoff to C1: 1 at a C1 capture, otherwise 0.
inline double immediate_payoff(StateClass c) {
  return c == StateClass::C1Capture ? 1.0 : 0.0;
}
inline double immediate_payoff(const SeqState& s) {
  return immediate_payoff(classify(s));
}
inline double immediate_payoff(const ConcState& s) {
  return immediate_payoff(classify(s));
}

/**
 * Dense lexicographic indexing of a state space over n vertices.
 *
 * Sequential: index = (((x1-1)*n + x2-1)*n + x3-1)*2 + (u-1), terminal last
 * (2n^3 + 1 states). Concurrent: index = ((x1-1)*n + x2-1)*n + x3-1,
 * terminal last (n^3 + 1 states).
 */
class StateIndex {
 public:
  StateIndex(int n, Variant variant);

  int n() const { return n_; }
  Variant variant() const { return variant_; }
  std::size_t size() const { return size_; }
  std::size_t terminal() const { return size_ - 1; }

  std::size_t index(const SeqState& s) const;
  std::size_t index(const ConcState& s) const;
  SeqState seq_state(std::size_t i) const;
  ConcState conc_state(std::size_t i) const;

  // Positions of the three tokens; undefined for the terminal index.
  Vertex x1(std::size_t i) const;
  Vertex x2(std::size_t i) const;
  Vertex x3(std::size_t i) const;
  int u(std::size_t i) const;  // 0 for the concurrent variant

  StateClass classify(std::size_t i) const;

  // True iff `player` chooses among several moves at state i: an ordinary
  // state where (sequentially) u == player, or any ordinary concurrent state.
  bool is_decision_state(std::size_t i, int player) const;

  std::string describe(std::size_t i) const;

  friend bool operator==(const StateIndex&, const StateIndex&) = default;

 private:
  std::size_t triple(std::size_t i) const;

  int n_;
  Variant variant_;
  std::size_t size_;
};

}  // namespace scpr
