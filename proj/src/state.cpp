#include "scpr/state.hpp"

#include <stdexcept>

namespace scpr {

const char* to_string(Variant v) {
  return v == Variant::Sequential ? "sequential" : "concurrent";
}

std::string to_string(const SeqState& s) {
  if (s.terminal) return "TAU";
  return "(" + std::to_string(s.x1) + "," + std::to_string(s.x2) + "," +
         std::to_string(s.x3) + "," + std::to_string(s.u) + ")";
}

std::string to_string(const ConcState& s) {
  if (s.terminal) return "TAU";
  return "(" + std::to_string(s.x1) + "," + std::to_string(s.x2) + "," +
         std::to_string(s.x3) + ")";
}

const char* to_string(StateClass c) {
  switch (c) {
    case StateClass::Ordinary: return "Ordinary";
    case StateClass::C1Capture: return "C1Capture";
    case StateClass::C2Capture: return "C2Capture";
    case StateClass::Terminal: return "Terminal";
  }
  return "?";
}

namespace {

StateClass classify_triple(Vertex x1, Vertex x2, Vertex x3) {
  if (x1 == x3) return StateClass::C1Capture;
  if (x2 == x3) return StateClass::C2Capture;
  return StateClass::Ordinary;
}

}  // namespace

StateClass classify(const SeqState& s) {
  return s.terminal ? StateClass::Terminal : classify_triple(s.x1, s.x2, s.x3);
}

StateClass classify(const ConcState& s) {
  return s.terminal ? StateClass::Terminal : classify_triple(s.x1, s.x2, s.x3);
}

StateClass StateIndex::classify(std::size_t i) const {
  if (i == terminal()) return StateClass::Terminal;
  return classify_triple(x1(i), x2(i), x3(i));
}

bool StateIndex::is_decision_state(std::size_t i, int player) const {
  if (classify(i) != StateClass::Ordinary) return false;
  return variant_ == Variant::Concurrent || u(i) == player;
}

StateIndex::StateIndex(int n, Variant variant) : n_(n), variant_(variant) {
  if (n < 1) throw std::invalid_argument("StateIndex: n must be >= 1");
  std::size_t cube = static_cast<std::size_t>(n) * n * n;
  size_ = (variant == Variant::Sequential ? 2 * cube : cube) + 1;
}

std::size_t StateIndex::index(const SeqState& s) const {
  if (variant_ != Variant::Sequential)
    throw std::logic_error("StateIndex: sequential state on concurrent index");
  if (s.terminal) return terminal();
  if (s.x1 < 1 || s.x1 > n_ || s.x2 < 1 || s.x2 > n_ || s.x3 < 1 ||
      s.x3 > n_ || (s.u != 1 && s.u != 2))
    throw std::out_of_range("state " + to_string(s) + " outside state space");
  std::size_t t = (static_cast<std::size_t>(s.x1 - 1) * n_ + (s.x2 - 1)) * n_ +
                  (s.x3 - 1);
  return t * 2 + (s.u - 1);
}

std::size_t StateIndex::index(const ConcState& s) const {
  if (variant_ != Variant::Concurrent)
    throw std::logic_error("StateIndex: concurrent state on sequential index");
  if (s.terminal) return terminal();
  if (s.x1 < 1 || s.x1 > n_ || s.x2 < 1 || s.x2 > n_ || s.x3 < 1 || s.x3 > n_)
    throw std::out_of_range("state " + to_string(s) + " outside state space");
  return (static_cast<std::size_t>(s.x1 - 1) * n_ + (s.x2 - 1)) * n_ +
         (s.x3 - 1);
}

std::size_t StateIndex::triple(std::size_t i) const {
  return variant_ == Variant::Sequential ? i / 2 : i;
}

Vertex StateIndex::x1(std::size_t i) const {
  return static_cast<Vertex>(triple(i) / (static_cast<std::size_t>(n_) * n_)) +
         1;
}

Vertex StateIndex::x2(std::size_t i) const {
  return static_cast<Vertex>(triple(i) / n_ % n_) + 1;
}

Vertex StateIndex::x3(std::size_t i) const {
  return static_cast<Vertex>(triple(i) % n_) + 1;
}

int StateIndex::u(std::size_t i) const {
  return variant_ == Variant::Sequential ? static_cast<int>(i % 2) + 1 : 0;
}

SeqState StateIndex::seq_state(std::size_t i) const {
  if (i == terminal()) return SeqState::Terminal();
  return {x1(i), x2(i), x3(i), u(i), false};
}

ConcState StateIndex::conc_state(std::size_t i) const {
  if (i == terminal()) return ConcState::Terminal();
  return {x1(i), x2(i), x3(i), false};
}

std::string StateIndex::describe(std::size_t i) const {
  return variant_ == Variant::Sequential ? to_string(seq_state(i))
                                         : to_string(conc_state(i));
}

}  // namespace scpr
