#pragma once

#include <stdexcept>
#include <string>

namespace scpr {

// Malformed input text (bad token, wrong field count, missing header).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a model invariant (self-loop, illegal
// move, distribution not summing to one, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace scpr
