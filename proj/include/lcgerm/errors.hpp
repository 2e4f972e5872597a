#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcgerm {

// Malformed text input (polynomials, rationals, linear constraints).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  // what() without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Well-formed input that violates a domain invariant: non-squarefree germ,
// shared components, empty divisor, malformed system, ...
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolution did not reach normal crossings within the configured depth.
class DepthCapExceeded : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// Algebraic extension tower grew past its configured height.
class TowerHeightExceeded : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// A theorem predicate was evaluated on a configuration outside its
// hypotheses. Distinct from the conclusion being false.
class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcgerm
