#ifndef AWARE_ERROR_HPP_
#define AWARE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aware {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, model, proof, or scenario text. `position` is a
/// 0-based byte offset into the input; `line` is 1-based (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
      : Error(message), position_(position), line_(line) {}

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// Structurally invalid model or scenario (bad relation, bad partition, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed a configured cap or guard.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownAgent : public Error {
 public:
  explicit UnknownAgent(const std::string& agent) : Error("unknown agent '" + agent + "'") {}
};

/// A theorem-level precondition does not hold for the given input.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace aware

#endif  // AWARE_ERROR_HPP_
