#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncflab {

/// Input that violates an operation's precondition (arity mismatch, bad index, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text (ANF expressions, truth-table hex, decomposition text).
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An exponential analysis was asked to run above its configured size limit.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string guard, int limit, int requested)
      : std::runtime_error("guard '" + guard + "' exceeded: n=" + std::to_string(requested) +
                           " > " + std::to_string(limit)),
        guard_(std::move(guard)),
        limit_(limit),
        requested_(requested) {}

  const std::string& guard() const noexcept { return guard_; }
  int limit() const noexcept { return limit_; }
  int requested() const noexcept { return requested_; }

 private:
  std::string guard_;
  int limit_;
  int requested_;
};

}  // namespace ncflab
