#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace newton_mu {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or arguments (CLI exit code 1).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : UsageError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a mathematical precondition (CLI exit code 2).
class DomainError : public Error {
 public:
  enum class Kind {
    NotConvenient,
    Containment,
    InvalidRegion,
    Degenerate,
    Hypothesis,
    Guardrail,
    NotStabilized,
    Inconsistent,
  };

  DomainError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept;

 private:
  Kind kind_;
};

class NotConvenientError : public DomainError {
 public:
  /// `missing_axes` are 0-based coordinate indices.
  explicit NotConvenientError(std::vector<std::size_t> missing_axes);

  const std::vector<std::size_t>& missing_axes() const noexcept { return missing_; }

 private:
  std::vector<std::size_t> missing_;
};

}  // namespace newton_mu
