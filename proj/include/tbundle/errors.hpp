#pragma once

#include <stdexcept>
#include <string>

namespace tbundle {

/// Malformed input text (syntax).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a semantic constraint. `field()` names the
/// offending input field ("genus", "monodromy[2]", "euler", ...).
class ValidationError : public std::invalid_argument {
public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

class NotFlatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The monodromy tuple does not satisfy prod [A_i, B_i] = I, so it is not a
/// representation of the surface group.
class NotARepresentation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedParity : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations disagreed. Never a legitimate outcome.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace tbundle
