#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amspace {

/// DSL text that does not conform to the grammar. `position()` is the
/// zero-based character offset where parsing stopped.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class UnboundParameterError : public std::runtime_error {
public:
  explicit UnboundParameterError(const std::string& name)
      : std::runtime_error("unbound parameter '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

/// Raised when a law is evaluated at a radius where it is not defined or
/// where the result is not a finite number.
class EvaluationDomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace amspace
