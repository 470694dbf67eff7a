#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecsynth {

/// Malformed or out-of-domain input (bad polynomial text, zero modulus, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands defined over different moduli.
class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A linear map that must be invertible is not (constant 0, singular matrix).
class SingularMap : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point violates a precondition of the group law or of mixed addition.
class CurveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structural misuse of the circuit IR (unknown wire, repeated operand, bad nesting).
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simulation was asked to run a gate it cannot evaluate on basis states.
class UnsupportedGate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource bound from the point-addition cost analysis does not hold.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntax or semantic error in `.qc` text; carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ecsynth
