#ifndef OTALG_ERRORS_HPP
#define OTALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace otalg {

// Input shapes that do not line up (ragged matrices, wrong vector lengths).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rational function was asked to expand at a pole.
class PoleAtOrigin : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller violated an operation precondition (bad flat, wrong rank, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when two routes that must agree do not. This always signals a bug
// or a genuine counterexample, never a negative mathematical verdict.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A term order and a ground order that were meant to be paired are not: some
// circuit relation has a leading term other than its broken-circuit monomial.
class ConventionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidArrangement : public std::invalid_argument {
 public:
  enum class Reason { Empty, Ragged, ZeroRow, ProportionalRows, NotEssential };

  InvalidArrangement(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

class InvalidBasepoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace otalg

#endif  // OTALG_ERRORS_HPP
