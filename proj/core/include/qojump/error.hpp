#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qojump {

enum class ErrorKind {
  // malformed input text (rationals, JSON payloads)
  Parse,
  // characteristic data
  OrderViolation,
  DegenerateIndex,
  NegativeExponent,
  // branch handling
  NotQuasiOrdinary,
  UnorderedExponents,
  NonPolynomialInput,
  // valuations / fan / multiplier ideals
  PreconditionViolated,
  EmptyExpansion,
  NotInLattice,
  NotPrimitive,
  NoExceptionalDivisor,
  OutsideSupport,
  // generic argument problems
  DimensionMismatch,
  IndexOutOfRange,
  InvalidArgument,
  // an invariant that the mathematics guarantees did not hold
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qojump
