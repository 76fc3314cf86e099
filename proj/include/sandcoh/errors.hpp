#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sandcoh {

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  NotDensityMatrix,
  InvalidProbVector,
  InvalidPureState,
  DimensionMismatch,
  AlphaOutOfRange,
  SupportViolation,
  InvalidDimension,
  InvalidRank,
  InvalidWeights,
  NonFiniteObjective,
  DimensionTooLarge,
  DimensionTooSmall,
  NonPositiveT,
  NonPositiveEntry,
  NotQubit,
  NotCompleteKraus,
  IncoherentFlagMismatch,
  ConditionsViolated,
  InvalidConfig,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library surfaces as this exception; `kind()` is the
/// machine-readable category.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace sandcoh
