#include "sandcoh/errors.hpp"

namespace sandcoh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotHermitian: return "NotHermitian";
  case ErrorKind::NotPSD: return "NotPSD";
  case ErrorKind::NotDensityMatrix: return "NotDensityMatrix";
  case ErrorKind::InvalidProbVector: return "InvalidProbVector";
  case ErrorKind::InvalidPureState: return "InvalidPureState";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
  case ErrorKind::SupportViolation: return "SupportViolation";
  case ErrorKind::InvalidDimension: return "InvalidDimension";
  case ErrorKind::InvalidRank: return "InvalidRank";
  case ErrorKind::InvalidWeights: return "InvalidWeights";
  case ErrorKind::NonFiniteObjective: return "NonFiniteObjective";
  case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
  case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
  case ErrorKind::NonPositiveT: return "NonPositiveT";
  case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
  case ErrorKind::NotQubit: return "NotQubit";
  case ErrorKind::NotCompleteKraus: return "NotCompleteKraus";
  case ErrorKind::IncoherentFlagMismatch: return "IncoherentFlagMismatch";
  case ErrorKind::ConditionsViolated: return "ConditionsViolated";
  case ErrorKind::InvalidConfig: return "InvalidConfig";
  case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

} // namespace sandcoh
