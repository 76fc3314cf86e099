#include "sandcoh/alpha.hpp"

#include "sandcoh/errors.hpp"

#include <cmath>
#include <sstream>

namespace sandcoh {

bool in_regime(double value, Regime regime) {
  if (!std::isfinite(value) || std::abs(value - 1.0) < kAlphaGuardBand) return false;
  switch (regime) {
  case Regime::S1:
    return value >= 0.5 && value < 1.0;
  case Regime::S:
    return value >= 0.5;
  case Regime::Entropy:
    return value > 0.0;
  }
  return false;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
  case Regime::S1:
    return "[1/2, 1)";
  case Regime::S:
    return "[1/2, 1) u (1, inf)";
  case Regime::Entropy:
    return "(0, inf) \\ {1}";
  }
  return "?";
}

Alpha::Alpha(double value, Regime regime) : value_(value), regime_(regime) {
  if (!in_regime(value, regime)) {
    std::ostringstream msg;
    msg << "alpha = " << value << " is outside " << to_string(regime)
        << " (guard band |alpha - 1| >= " << kAlphaGuardBand << ")";
    throw Error(ErrorKind::AlphaOutOfRange, msg.str());
  }
}

void require_regime(const Alpha& alpha, Regime regime, std::string_view context) {
  if (!in_regime(alpha.value(), regime)) {
    std::ostringstream msg;
    msg << context << ": alpha = " << alpha.value() << " is outside " << to_string(regime);
    throw Error(ErrorKind::AlphaOutOfRange, msg.str());
  }
}

} // namespace sandcoh
