#pragma once

#include <string_view>

namespace sandcoh {

// Which family of formulas an order is meant for:
//   S1      -> [1/2, 1)           (rho-sandwiched measure)
//   S       -> [1/2, 1) u (1, oo) (sigma-sandwiched measure)
//   Entropy -> (0, oo) \ {1}      (sandwiched Renyi relative entropy)
enum class Regime { S1, S, Entropy };

// |alpha - 1| below this is rejected; the alpha -> 1 limit is not provided.
inline constexpr double kAlphaGuardBand = 1e-3;

bool in_regime(double value, Regime regime);
std::string_view to_string(Regime regime);

/// Renyi order tagged with the regime it was validated against.
class Alpha {
public:
  Alpha(double value, Regime regime);

  static Alpha s1(double value) { return Alpha(value, Regime::S1); }
  static Alpha s(double value) { return Alpha(value, Regime::S); }
  static Alpha entropy(double value) { return Alpha(value, Regime::Entropy); }

  double value() const { return value_; }
  Regime regime() const { return regime_; }
  // (1 - alpha) / (2 alpha), the power applied on both sides of the sandwich.
  double sandwich_exponent() const { return (1.0 - value_) / (2.0 * value_); }

private:
  double value_;
  Regime regime_;
};

// Throws AlphaOutOfRange unless alpha's value lies in `regime`.
void require_regime(const Alpha& alpha, Regime regime, std::string_view context);

} // namespace sandcoh
