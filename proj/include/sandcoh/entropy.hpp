#pragma once

#include "sandcoh/alpha.hpp"
#include "sandcoh/states.hpp"

namespace sandcoh {

/// F_alpha(sigma || rho) = ln tr[(rho^c sigma rho^c)^alpha] / (alpha - 1),
/// c = (1 - alpha)/(2 alpha). The second argument is the one that sandwiches.
///
/// For alpha > 1, supp(sigma) must lie in supp(rho) (SupportViolation
/// otherwise). For alpha < 1 the trace is taken on supp(rho); disjoint
/// supports give +infinity.
double sandwiched_renyi(const DensityMatrix& sigma, const DensityMatrix& rho, const Alpha& alpha);

} // namespace sandcoh
