#pragma once

#include "sandcoh/alpha.hpp"
#include "sandcoh/simplexopt.hpp"
#include "sandcoh/states.hpp"

#include <string_view>

namespace sandcoh {

enum class Method { Optimizer, PureClosedForm, GridOracle };
enum class Oracle { Mirror, Grid };

std::string_view to_string(Method method);

struct MeasureOptions {
  OptimizerConfig optimizer{};
  RngSeed seed{0x5eed};
  Oracle oracle = Oracle::Mirror;
  int grid_resolution = 200;
};

struct MeasureResult {
  double value = 0.0;
  ProbVector optimal_sigma = ProbVector::uniform(1);
  OptimizationReport report{};
  Method method = Method::Optimizer;
};

// Objective builders, exposed so callers (oracles, tests) can run the inner
// problems with their own optimizers.
SimplexObjective c_s1_objective(const DensityMatrix& rho, const Alpha& alpha);
// Sense is Maximize for alpha < 1 and Minimize for alpha > 1.
SimplexObjective c_s_objective(const DensityMatrix& rho, const Alpha& alpha);

// Map the inner optimum to the measure value.
double c_s1_from_optimum(double q_max, const Alpha& alpha);
double c_s_from_optimum(double q_opt, const Alpha& alpha);

/// 1 - max_{sigma diagonal} { tr[(rho^c sigma rho^c)^alpha] }^{1/(1-alpha)},
/// alpha in [1/2, 1).
MeasureResult c_s1(const DensityMatrix& rho, const Alpha& alpha, const MeasureOptions& options = {});

/// Pure-state closed form: 1 - max_j |<j|psi>|^{2 alpha/(1-alpha)}.
double c_s1_pure(const PureState& psi, const Alpha& alpha);

/// min_{sigma diagonal} ( {tr[(sigma^c rho sigma^c)^alpha]}^{1/alpha} - 1 ) / (alpha - 1),
/// alpha in [1/2, 1) u (1, inf).
///
/// (x^{1/alpha} - 1)/(alpha - 1) is decreasing in x for alpha < 1 and
/// increasing for alpha > 1, so the inner trace is maximized for alpha < 1
/// and minimized for alpha > 1. For alpha > 1 iterates stay on the interior,
/// which keeps supp(rho) inside supp(sigma).
MeasureResult c_s(const DensityMatrix& rho, const Alpha& alpha, const MeasureOptions& options = {});

/// Pure-state closed form:
/// [(sum_j |<psi|j>|^{2a/(2a-1)})^{(2a-1)/a} - 1] / (a - 1).
/// At a = 1/2 the exponent diverges; the a -> 1/2 limit 2 (1 - max_j |<j|psi>|^2)
/// is returned.
double c_s_pure(const PureState& psi, const Alpha& alpha);

/// 1 - max_sigma F(rho, sigma)^2, computed as c_s1 at alpha = 1/2.
MeasureResult geometric_coherence(const DensityMatrix& rho, const MeasureOptions& options = {});

/// 2 |rho_01| for a qubit.
double l1_coherence_qubit(const DensityMatrix& rho);

} // namespace sandcoh
