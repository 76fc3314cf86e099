#include "sandcoh/measures.hpp"

#include "sandcoh/errors.hpp"
#include "sandcoh/sandwich.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace sandcoh {

std::string_view to_string(Method method) {
  switch (method) {
  case Method::Optimizer: return "optimizer";
  case Method::PureClosedForm: return "pure-closed-form";
  case Method::GridOracle: return "grid-oracle";
  }
  return "?";
}

SimplexObjective c_s1_objective(const DensityMatrix& rho, const Alpha& alpha) {
  require_regime(alpha, Regime::S1, "c_s1");
  auto functional = std::make_shared<const RhoSandwich>(rho, alpha);
  return SimplexObjective{
      rho.dim(),
      [functional](std::span<const double> x, std::span<double> g) { return functional->evaluate(x, g); },
      Sense::Maximize};
}

SimplexObjective c_s_objective(const DensityMatrix& rho, const Alpha& alpha) {
  require_regime(alpha, Regime::S, "c_s");
  auto functional = std::make_shared<const SigmaSandwich>(rho, alpha);
  return SimplexObjective{
      rho.dim(),
      [functional](std::span<const double> x, std::span<double> g) { return functional->evaluate(x, g); },
      alpha.value() < 1.0 ? Sense::Maximize : Sense::Minimize};
}

double c_s1_from_optimum(double q_max, const Alpha& alpha) {
  return 1.0 - std::pow(q_max, 1.0 / (1.0 - alpha.value()));
}

double c_s_from_optimum(double q_opt, const Alpha& alpha) {
  const double a = alpha.value();
  return (std::pow(q_opt, 1.0 / a) - 1.0) / (a - 1.0);
}

namespace {

OptimizationReport solve(const SimplexObjective& obj, const DensityMatrix& rho,
                         const MeasureOptions& options, Method& method) {
  if (options.oracle == Oracle::Grid) {
    method = Method::GridOracle;
    return grid_search(obj, options.grid_resolution);
  }
  method = Method::Optimizer;
  const ProbVector warm[] = {dephase(rho)};
  return mirror_ascend(obj, options.optimizer, options.seed, warm);
}

} // namespace

MeasureResult c_s1(const DensityMatrix& rho, const Alpha& alpha, const MeasureOptions& options) {
  const SimplexObjective obj = c_s1_objective(rho, alpha);
  MeasureResult result;
  result.report = solve(obj, rho, options, result.method);
  result.optimal_sigma = result.report.best_point;
  result.value = c_s1_from_optimum(result.report.best_value, alpha);
  return result;
}

MeasureResult c_s(const DensityMatrix& rho, const Alpha& alpha, const MeasureOptions& options) {
  const SimplexObjective obj = c_s_objective(rho, alpha);
  MeasureResult result;
  result.report = solve(obj, rho, options, result.method);
  result.optimal_sigma = result.report.best_point;
  result.value = c_s_from_optimum(result.report.best_value, alpha);
  return result;
}

double c_s1_pure(const PureState& psi, const Alpha& alpha) {
  require_regime(alpha, Regime::S1, "c_s1_pure");
  const auto w = psi.populations();
  const double w_max = *std::max_element(w.begin(), w.end());
  const double a = alpha.value();
  return 1.0 - std::pow(w_max, a / (1.0 - a));
}

double c_s_pure(const PureState& psi, const Alpha& alpha) {
  require_regime(alpha, Regime::S, "c_s_pure");
  const auto w = psi.populations();
  const double w_max = *std::max_element(w.begin(), w.end());
  const double a = alpha.value();
  if (a == 0.5) return 2.0 * (1.0 - w_max);
  // (sum_j w_j^g)^{1/g}, g = a/(2a-1), scaled by w_max to stay finite as g grows.
  const double g = a / (2.0 * a - 1.0);
  double scaled = 0.0;
  for (double wj : w) scaled += std::pow(wj / w_max, g);
  const double norm = w_max * std::pow(scaled, 1.0 / g);
  return (norm - 1.0) / (a - 1.0);
}

MeasureResult geometric_coherence(const DensityMatrix& rho, const MeasureOptions& options) {
  return c_s1(rho, Alpha::s1(0.5), options);
}

double l1_coherence_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(ErrorKind::NotQubit, "l1_coherence_qubit needs a 2x2 density matrix");
  return 2.0 * std::abs(rho.mat()(0, 1));
}

} // namespace sandcoh
