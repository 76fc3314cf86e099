#pragma once

#include "sandcoh/alpha.hpp"
#include "sandcoh/states.hpp"

#include <span>

namespace sandcoh {

/// Q(sigma) = tr[(rho^c sigma rho^c)^alpha], c = (1 - alpha)/(2 alpha), for a
/// fixed rho and diagonal sigma. rho^c is computed once at construction.
///
/// `sigma` may be any nonnegative vector (not necessarily normalized), which
/// lets finite differences probe the gradient off the simplex. The gradient
/// is dQ/dsigma_j = alpha * (A X^{alpha-1} A)_jj with X = A sigma A and the
/// negative power taken on supp(X); it is exact on the interior sigma > 0.
class RhoSandwich {
public:
  RhoSandwich(const DensityMatrix& rho, const Alpha& alpha);

  std::size_t dim() const { return static_cast<std::size_t>(a_.rows()); }
  double value(std::span<const double> sigma) const;
  // `grad` must be empty (value only) or have dim() entries.
  double evaluate(std::span<const double> sigma, std::span<double> grad) const;

private:
  ComplexMatrix a_;
  double alpha_;
};

/// Q~(sigma) = tr[(sigma^c rho sigma^c)^alpha], c = (1 - alpha)/(2 alpha).
///
/// sigma^c acts entrywise on the diagonal, on the support of sigma. For
/// alpha > 1 the support condition supp(rho) in supp(sigma) is enforced and a
/// violation throws SupportViolation. The gradient
/// dQ~/dsigma_j = (1 - alpha) (Y^alpha)_jj / sigma_j, Y = sigma^c rho sigma^c,
/// is reported for sigma_j > 0; entries with sigma_j = 0 get 0.
class SigmaSandwich {
public:
  SigmaSandwich(const DensityMatrix& rho, const Alpha& alpha);

  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  double value(std::span<const double> sigma) const;
  double evaluate(std::span<const double> sigma, std::span<double> grad) const;
  // True when the alpha > 1 support condition holds for `sigma`.
  bool support_ok(std::span<const double> sigma) const;

private:
  ComplexMatrix rho_;
  double alpha_;
};

double q_rho_sandwich(const DensityMatrix& rho, const ProbVector& sigma, const Alpha& alpha);
double q_sigma_sandwich(const ProbVector& sigma, const DensityMatrix& rho, const Alpha& alpha);

// Uhlmann root fidelity tr[(sigma^{1/2} rho sigma^{1/2})^{1/2}].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

} // namespace sandcoh
