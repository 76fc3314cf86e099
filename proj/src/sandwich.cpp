#include "sandcoh/sandwich.hpp"

#include "sandcoh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sandcoh {

namespace {

void require_same_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    std::ostringstream msg;
    msg << what << ": dimension " << got << " does not match " << expected;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

void require_grad_size(std::span<double> grad, std::size_t d) {
  if (!grad.empty() && grad.size() != d) {
    throw Error(ErrorKind::DimensionMismatch, "gradient buffer has the wrong length");
  }
}

} // namespace

RhoSandwich::RhoSandwich(const DensityMatrix& rho, const Alpha& alpha)
    : a_(frac_power(rho.mat(), alpha.sandwich_exponent())), alpha_(alpha.value()) {
  require_regime(alpha, Regime::S1, "rho-sandwiched trace");
}

double RhoSandwich::value(std::span<const double> sigma) const {
  return evaluate(sigma, {});
}

double RhoSandwich::evaluate(std::span<const double> sigma, std::span<double> grad) const {
  const std::size_t d = dim();
  require_same_dim(d, sigma.size(), "sigma");
  require_grad_size(grad, d);
  const Eigen::Map<const RealVector> s(sigma.data(), static_cast<Eigen::Index>(d));
  const ComplexMatrix x = a_ * s.asDiagonal() * a_;
  const HermEigen eig = psd_eig(x);
  const double tau = support_threshold(eig.values);

  double total = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (eig.values[k] > tau) total += std::pow(eig.values[k], alpha_);

  if (!grad.empty()) {
    const ComplexMatrix w = a_ * eig.vectors;
    for (std::size_t j = 0; j < d; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      double g = 0.0;
      for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        if (eig.values[k] > tau) g += std::pow(eig.values[k], alpha_ - 1.0) * std::norm(w(jj, k));
      grad[j] = alpha_ * g;
    }
  }
  return total;
}

SigmaSandwich::SigmaSandwich(const DensityMatrix& rho, const Alpha& alpha)
    : rho_(rho.mat()), alpha_(alpha.value()) {
  require_regime(alpha, Regime::S, "sigma-sandwiched trace");
}

bool SigmaSandwich::support_ok(std::span<const double> sigma) const {
  if (alpha_ < 1.0) return true;
  const std::size_t d = dim();
  double rho_max = 0.0, sigma_max = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    rho_max = std::max(rho_max, rho_(jj, jj).real());
    sigma_max = std::max(sigma_max, sigma[j]);
  }
  for (std::size_t j = 0; j < d; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    if (rho_(jj, jj).real() > kSupportCutoff * rho_max && !(sigma[j] > kSupportCutoff * sigma_max))
      return false;
  }
  return true;
}

double SigmaSandwich::value(std::span<const double> sigma) const {
  return evaluate(sigma, {});
}

double SigmaSandwich::evaluate(std::span<const double> sigma, std::span<double> grad) const {
  const std::size_t d = dim();
  require_same_dim(d, sigma.size(), "sigma");
  require_grad_size(grad, d);
  if (!support_ok(sigma)) {
    throw Error(ErrorKind::SupportViolation,
                "supp(rho) is not contained in supp(sigma) (required for alpha > 1)");
  }
  const double c = (1.0 - alpha_) / (2.0 * alpha_);
  const double sigma_max = *std::max_element(sigma.begin(), sigma.end());
  const double tau_sigma = kSupportCutoff * sigma_max;
  RealVector b(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j)
    b[static_cast<Eigen::Index>(j)] = sigma[j] > tau_sigma ? std::pow(sigma[j], c) : 0.0;

  const ComplexMatrix y = b.asDiagonal() * rho_ * b.asDiagonal();
  const HermEigen eig = psd_eig(y);
  const double tau = support_threshold(eig.values);

  RealVector powered = RealVector::Zero(eig.values.size());
  double total = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] > tau) {
      powered[k] = std::pow(eig.values[k], alpha_);
      total += powered[k];
    }
  }

  if (!grad.empty()) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      if (!(sigma[j] > tau_sigma)) {
        grad[j] = 0.0;
        continue;
      }
      double diag = 0.0; // (Y^alpha)_jj
      for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        diag += powered[k] * std::norm(eig.vectors(jj, k));
      grad[j] = (1.0 - alpha_) * diag / sigma[j];
    }
  }
  return total;
}

double q_rho_sandwich(const DensityMatrix& rho, const ProbVector& sigma, const Alpha& alpha) {
  require_regime(alpha, Regime::S1, "q_rho_sandwich");
  require_same_dim(rho.dim(), sigma.dim(), "sigma");
  return RhoSandwich(rho, alpha).value(sigma.values());
}

double q_sigma_sandwich(const ProbVector& sigma, const DensityMatrix& rho, const Alpha& alpha) {
  require_regime(alpha, Regime::S, "q_sigma_sandwich");
  require_same_dim(rho.dim(), sigma.dim(), "sigma");
  return SigmaSandwich(rho, alpha).value(sigma.values());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "sigma");
  const ComplexMatrix root = frac_power(sigma.mat(), 0.5);
  const ComplexMatrix inner = root * rho.mat() * root;
  return trace_power(inner, 0.5);
}

} // namespace sandcoh
