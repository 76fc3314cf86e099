#include "sandcoh/entropy.hpp"

#include "sandcoh/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sandcoh {

double sandwiched_renyi(const DensityMatrix& sigma, const DensityMatrix& rho, const Alpha& alpha) {
  require_regime(alpha, Regime::Entropy, "sandwiched_renyi");
  if (sigma.dim() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "sandwiched_renyi: arguments differ in dimension");
  }
  const double a = alpha.value();
  const HermEigen rho_eig = psd_eig(rho.mat());

  if (a > 1.0) {
    const ComplexMatrix projector = spectral_power(rho_eig, 0.0);
    const auto d = static_cast<Eigen::Index>(rho.dim());
    const ComplexMatrix outside = ComplexMatrix::Identity(d, d) - projector;
    const double leak = (outside * sigma.mat()).trace().real();
    if (leak > 1e-10) {
      std::ostringstream msg;
      msg << "weight " << leak << " of sigma lies outside supp(rho)";
      throw Error(ErrorKind::SupportViolation, msg.str());
    }
  }

  const ComplexMatrix side = spectral_power(rho_eig, alpha.sandwich_exponent());
  const double t = trace_power(side * sigma.mat() * side, a);
  if (!(t > 0.0)) return std::numeric_limits<double>::infinity();
  return std::log(t) / (a - 1.0);
}

} // namespace sandcoh
