#include "sandcoh/matcore.hpp"

#include "sandcoh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sandcoh {

namespace {

void require_square(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::InvalidDimension, msg.str());
  }
}

} // namespace

double hermitian_defect(const ComplexMatrix& m) {
  require_square(m);
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermEigen herm_eig(const ComplexMatrix& m) {
  const double defect = hermitian_defect(m);
  if (!(defect <= kHermitianTol)) {
    std::ostringstream msg;
    msg << "max |M - M^dagger| = " << defect << " exceeds " << kHermitianTol;
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NotHermitian, "eigensolver did not converge");
  }
  return HermEigen{solver.eigenvalues(), solver.eigenvectors()};
}

double support_threshold(const RealVector& values) {
  const double largest = values.size() > 0 ? values.maxCoeff() : 0.0;
  return kSupportCutoff * std::max(largest, 0.0);
}

HermEigen psd_eig(const ComplexMatrix& m) {
  HermEigen eig = herm_eig(m);
  const double largest = std::max(eig.values.maxCoeff(), 0.0);
  const double floor = -kNegativeEigenTol * largest;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    double& lambda = eig.values[k];
    if (lambda < 0.0) {
      if (lambda < floor) {
        std::ostringstream msg;
        msg << "eigenvalue " << lambda << " below tolerance " << floor;
        throw Error(ErrorKind::NotPSD, msg.str());
      }
      lambda = 0.0;
    }
  }
  return eig;
}

ComplexMatrix spectral_power(const HermEigen& eig, double p) {
  const double tau = support_threshold(eig.values);
  const Eigen::Index d = eig.values.size();
  RealVector powered(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double lambda = eig.values[k];
    powered[k] = lambda > tau ? std::pow(lambda, p) : 0.0;
  }
  return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix frac_power(const ComplexMatrix& m, double p) {
  return spectral_power(psd_eig(m), p);
}

double trace_power(const ComplexMatrix& m, double p) {
  const HermEigen eig = psd_eig(m);
  const double tau = support_threshold(eig.values);
  double total = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] > tau) total += std::pow(eig.values[k], p);
  }
  return total;
}

ComplexMatrix support_projector(const ComplexMatrix& m) {
  return frac_power(m, 0.0);
}

} // namespace sandcoh
