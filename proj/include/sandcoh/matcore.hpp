#pragma once

#include <Eigen/Dense>

#include <complex>

namespace sandcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Max-abs of M - M^dagger accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-9;
// Eigenvalues down to -kNegativeEigenTol * lambda_max are rounding noise and
// get clamped to zero; anything more negative is a genuine error.
inline constexpr double kNegativeEigenTol = 1e-10;
// Eigenvalues at or below kSupportCutoff * lambda_max count as zero.
inline constexpr double kSupportCutoff = 1e-12;

struct HermEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

double hermitian_defect(const ComplexMatrix& m);

// Eigendecomposition of a Hermitian matrix. The input is symmetrized
// ((M + M^dagger)/2) after the Hermiticity check passes.
HermEigen herm_eig(const ComplexMatrix& m);

// Eigendecomposition of a PSD matrix with near-zero negative eigenvalues
// clamped to 0. Throws NotPSD otherwise.
HermEigen psd_eig(const ComplexMatrix& m);

// Support threshold for a spectrum: kSupportCutoff times its largest value.
double support_threshold(const RealVector& values);

// M^p restricted to the support of M (0^p := 0 for every p).
ComplexMatrix frac_power(const ComplexMatrix& m, double p);

// Applies a scalar power to an already computed PSD spectrum.
ComplexMatrix spectral_power(const HermEigen& eig, double p);

// Sum of lambda^p over the support of a PSD matrix.
double trace_power(const ComplexMatrix& m, double p);

ComplexMatrix support_projector(const ComplexMatrix& m);

} // namespace sandcoh
