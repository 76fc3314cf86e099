#include "sandcoh/states.hpp"

#include "sandcoh/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace sandcoh {

namespace {

void require_dim(std::size_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
}

} // namespace

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(ErrorKind::InvalidDimension, "empty probability vector");
  double sum = 0.0;
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    if (!(probs_[j] >= 0.0) || !std::isfinite(probs_[j])) {
      std::ostringstream msg;
      msg << "entry " << j << " = " << probs_[j] << " is not a nonnegative number";
      throw Error(ErrorKind::InvalidProbVector, msg.str());
    }
    sum += probs_[j];
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    std::ostringstream msg;
    msg << "entries sum to " << sum;
    throw Error(ErrorKind::InvalidProbVector, msg.str());
  }
}

ProbVector ProbVector::uniform(std::size_t d) {
  require_dim(d);
  return ProbVector(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

ProbVector ProbVector::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (auto& w : weights) {
    w = std::max(w, 0.0);
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error(ErrorKind::InvalidProbVector, "weights do not have a positive finite sum");
  }
  for (auto& w : weights) w /= total;
  return ProbVector(std::move(weights));
}

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw Error(ErrorKind::InvalidDimension, "empty state vector");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "state vector has norm " << norm;
    throw Error(ErrorKind::InvalidPureState, msg.str());
  }
}

std::vector<double> PureState::populations() const {
  std::vector<double> w(dim());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::norm(amps_[static_cast<Eigen::Index>(j)]);
  return w;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  const HermEigen eig = psd_eig(mat_); // NotHermitian / NotPSD / InvalidDimension
  (void)eig;
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "trace is " << tr;
    throw Error(ErrorKind::NotDensityMatrix, msg.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const ComplexVector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const ProbVector& p) {
  const auto d = static_cast<Eigen::Index>(p.dim());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) m(j, j) = p[static_cast<std::size_t>(j)];
  return DensityMatrix(std::move(m));
}

bool DensityMatrix::is_diagonal(double tol) const {
  for (Eigen::Index j = 0; j < mat_.rows(); ++j)
    for (Eigen::Index k = 0; k < mat_.cols(); ++k)
      if (j != k && std::abs(mat_(j, k)) > tol) return false;
  return true;
}

PureState random_pure(std::size_t d, Rng& rng) {
  require_dim(d);
  ComplexVector v(static_cast<Eigen::Index>(d));
  for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = rng.complex_normal();
  v /= v.norm();
  return PureState(std::move(v));
}

PureState random_pure(std::size_t d, RngSeed seed) {
  Rng rng(seed);
  return random_pure(d, rng);
}

DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng) {
  require_dim(d);
  if (rank < 1 || rank > d) {
    std::ostringstream msg;
    msg << "rank " << rank << " outside [1, " << d << "]";
    throw Error(ErrorKind::InvalidRank, msg.str());
  }
  ComplexMatrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(rank));
  for (Eigen::Index j = 0; j < g.rows(); ++j)
    for (Eigen::Index k = 0; k < g.cols(); ++k) g(j, k) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_density(std::size_t d, std::size_t rank, RngSeed seed) {
  Rng rng(seed);
  return random_density(d, rank, rng);
}

DensityMatrix random_diagonal(std::size_t d, Rng& rng) {
  require_dim(d);
  return DensityMatrix::diagonal(ProbVector::normalized(rng.dirichlet(d)));
}

ProbVector dephase(const DensityMatrix& rho) {
  std::vector<double> p(rho.dim());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    p[j] = std::max(rho.mat()(jj, jj).real(), 0.0);
  }
  return ProbVector::normalized(std::move(p));
}

DensityMatrix block_direct_sum(double p1, const DensityMatrix& rho1, double p2,
                               const DensityMatrix& rho2) {
  if (!(p1 > 0.0) || !(p2 > 0.0) || std::abs(p1 + p2 - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "weights (" << p1 << ", " << p2 << ") must be positive and sum to 1";
    throw Error(ErrorKind::InvalidWeights, msg.str());
  }
  const auto d1 = static_cast<Eigen::Index>(rho1.dim());
  const auto d2 = static_cast<Eigen::Index>(rho2.dim());
  ComplexMatrix m = ComplexMatrix::Zero(d1 + d2, d1 + d2);
  m.topLeftCorner(d1, d1) = p1 * rho1.mat();
  m.bottomRightCorner(d2, d2) = p2 * rho2.mat();
  return DensityMatrix(std::move(m));
}

PureState maximally_coherent(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  return PureState(ComplexVector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0)));
}

PureState basis_state(std::size_t d, std::size_t j) {
  require_dim(d);
  if (j >= d) throw Error(ErrorKind::InvalidDimension, "basis index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  v[static_cast<Eigen::Index>(j)] = 1.0;
  return PureState(std::move(v));
}

double offdiagonal_mass(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.mat();
  double total = 0.0;
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (j != k) total += std::abs(m(j, k));
  return total;
}

} // namespace sandcoh
