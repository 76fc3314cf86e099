#include "sandcoh/channels.hpp"

#include "sandcoh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sandcoh {

namespace {

void require_dim(std::size_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidDimension, "channel dimension must be >= 1");
}

void require_same_dim(const KrausSet& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "channel acts on dimension " << channel.dim() << ", state has " << rho.dim();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

// Haar-distributed d x d unitary, or n d x d isometry (rows x cols).
ComplexMatrix haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so the distribution is exactly Haar.
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

std::vector<std::size_t> random_permutation(std::size_t d, Rng& rng) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = d; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

} // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> kraus, std::optional<bool> incoherent)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorKind::InvalidDimension, "a channel needs at least one Kraus operator");
  dim_ = static_cast<std::size_t>(kraus_.front().cols());
  require_dim(dim_);
  for (std::size_t n = 0; n < kraus_.size(); ++n) {
    const auto& k = kraus_[n];
    if (static_cast<std::size_t>(k.rows()) != dim_ || static_cast<std::size_t>(k.cols()) != dim_) {
      std::ostringstream msg;
      msg << "Kraus operator " << n << " is " << k.rows() << "x" << k.cols() << ", expected " << dim_
          << "x" << dim_;
      throw Error(ErrorKind::DimensionMismatch, msg.str());
    }
  }
  const double residual = completeness_residual();
  if (!(residual <= kCompletenessTol)) {
    std::ostringstream msg;
    msg << "|| sum K^dagger K - I ||_F = " << residual;
    throw Error(ErrorKind::NotCompleteKraus, msg.str());
  }
  incoherent_ = std::all_of(kraus_.begin(), kraus_.end(),
                            [](const ComplexMatrix& k) { return is_incoherent_operator(k); });
  if (incoherent.has_value() && *incoherent != incoherent_) {
    throw Error(ErrorKind::IncoherentFlagMismatch,
                *incoherent ? "declared incoherent but some Kraus column has two nonzero entries"
                            : "declared not incoherent but every Kraus operator is incoherent");
  }
}

double KrausSet::completeness_residual() const {
  const auto d = static_cast<Eigen::Index>(dim_);
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return (sum - ComplexMatrix::Identity(d, d)).norm();
}

DensityMatrix apply_channel(const KrausSet& channel, const DensityMatrix& rho) {
  require_same_dim(channel, rho);
  const auto d = static_cast<Eigen::Index>(rho.dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& k : channel.operators()) out += k * rho.mat() * k.adjoint();
  return DensityMatrix(hermitian_part(out));
}

bool is_incoherent_operator(const ComplexMatrix& k, double tol) {
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    int nonzero = 0;
    for (Eigen::Index i = 0; i < k.rows(); ++i)
      if (std::abs(k(i, j)) > tol) ++nonzero;
    if (nonzero > 1) return false;
  }
  return true;
}

bool is_incoherent_kraus(const KrausSet& channel, double tol) {
  return std::all_of(channel.operators().begin(), channel.operators().end(),
                     [tol](const ComplexMatrix& k) { return is_incoherent_operator(k, tol); });
}

bool preserves_diagonal(const ComplexMatrix& k, double tol) {
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    const ComplexMatrix image = k.col(j) * k.col(j).adjoint();
    for (Eigen::Index r = 0; r < image.rows(); ++r)
      for (Eigen::Index c = 0; c < image.cols(); ++c)
        if (r != c && std::abs(image(r, c)) > tol) return false;
  }
  return true;
}

KrausSet identity_channel(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  return KrausSet({ComplexMatrix::Identity(n, n)});
}

KrausSet dephasing_channel(std::size_t d) {
  require_dim(d);
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index j = 0; j < n; ++j) {
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    p(j, j) = 1.0;
    kraus.push_back(std::move(p));
  }
  return KrausSet(std::move(kraus));
}

KrausSet permutation_channel(const std::vector<std::size_t>& perm) {
  require_dim(perm.size());
  const auto n = static_cast<Eigen::Index>(perm.size());
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto target = perm[static_cast<std::size_t>(j)];
    if (target >= perm.size()) throw Error(ErrorKind::InvalidDimension, "permutation entry out of range");
    p(static_cast<Eigen::Index>(target), j) = 1.0;
  }
  return KrausSet({p});
}

KrausSet random_incoherent_channel(std::size_t d, std::size_t n_kraus, Rng& rng) {
  require_dim(d);
  if (n_kraus == 0) throw Error(ErrorKind::InvalidDimension, "n_kraus must be >= 1");
  const auto n = static_cast<Eigen::Index>(d);

  // Target row of column j in operator k: a permutation (coherence-carrying)
  // or, with probability 1/2 when n_kraus > 1, an arbitrary map (merging).
  std::vector<std::vector<std::size_t>> targets(n_kraus);
  for (auto& t : targets) {
    if (n_kraus == 1 || rng.uniform() < 0.5) {
      t = random_permutation(d, rng);
    } else {
      t.resize(d);
      for (auto& r : t) r = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(d) - 1));
    }
  }

  std::vector<ComplexMatrix> kraus(n_kraus, ComplexMatrix::Zero(n, n));
  for (Eigen::Index j = 0; j < n; ++j) {
    ComplexVector v(static_cast<Eigen::Index>(n_kraus));
    for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = rng.complex_normal();
    v /= v.norm();
    for (std::size_t k = 0; k < n_kraus; ++k)
      kraus[k](static_cast<Eigen::Index>(targets[k][static_cast<std::size_t>(j)]), j) =
          v[static_cast<Eigen::Index>(k)];
  }

  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (const auto& k : kraus) s += k.adjoint() * k;
  if ((s - ComplexMatrix::Identity(n, n)).norm() > 1e-13) {
    // Columns sharing a target row make S non-diagonal. Shrink so S <= I and
    // fill the remainder I - S with rank-one incoherent operators.
    const HermEigen s_eig = herm_eig(s);
    const double scale = s_eig.values.maxCoeff();
    for (auto& k : kraus) k /= std::sqrt(scale);
    const HermEigen rest = herm_eig(ComplexMatrix::Identity(n, n) - s / scale);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double lambda = rest.values[i];
      if (lambda <= 1e-14) continue;
      ComplexMatrix k = ComplexMatrix::Zero(n, n);
      const auto row = static_cast<Eigen::Index>(rng.uniform_int(0, static_cast<int>(d) - 1));
      k.row(row) = std::sqrt(lambda) * rest.vectors.col(i).adjoint();
      kraus.push_back(std::move(k));
    }
  }
  return KrausSet(std::move(kraus), true);
}

KrausSet random_incoherent_channel(std::size_t d, std::size_t n_kraus, RngSeed seed) {
  Rng rng(seed);
  return random_incoherent_channel(d, n_kraus, rng);
}

KrausSet random_cptp_channel(std::size_t d, std::size_t n_kraus, Rng& rng) {
  require_dim(d);
  if (n_kraus == 0) throw Error(ErrorKind::InvalidDimension, "n_kraus must be >= 1");
  const auto n = static_cast<Eigen::Index>(d);
  const auto blocks = static_cast<Eigen::Index>(n_kraus);
  const ComplexMatrix v = haar_isometry(blocks * n, n, rng);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index b = 0; b < blocks; ++b) kraus.emplace_back(v.middleRows(b * n, n));
  return KrausSet(std::move(kraus));
}

KrausSet random_cptp_channel(std::size_t d, std::size_t n_kraus, RngSeed seed) {
  Rng rng(seed);
  return random_cptp_channel(d, n_kraus, rng);
}

std::vector<Outcome> selective_outcomes(const KrausSet& channel, const DensityMatrix& rho) {
  require_same_dim(channel, rho);
  std::vector<Outcome> outcomes;
  for (const auto& k : channel.operators()) {
    const ComplexMatrix branch = hermitian_part(k * rho.mat() * k.adjoint());
    const double p = branch.trace().real();
    if (p < kOutcomePruneTol) continue;
    outcomes.push_back(Outcome{p, DensityMatrix(branch / p)});
  }
  return outcomes;
}

} // namespace sandcoh
