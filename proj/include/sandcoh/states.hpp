#pragma once

#include "sandcoh/matcore.hpp"
#include "sandcoh/random.hpp"

#include <span>
#include <vector>

namespace sandcoh {

// Tolerances for the state invariants.
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kProbSumTol = 1e-10;

/// Probability vector: the diagonal of an incoherent state in the reference
/// basis. Entries are nonnegative and sum to one.
class ProbVector {
public:
  explicit ProbVector(std::vector<double> probs);

  static ProbVector uniform(std::size_t d);
  // Clamps negatives to zero and rescales to unit sum; for optimizer iterates.
  static ProbVector normalized(std::vector<double> weights);

  std::size_t dim() const { return probs_.size(); }
  double operator[](std::size_t j) const { return probs_[j]; }
  std::span<const double> values() const { return probs_; }
  const std::vector<double>& vector() const { return probs_; }

private:
  std::vector<double> probs_;
};

/// Unit vector in the reference basis.
class PureState {
public:
  explicit PureState(ComplexVector amplitudes);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  // |<j|psi>|^2 for every basis index j.
  std::vector<double> populations() const;

private:
  ComplexVector amps_;
};

/// Hermitian, PSD, unit-trace matrix. Validated on construction.
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix diagonal(const ProbVector& p);

  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }
  bool is_diagonal(double tol = 0.0) const;

private:
  ComplexMatrix mat_;
};

PureState random_pure(std::size_t d, RngSeed seed);
PureState random_pure(std::size_t d, Rng& rng);

// rho = G G^dagger / tr(G G^dagger), G a d x rank complex Ginibre matrix.
DensityMatrix random_density(std::size_t d, std::size_t rank, RngSeed seed);
DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng);

// Random point of the simplex (flat Dirichlet) as a diagonal state.
DensityMatrix random_diagonal(std::size_t d, Rng& rng);

ProbVector dephase(const DensityMatrix& rho);

// p1 rho1 (+) p2 rho2, block 1 indices first.
DensityMatrix block_direct_sum(double p1, const DensityMatrix& rho1, double p2,
                               const DensityMatrix& rho2);

PureState maximally_coherent(std::size_t d);
PureState basis_state(std::size_t d, std::size_t j);

// Sum of |rho_jk| over j != k (the l1 off-diagonal mass).
double offdiagonal_mass(const DensityMatrix& rho);

} // namespace sandcoh
