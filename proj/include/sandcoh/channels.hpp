#pragma once

#include "sandcoh/random.hpp"
#include "sandcoh/states.hpp"

#include <optional>
#include <vector>

namespace sandcoh {

inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kOutcomePruneTol = 1e-12;

/// Square CPTP map given by Kraus operators with sum_n K_n^dagger K_n = I.
/// `incoherent` is derived from the operators; when the caller states it
/// explicitly, a disagreement throws IncoherentFlagMismatch.
class KrausSet {
public:
  explicit KrausSet(std::vector<ComplexMatrix> kraus, std::optional<bool> incoherent = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::size_t dim_in() const { return dim_; }
  std::size_t dim_out() const { return dim_; }
  std::size_t size() const { return kraus_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return kraus_; }
  bool incoherent() const { return incoherent_; }
  // Frobenius norm of sum_n K_n^dagger K_n - I.
  double completeness_residual() const;

private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t dim_ = 0;
  bool incoherent_ = false;
};

DensityMatrix apply_channel(const KrausSet& channel, const DensityMatrix& rho);

// At most one entry with modulus > tol in every column.
bool is_incoherent_operator(const ComplexMatrix& k, double tol = 1e-12);
bool is_incoherent_kraus(const KrausSet& channel, double tol = 1e-12);

// Behavioral check: K |j><j| K^dagger is diagonal (off-diagonals <= tol) for
// every basis state j, which by linearity covers every diagonal input.
bool preserves_diagonal(const ComplexMatrix& k, double tol = 1e-12);

KrausSet identity_channel(std::size_t d);
KrausSet dephasing_channel(std::size_t d);
// Unitary channel |j> -> |perm[j]>.
KrausSet permutation_channel(const std::vector<std::size_t>& perm);

KrausSet random_incoherent_channel(std::size_t d, std::size_t n_kraus, RngSeed seed);
KrausSet random_incoherent_channel(std::size_t d, std::size_t n_kraus, Rng& rng);

// Generic CPTP map: a Haar isometry C^d -> C^{n d} cut into n_kraus blocks.
KrausSet random_cptp_channel(std::size_t d, std::size_t n_kraus, RngSeed seed);
KrausSet random_cptp_channel(std::size_t d, std::size_t n_kraus, Rng& rng);

struct Outcome {
  double probability;
  DensityMatrix state;
};

// (p_n, K_n rho K_n^dagger / p_n) for every outcome with p_n >= 1e-12.
std::vector<Outcome> selective_outcomes(const KrausSet& channel, const DensityMatrix& rho);

} // namespace sandcoh
