#pragma once

#include <cmath>
#include <cstdint>
#include <complex>
#include <random>
#include <vector>

namespace sandcoh {

struct RngSeed {
  std::uint64_t value = 0;
};

// Derives an independent child seed (trial i of a run seeded with `root`).
// SplitMix64 finalizer over (root, stream).
RngSeed derive_seed(RngSeed root, std::uint64_t stream);

// Portable random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the real/normal/exponential conversions
// are done here instead of through <random> distributions, whose algorithms
// differ between standard libraries. Same seed => same bits everywhere.
class Rng {
public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1].
  double uniform_open_low() { return 1.0 - uniform(); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  double normal();
  std::complex<double> complex_normal();
  double exponential() { return -std::log(uniform_open_low()); }
  // Flat Dirichlet(1, ..., 1) draw.
  std::vector<double> dirichlet(std::size_t n);

private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

} // namespace sandcoh
