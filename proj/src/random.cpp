#include "sandcoh/random.hpp"

#include <cmath>
#include <numbers>

namespace sandcoh {

RngSeed derive_seed(RngSeed root, std::uint64_t stream) {
  std::uint64_t z = root.value + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return RngSeed{z ^ (z >> 31)};
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<int>(x % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller.
  const double u1 = uniform_open_low();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::complex<double> Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::vector<double> Rng::dirichlet(std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = exponential();
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

} // namespace sandcoh
