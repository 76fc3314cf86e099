#include "oracles.hpp"

#include "sandcoh/channels.hpp"
#include "sandcoh/entropy.hpp"
#include "sandcoh/errors.hpp"
#include "sandcoh/random.hpp"

#include <doctest.h>

using namespace sandcoh;

namespace {

DensityMatrix diag(std::vector<double> p) {
  return DensityMatrix::diagonal(ProbVector(std::move(p)));
}

} // namespace

TEST_CASE("sandwiched_renyi examples") {
  const DensityMatrix r = random_density(3, 3, RngSeed{1});
  CHECK(std::abs(sandwiched_renyi(r, r, Alpha::entropy(0.7))) <= 1e-10);

  // Commuting case: 2 ln(1 / (sqrt(0.45) + sqrt(0.05))).
  const double expected = 2.0 * std::log(1.0 / (std::sqrt(0.45) + std::sqrt(0.05)));
  CHECK(expected == doctest::Approx(0.22314355131420985).epsilon(1e-14));
  CHECK(sandwiched_renyi(diag({0.5, 0.5}), diag({0.9, 0.1}), Alpha::entropy(0.5)) ==
        doctest::Approx(expected).epsilon(1e-12));

  CHECK(sandwiched_renyi(diag({1.0, 0.0}), diag({0.5, 0.5}), Alpha::entropy(2.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("sandwiched_renyi errors") {
  try {
    sandwiched_renyi(diag({0.5, 0.5}), diag({1.0, 0.0}), Alpha::entropy(2.0));
    FAIL("expected SupportViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SupportViolation);
  }
  CHECK_THROWS_AS(Alpha::entropy(1.0), Error);
  CHECK_THROWS_AS(Alpha::entropy(1.0005), Error);
  CHECK_THROWS_AS(Alpha::entropy(-0.5), Error);
  CHECK_NOTHROW(Alpha::entropy(0.3));
}

TEST_CASE("sandwiched_renyi is nonnegative and faithful") {
  Rng rng(RngSeed{2});
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const DensityMatrix s = random_density(d, 1 + static_cast<std::size_t>(t) % d, rng);
    const DensityMatrix r = random_density(d, d, rng);
    for (double a : {0.5, 0.7, 0.9, 1.5, 2.0, 3.0}) CHECK(sandwiched_renyi(s, r, Alpha::entropy(a)) >= -1e-9);
  }
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix r = random_density(3, 1 + static_cast<std::size_t>(t) % 3, rng);
    CHECK(sandwiched_renyi(r, r, Alpha::entropy(0.5 + 0.4 * rng.uniform())) <= 1e-10);
  }
}

TEST_CASE("sandwiched_renyi reduces to the classical divergence on diagonal inputs") {
  Rng rng(RngSeed{3});
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 4);
    const std::vector<double> p = rng.dirichlet(d), q = rng.dirichlet(d);
    for (double a : {0.5, 0.8, 1.5, 2.5}) {
      CHECK(sandwiched_renyi(diag(p), diag(q), Alpha::entropy(a)) ==
            doctest::Approx(oracle::classical_renyi(p, q, a)).epsilon(1e-9));
    }
  }
}

TEST_CASE("sandwiched_renyi agrees with the Schur-Pade oracle") {
  Rng rng(RngSeed{4});
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const DensityMatrix s = random_density(d, d, rng), r = random_density(d, d, rng);
    for (double a : {0.5, 0.7, 2.0}) {
      const double c = (1.0 - a) / (2.0 * a);
      const ComplexMatrix rc = oracle::power(r.mat(), c);
      const double ref = std::log(oracle::trace_power(rc * s.mat() * rc, a)) / (a - 1.0);
      CHECK(sandwiched_renyi(s, r, Alpha::entropy(a)) == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("data processing under random CPTP maps") {
  Rng rng(RngSeed{5});
  for (int t = 0; t < 200; ++t) {
    const DensityMatrix s = random_density(3, 3, rng), r = random_density(3, 3, rng);
    const KrausSet phi = random_cptp_channel(3, static_cast<std::size_t>(rng.uniform_int(1, 3)), rng);
    for (double a : {0.5, 0.7, 0.9}) {
      const Alpha alpha = Alpha::entropy(a);
      CHECK(sandwiched_renyi(apply_channel(phi, s), apply_channel(phi, r), alpha) <=
            sandwiched_renyi(s, r, alpha) + 1e-8);
    }
  }
}
