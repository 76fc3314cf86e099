#include "oracles.hpp"

#include "sandcoh/errors.hpp"
#include "sandcoh/measures.hpp"
#include "sandcoh/random.hpp"
#include "sandcoh/sandwich.hpp"
#include "sandcoh/simplexopt.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sandcoh;

namespace {

SimplexObjective linear(std::vector<double> c, Sense sense) {
  const std::size_t d = c.size();
  return SimplexObjective{d,
                          [c](std::span<const double> s, std::span<double> g) {
                            double v = 0.0;
                            for (std::size_t j = 0; j < c.size(); ++j) {
                              v += c[j] * s[j];
                              if (!g.empty()) g[j] = c[j];
                            }
                            return v;
                          },
                          sense};
}

SimplexObjective sum_of_squares(std::size_t d) {
  return SimplexObjective{d,
                          [](std::span<const double> s, std::span<double> g) {
                            double v = 0.0;
                            for (std::size_t j = 0; j < s.size(); ++j) {
                              v += s[j] * s[j];
                              if (!g.empty()) g[j] = 2.0 * s[j];
                            }
                            return v;
                          },
                          Sense::Minimize};
}

// Direct two-block objective p1^{1-a} q^a t1 + p2^{1-a} (1-q)^a t2.
double two_block(double q, double t1, double t2, double p1, double p2, double a) {
  return std::pow(p1, 1.0 - a) * std::pow(q, a) * t1 + std::pow(p2, 1.0 - a) * std::pow(1.0 - q, a) * t2;
}

} // namespace

TEST_CASE("mirror_ascend on a linear objective reaches the vertex") {
  OptimizerConfig cfg;
  const OptimizationReport r = mirror_ascend(linear({0.2, 0.8}, Sense::Maximize), cfg, RngSeed{1});
  CHECK(r.best_value == doctest::Approx(0.8).epsilon(2 * cfg.interior_floor));
  CHECK(r.best_value <= 0.8);
  CHECK(r.best_point[1] >= 1.0 - 2 * cfg.interior_floor);
  CHECK(r.boundary);
}

TEST_CASE("mirror_ascend finds the barycenter of the sum of squares") {
  for (std::size_t d : {2u, 3u, 5u}) {
    const OptimizationReport r = mirror_ascend(sum_of_squares(d), OptimizerConfig{}, RngSeed{2});
    CHECK(r.converged);
    CHECK(r.best_value == doctest::Approx(1.0 / static_cast<double>(d)).epsilon(1e-10));
    for (std::size_t j = 0; j < d; ++j) CHECK(r.best_point[j] == doctest::Approx(1.0 / static_cast<double>(d)));
  }
}

TEST_CASE("mirror_ascend on the sandwich functional of |+>") {
  const DensityMatrix plus = DensityMatrix::from_pure(maximally_coherent(2));
  const OptimizationReport r = mirror_ascend(c_s1_objective(plus, Alpha::s1(0.5)), OptimizerConfig{}, RngSeed{3});
  CHECK(r.best_value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(r.best_point[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.restarts_agreeing == OptimizerConfig{}.restarts);
}

TEST_CASE("mirror_ascend with a fixed step rule") {
  OptimizerConfig cfg;
  cfg.step_rule = StepRule::Fixed;
  cfg.fixed_step = 0.5;
  const OptimizationReport r = mirror_ascend(sum_of_squares(3), cfg, RngSeed{4});
  CHECK(r.best_value == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("mirror_ascend reports non-finite objectives") {
  SimplexObjective bad{2, [](std::span<const double>, std::span<double> g) {
                         if (!g.empty()) g[0] = g[1] = 0.0;
                         return std::nan("");
                       }};
  try {
    mirror_ascend(bad, OptimizerConfig{}, RngSeed{5});
    FAIL("expected NonFiniteObjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteObjective);
  }
}

TEST_CASE("optimizer configuration validation") {
  OptimizerConfig cfg;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(2), Error);
  cfg = OptimizerConfig{};
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(2), Error);
  cfg = OptimizerConfig{};
  cfg.interior_floor = 0.5;
  CHECK_THROWS_AS(cfg.validate(2), Error);
  CHECK_NOTHROW(OptimizerConfig{}.validate(4));
}

TEST_CASE("mirror_ascend is deterministic per seed") {
  const DensityMatrix rho = random_density(3, 2, RngSeed{6});
  const SimplexObjective obj = c_s_objective(rho, Alpha::s(2.0));
  const OptimizationReport a = mirror_ascend(obj, OptimizerConfig{}, RngSeed{7});
  const OptimizationReport b = mirror_ascend(obj, OptimizerConfig{}, RngSeed{7});
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_point.vector() == b.best_point.vector());
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("grid_search examples") {
  const OptimizationReport lin = grid_search(linear({0.2, 0.8}, Sense::Maximize), 10);
  CHECK(lin.best_value == doctest::Approx(0.8));
  CHECK(lin.best_point[1] == 1.0);

  const SimplexObjective constant{3, [](std::span<const double>, std::span<double> g) {
                                      if (!g.empty()) std::fill(g.begin(), g.end(), 0.0);
                                      return 0.3;
                                    }};
  const OptimizationReport flat = grid_search(constant, 7);
  CHECK(flat.best_value == 0.3);
  // First lattice point in lexicographic order wins ties.
  CHECK(flat.best_point[0] == 0.0);
  CHECK(flat.best_point[1] == 0.0);

  const DensityMatrix plus = DensityMatrix::from_pure(maximally_coherent(2));
  const OptimizationReport q = grid_search(c_s1_objective(plus, Alpha::s1(0.5)), 10000);
  CHECK(std::abs(q.best_value - std::sqrt(0.5)) <= 1e-4);

  try {
    grid_search(linear({1, 1, 1, 1, 1}, Sense::Maximize), 4);
    FAIL("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooLarge);
  }
}

TEST_CASE("mirror_ascend agrees with grid_search on measure objectives") {
  Rng rng(RngSeed{8});
  OptimizerConfig cfg;
  cfg.restarts = 8;
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
    const int resolution = d == 2 ? 10000 : 200;
    const DensityMatrix rho = random_density(d, d, rng);
    for (const SimplexObjective& obj : {c_s1_objective(rho, Alpha::s1(0.75)), c_s_objective(rho, Alpha::s(0.75)),
                                        c_s_objective(rho, Alpha::s(2.0))}) {
      const double mirror = mirror_ascend(obj, cfg, RngSeed{9}).best_value;
      const double grid = grid_search(obj, resolution).best_value;
      CHECK(std::abs(mirror - grid) <= 1e-4);
      // The lattice is a subset of the simplex, so the optimizer can only do better.
      if (obj.sense == Sense::Maximize) CHECK(mirror >= grid - 1e-12);
      else CHECK(mirror <= grid + 1e-12);
    }
  }
}

TEST_CASE("holder_two_block examples and grid oracle") {
  CHECK(holder_two_block(1.0, 1.0, 0.5, 0.5, Alpha::s1(0.5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(holder_two_block(1.0, 1.0, 0.3, 0.7, Alpha::s1(0.75)) == doctest::Approx(1.0).epsilon(1e-12));
  const double t1 = std::sqrt(0.9);
  const double grid =
      oracle::grid_max_1d([&](double q) { return two_block(q, t1, 1.0, 0.5, 0.5, 0.5); }, 1000000);
  CHECK(std::abs(holder_two_block(t1, 1.0, 0.5, 0.5, Alpha::s1(0.5)) - grid) <= 1e-6);

  Rng rng(RngSeed{10});
  for (int t = 0; t < 20; ++t) {
    const double a = rng.uniform(0.5, 0.95), p1 = rng.uniform(0.05, 0.95);
    const double u1 = rng.uniform(0.1, 2.0), u2 = rng.uniform(0.1, 2.0);
    const double v = holder_two_block(u1, u2, p1, 1.0 - p1, Alpha::s1(a));
    CHECK(v == doctest::Approx(holder_two_block(u2, u1, 1.0 - p1, p1, Alpha::s1(a))).epsilon(1e-12));
  }

  CHECK_THROWS_AS(holder_two_block(0.0, 1.0, 0.5, 0.5, Alpha::s1(0.5)), Error);
  CHECK_THROWS_AS(holder_two_block(1.0, 1.0, 0.5, 0.6, Alpha::s1(0.5)), Error);
}

TEST_CASE("holder_check examples") {
  const std::vector<double> ones{1.0, 1.0};
  const HolderCheck eq = holder_check(ones, ones, 0.5);
  CHECK(eq.lhs == doctest::Approx(2.0));
  CHECK(eq.rhs == doctest::Approx(2.0));
  CHECK(eq.equality);

  const std::vector<double> a{1.0, 2.0}, b{2.0, 1.0};
  const HolderCheck low = holder_check(a, b, 0.5);
  CHECK(low.lhs == doctest::Approx(4.0));
  CHECK(low.regime_satisfied);
  CHECK(low.lhs < low.rhs);
  CHECK_FALSE(low.equality);

  const HolderCheck high = holder_check(a, b, 2.0);
  CHECK(high.regime_satisfied);
  CHECK(high.lhs >= high.rhs);

  const std::vector<double> bad{1.0, 0.0};
  try {
    holder_check(bad, ones, 0.5);
    FAIL("expected NonPositiveEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveEntry);
  }
}
