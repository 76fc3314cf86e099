#include "sandcoh/axioms.hpp"
#include "sandcoh/channels.hpp"
#include "sandcoh/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace sandcoh;

TEST_CASE("C1 passes for the sandwiched family and fails for the broken control") {
  CHECK(check_c1(measure_s1(0.7), 3, 100, RngSeed{1}).passed);
  const AxiomReport broken = check_c1(measure_broken(), 2, 20, RngSeed{2});
  CHECK_FALSE(broken.passed);
  CHECK(broken.max_violation > 0.0);
  CHECK(broken.trials == 20);
  // An identically zero measure passes the diagonal and sign checks but not faithfulness.
  const MeasureFn zero{"zero", Alpha::s1(0.5), [](const DensityMatrix&, const Alpha&) { return 0.0; }};
  const AxiomReport z = check_c1(zero, 2, 10, RngSeed{3});
  CHECK(z.max_violation == doctest::Approx(1e-5));
}

TEST_CASE("C2 passes and trivial channels give zero excess") {
  CHECK(check_c2(measure_s1(0.5), 3, 200, RngSeed{4}).passed);
  const MeasureFn m = measure_s1(0.6);
  const DensityMatrix rho = random_density(3, 2, RngSeed{5});
  CHECK(m(apply_channel(identity_channel(3), rho)) - m(rho) == 0.0);
  CHECK(std::abs(m(apply_channel(dephasing_channel(3), rho))) <= 1e-7);
}

TEST_CASE("C3 passes and projective outcomes carry no coherence") {
  CHECK(check_c3(measure_s(2.0), 3, 200, RngSeed{6}).passed);
  const MeasureFn m = measure_s(2.0);
  const DensityMatrix rho = random_density(3, 3, RngSeed{7});
  double avg = 0.0;
  for (const Outcome& o : selective_outcomes(dephasing_channel(3), rho)) avg += o.probability * m(o.state);
  CHECK(std::abs(avg) <= 1e-7);
  CHECK(avg <= m(rho));
}

TEST_CASE("C4 passes and degenerate mixtures are tight") {
  CHECK(check_c4(measure_s(1.5), 3, 200, RngSeed{8}).passed);
  const MeasureFn m = measure_s1(0.5);
  const DensityMatrix plus = DensityMatrix::from_pure(maximally_coherent(2));
  ComplexVector minus_v(2);
  minus_v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  const DensityMatrix minus = DensityMatrix::from_pure(PureState(minus_v));
  const DensityMatrix mix(0.5 * (plus.mat() + minus.mat()));
  CHECK(0.5 * m(plus) + 0.5 * m(minus) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(std::abs(m(mix)) <= 1e-8);
}

TEST_CASE("C5 passes for the sandwiched families") {
  CHECK(check_c5(measure_s(2.0), 100, RngSeed{9}).passed);
  const MeasureFn m = measure_s1(0.5);
  const DensityMatrix plus = DensityMatrix::from_pure(maximally_coherent(2));
  const DensityMatrix one(ComplexMatrix::Identity(1, 1));
  CHECK(m(block_direct_sum(0.5, plus, 0.5, one)) == doctest::Approx(0.25).epsilon(1e-8));
  const AxiomReport skipped = check_c5(m, 5, RngSeed{10}, {}, 2);
  CHECK(skipped.skipped);
}

TEST_CASE("DPI holds") {
  for (double a : {0.5, 0.7, 0.9}) CHECK(check_dpi(Alpha::entropy(a), 3, 50, RngSeed{11}).passed);
}

TEST_CASE("failing trials are logged for replay") {
  std::ostringstream log;
  HarnessOptions opts;
  opts.log = &log;
  const AxiomReport r = check_c1(measure_broken(), 2, 3, RngSeed{12}, opts);
  CHECK_FALSE(r.passed);
  const std::string text = log.str();
  CHECK(text.find("FAIL C1 measure=broken") != std::string::npos);
  CHECK(text.find("seed=" + std::to_string(r.worst_case_seed.value)) != std::string::npos);
  CHECK(text.find("\"matrix\"") != std::string::npos);
}

TEST_CASE("reports are deterministic per seed") {
  const AxiomReport a = check_c2(measure_s(0.75), 2, 30, RngSeed{13});
  const AxiomReport b = check_c2(measure_s(0.75), 2, 30, RngSeed{13});
  CHECK(a.max_violation == b.max_violation);
  CHECK(a.worst_case_seed.value == b.worst_case_seed.value);
}

TEST_CASE("ScalarFn load checks") {
  CHECK_THROWS_AS(ScalarFn("shifted", [](double x) { return x + 1.0; }), Error);
  CHECK_THROWS_AS(ScalarFn("negative", [](double x) { return -x; }), Error);
  CHECK_NOTHROW(ScalarFn::sqrt());
}

TEST_CASE("linearization counterexample") {
  const MeasureFn m = measure_s1(0.5);
  CHECK(linearization_counterexample(ScalarFn::identity(), m, 3).violation <= 1e-8);
  const LinearizationResult sq = linearization_counterexample(ScalarFn::square(), m, 3);
  CHECK(sq.violation == doctest::Approx(0.0625).epsilon(1e-6));
  CHECK(sq.worst_p2 == doctest::Approx(0.5));
  CHECK(sq.witness.dim() == 3);
  CHECK(linearization_counterexample(ScalarFn::sqrt(), m, 3).violation > 0.1);
  try {
    linearization_counterexample(ScalarFn::square(), m, 2);
    FAIL("expected DimensionTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooSmall);
  }
}

TEST_CASE("qubit composition with monotone functions") {
  const QubitFunctionReport id = qubit_function_measure(ScalarFn::identity(), measure_s1(0.75), 50, RngSeed{14});
  CHECK(id.conditions_hold);
  CHECK(id.passed);
  CHECK(id.axioms.size() == 4);

  // Qubit geometric coherence as a function of l1 coherence; extended past 1
  // so the sampled monotonicity check on [0, 4] applies.
  const ScalarFn convex_ext("geometric-of-l1", [](double x) {
    const double y = std::min(x, 1.0);
    return 0.5 * (1.0 - std::sqrt(1.0 - y * y)) + std::max(0.0, x - 1.0);
  });
  CHECK(qubit_function_measure(convex_ext, measure_l1_qubit(), 200, RngSeed{15}).passed);
}

TEST_CASE("sqrt of qubit l1 coherence breaks convexity") {
  // Mixing |0><0| and |+><+| equally: sqrt(C_l1) of the mixture is sqrt(1/2),
  // the average of the components is 1/2.
  const MeasureFn m = compose(ScalarFn::sqrt(), measure_l1_qubit());
  const DensityMatrix zero = DensityMatrix::from_pure(basis_state(2, 0));
  const DensityMatrix plus = DensityMatrix::from_pure(maximally_coherent(2));
  const DensityMatrix mix(0.5 * (zero.mat() + plus.mat()));
  CHECK(m(mix) == doctest::Approx(std::sqrt(0.5)));
  CHECK(0.5 * m(zero) + 0.5 * m(plus) == doctest::Approx(0.5));
  const QubitFunctionReport r = qubit_function_measure(ScalarFn::sqrt(), measure_l1_qubit(), 200, RngSeed{16});
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.axioms[3].passed);
}

TEST_CASE("qubit composition condition checks") {
  const ScalarFn bump("bump", [](double x) { return x * (1.0 - x) * (1.0 - x); });
  try {
    qubit_function_measure(bump, measure_l1_qubit(), 10, RngSeed{17});
    FAIL("expected ConditionsViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConditionsViolated);
  }
  const QubitFunctionReport r = qubit_function_measure(bump, measure_l1_qubit(), 50, RngSeed{18}, {}, false);
  CHECK_FALSE(r.conditions_hold);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.note.empty());
}
