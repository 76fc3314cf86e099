#include "sandcoh/axioms.hpp"

#include "sandcoh/channels.hpp"
#include "sandcoh/entropy.hpp"
#include "sandcoh/errors.hpp"
#include "sandcoh/io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace sandcoh {

namespace {

constexpr double kDiagonalZeroTol = 1e-7;
constexpr double kNegativityTol = 1e-9;
constexpr double kFaithfulFloor = 1e-5;
constexpr double kCoherentMass = 1e-2;
constexpr double kDpiTol = 1e-8;

// Random test state: pure with probability 1/3, otherwise a random rank.
DensityMatrix random_test_state(std::size_t d, Rng& rng) {
  if (rng.uniform() < 1.0 / 3.0) return DensityMatrix::from_pure(random_pure(d, rng));
  const auto rank = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d)));
  return random_density(d, rank, rng);
}

class Tracker {
public:
  Tracker(Axiom axiom, const std::string& measure, double alpha, const HarnessOptions& options)
      : measure_(measure), alpha_(alpha), options_(options) {
    report_.axiom = axiom;
  }

  void record(double violation, RngSeed seed, std::initializer_list<const DensityMatrix*> states) {
    ++report_.trials;
    if (violation > report_.max_violation || report_.trials == 1) {
      report_.max_violation = violation;
      report_.worst_case_seed = seed;
    }
    if (violation > 0.0 && options_.log != nullptr) {
      std::ostream& log = *options_.log;
      log << "FAIL " << to_string(report_.axiom) << " measure=" << measure_ << " alpha=" << format_double(alpha_)
          << " seed=" << seed.value << " violation=" << format_double(violation) << "\n";
      for (const DensityMatrix* s : states) log << state_to_json(*s);
    }
  }

  AxiomReport finish() {
    report_.passed = report_.max_violation <= 0.0;
    return report_;
  }

private:
  std::string measure_;
  double alpha_;
  const HarnessOptions& options_;
  AxiomReport report_;
};

DensityMatrix mixture(const std::vector<double>& weights, const std::vector<DensityMatrix>& states) {
  const auto d = static_cast<Eigen::Index>(states.front().dim());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < states.size(); ++i) m += weights[i] * states[i].mat();
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

} // namespace

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
  case Axiom::C1: return "C1";
  case Axiom::C2: return "C2";
  case Axiom::C3: return "C3";
  case Axiom::C4: return "C4";
  case Axiom::C5: return "C5";
  case Axiom::DPI: return "DPI";
  }
  return "?";
}

MeasureFn measure_s1(double alpha, const MeasureOptions& options) {
  return MeasureFn{"s1", Alpha::s1(alpha),
                   [options](const DensityMatrix& rho, const Alpha& a) { return c_s1(rho, a, options).value; }};
}

MeasureFn measure_s(double alpha, const MeasureOptions& options) {
  return MeasureFn{"s", Alpha::s(alpha),
                   [options](const DensityMatrix& rho, const Alpha& a) { return c_s(rho, a, options).value; }};
}

MeasureFn measure_geometric(const MeasureOptions& options) {
  return MeasureFn{"geometric", Alpha::s1(0.5), [options](const DensityMatrix& rho, const Alpha&) {
                     return geometric_coherence(rho, options).value;
                   }};
}

MeasureFn measure_l1_qubit() {
  return MeasureFn{"l1-qubit", Alpha::s1(0.5),
                   [](const DensityMatrix& rho, const Alpha&) { return l1_coherence_qubit(rho); }};
}

MeasureFn measure_broken() {
  return MeasureFn{"broken", Alpha::s1(0.5), [](const DensityMatrix& rho, const Alpha&) {
                     const HermEigen eig = psd_eig(rho.mat());
                     return (rho.mat() * rho.mat()).trace().real() - eig.values.minCoeff();
                   }};
}

ScalarFn::ScalarFn(std::string name, std::function<double(double)> eval)
    : name_(std::move(name)), eval_(std::move(eval)) {
  if (eval_(0.0) != 0.0) throw Error(ErrorKind::ConditionsViolated, name_ + ": f(0) != 0");
  for (int i = 0; i <= 400; ++i) {
    const double x = 0.01 * i;
    const double fx = eval_(x);
    if (!(fx >= 0.0)) {
      std::ostringstream msg;
      msg << name_ << ": f(" << x << ") = " << fx << " is negative";
      throw Error(ErrorKind::ConditionsViolated, msg.str());
    }
  }
}

ScalarFn ScalarFn::identity() {
  return ScalarFn("identity", [](double x) { return x; });
}
ScalarFn ScalarFn::square() {
  return ScalarFn("square", [](double x) { return x * x; });
}
ScalarFn ScalarFn::sqrt() {
  return ScalarFn("sqrt", [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

MeasureFn compose(const ScalarFn& f, const MeasureFn& m) {
  return MeasureFn{f.name() + "(" + m.name + ")", m.alpha,
                   [f, inner = m.eval](const DensityMatrix& rho, const Alpha& a) { return f(inner(rho, a)); }};
}

AxiomReport check_c1(const MeasureFn& m, std::size_t d, int trials, RngSeed seed,
                     const HarnessOptions& options) {
  Tracker tracker(Axiom::C1, m.name, m.alpha.value(), options);
  for (int t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const DensityMatrix diag = random_diagonal(d, rng);
    const DensityMatrix pure = DensityMatrix::from_pure(random_pure(d, rng));
    const DensityMatrix full = random_density(d, d, rng);

    double violation = std::abs(m(diag)) - kDiagonalZeroTol;
    for (const DensityMatrix* s : {&pure, &full}) {
      const double c = m(*s);
      violation = std::max(violation, -kNegativityTol - c);
      if (offdiagonal_mass(*s) > kCoherentMass) violation = std::max(violation, kFaithfulFloor - c);
    }
    tracker.record(violation, trial_seed, {&diag, &pure, &full});
  }
  return tracker.finish();
}

AxiomReport check_c2(const MeasureFn& m, std::size_t d, int trials, RngSeed seed,
                     const HarnessOptions& options) {
  Tracker tracker(Axiom::C2, m.name, m.alpha.value(), options);
  for (int t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const DensityMatrix rho = random_test_state(d, rng);
    const KrausSet channel =
        random_incoherent_channel(d, static_cast<std::size_t>(rng.uniform_int(1, 3)), rng);
    const DensityMatrix out = apply_channel(channel, rho);
    const double excess = m(out) - m(rho);
    tracker.record(excess - options.tol, trial_seed, {&rho, &out});
  }
  return tracker.finish();
}

AxiomReport check_c3(const MeasureFn& m, std::size_t d, int trials, RngSeed seed,
                     const HarnessOptions& options) {
  Tracker tracker(Axiom::C3, m.name, m.alpha.value(), options);
  for (int t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const DensityMatrix rho = random_test_state(d, rng);
    const KrausSet channel =
        random_incoherent_channel(d, static_cast<std::size_t>(rng.uniform_int(1, 3)), rng);
    double average = 0.0;
    for (const auto& outcome : selective_outcomes(channel, rho)) average += outcome.probability * m(outcome.state);
    const double excess = average - m(rho);
    tracker.record(excess - options.tol, trial_seed, {&rho});
  }
  return tracker.finish();
}

AxiomReport check_c4(const MeasureFn& m, std::size_t d, int trials, RngSeed seed,
                     const HarnessOptions& options) {
  Tracker tracker(Axiom::C4, m.name, m.alpha.value(), options);
  for (int t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const auto k = static_cast<std::size_t>(rng.uniform_int(2, 3));
    const std::vector<double> weights = rng.dirichlet(k);
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < k; ++i) states.push_back(random_test_state(d, rng));
    const DensityMatrix mixed = mixture(weights, states);
    double average = 0.0;
    for (std::size_t i = 0; i < k; ++i) average += weights[i] * m(states[i]);
    const double excess = m(mixed) - average;
    tracker.record(excess - options.tol, trial_seed, {&mixed});
  }
  return tracker.finish();
}

AxiomReport check_c5(const MeasureFn& m, int trials, RngSeed seed, const HarnessOptions& options,
                     std::size_t max_total_dim) {
  Tracker tracker(Axiom::C5, m.name, m.alpha.value(), options);
  if (max_total_dim < 3) {
    AxiomReport report = tracker.finish();
    report.max_violation = 0.0;
    report.skipped = true;
    report.note = "block additivity is trivial below dimension 3";
    return report;
  }
  for (int t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const int total = rng.uniform_int(3, static_cast<int>(max_total_dim));
    const int d1 = rng.uniform_int(1, total - 1);
    const double p1 = rng.uniform(0.05, 0.95);
    const DensityMatrix rho1 = random_test_state(static_cast<std::size_t>(d1), rng);
    const DensityMatrix rho2 = random_test_state(static_cast<std::size_t>(total - d1), rng);
    const DensityMatrix sum = block_direct_sum(p1, rho1, 1.0 - p1, rho2);
    const double excess = std::abs(m(sum) - p1 * m(rho1) - (1.0 - p1) * m(rho2));
    tracker.record(excess - options.tol, trial_seed, {&sum});
  }
  return tracker.finish();
}

AxiomReport check_dpi(const Alpha& alpha, std::size_t d, int trials, RngSeed seed,
                      const HarnessOptions& options) {
  Tracker tracker(Axiom::DPI, "sandwiched-renyi", alpha.value(), options);
  for (int t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const DensityMatrix sigma = random_density(d, d, rng);
    const DensityMatrix rho = random_density(d, d, rng);
    const KrausSet channel = random_cptp_channel(d, static_cast<std::size_t>(rng.uniform_int(1, 3)), rng);
    const double before = sandwiched_renyi(sigma, rho, alpha);
    const double after = sandwiched_renyi(apply_channel(channel, sigma), apply_channel(channel, rho), alpha);
    tracker.record(after - before - kDpiTol, trial_seed, {&sigma, &rho});
  }
  return tracker.finish();
}

LinearizationResult linearization_counterexample(const ScalarFn& f, const MeasureFn& m, std::size_t d) {
  if (d < 3) {
    throw Error(ErrorKind::DimensionTooSmall, "the block construction needs d >= 3");
  }
  const DensityMatrix rho1(ComplexMatrix::Identity(1, 1));
  const DensityMatrix rho2 = DensityMatrix::from_pure(maximally_coherent(d - 1));
  const double f1 = f(m(rho1));
  const double f2 = f(m(rho2));

  LinearizationResult result{0.0, 0.0, block_direct_sum(0.5, rho1, 0.5, rho2)};
  bool first = true;
  for (int i = 1; i <= 9; ++i) {
    const double p2 = 0.1 * i;
    const double p1 = 1.0 - p2;
    DensityMatrix rho = block_direct_sum(p1, rho1, p2, rho2);
    const double deviation = std::abs(f(m(rho)) - p1 * f1 - p2 * f2);
    if (first || deviation > result.violation) {
      result.violation = deviation;
      result.worst_p2 = p2;
      result.witness = std::move(rho);
      first = false;
    }
  }
  return result;
}

QubitFunctionReport qubit_function_measure(const ScalarFn& f, const MeasureFn& m, int trials, RngSeed seed,
                                           const HarnessOptions& options, bool require_conditions) {
  QubitFunctionReport out;
  double previous = f(0.0);
  for (int i = 1; i <= 400; ++i) {
    const double x = 0.01 * i;
    const double fx = f(x);
    if (!(fx > 0.0) || fx < previous) out.conditions_hold = false;
    previous = fx;
  }
  if (!out.conditions_hold && require_conditions) {
    throw Error(ErrorKind::ConditionsViolated, f.name() + " is not positive and nondecreasing on (0, 4]");
  }

  const MeasureFn composite = compose(f, m);
  out.axioms.push_back(check_c1(composite, 2, trials, derive_seed(seed, 1), options));
  out.axioms.push_back(check_c2(composite, 2, trials, derive_seed(seed, 2), options));
  out.axioms.push_back(check_c3(composite, 2, trials, derive_seed(seed, 3), options));
  out.axioms.push_back(check_c4(composite, 2, trials, derive_seed(seed, 4), options));
  const bool all_pass = std::all_of(out.axioms.begin(), out.axioms.end(), [](const AxiomReport& r) { return r.passed; });
  if (out.conditions_hold) {
    out.passed = all_pass;
  } else {
    out.passed = false;
    out.note = all_pass ? "no violation found" : "violation found";
  }
  return out;
}

} // namespace sandcoh
