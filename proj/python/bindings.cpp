#include "sandcoh/axioms.hpp"
#include "sandcoh/entropy.hpp"
#include "sandcoh/errors.hpp"
#include "sandcoh/io.hpp"
#include "sandcoh/measures.hpp"
#include "sandcoh/sandwich.hpp"
#include "sandcoh/simplexopt.hpp"
#include "sandcoh/states.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sandcoh;

namespace {

MeasureOptions make_options(std::uint64_t seed, int restarts, double tol, int max_iters, const std::string& oracle,
                            int grid_resolution) {
  MeasureOptions options;
  options.seed = RngSeed{seed};
  options.optimizer.restarts = restarts;
  options.optimizer.tol = tol;
  options.optimizer.max_iters = max_iters;
  if (oracle == "mirror") options.oracle = Oracle::Mirror;
  else if (oracle == "grid") options.oracle = Oracle::Grid;
  else throw Error(ErrorKind::InvalidConfig, "oracle must be 'mirror' or 'grid'");
  options.grid_resolution = grid_resolution;
  return options;
}

MeasureFn make_measure(const std::string& name, double alpha, const MeasureOptions& options) {
  if (name == "s1") return measure_s1(alpha, options);
  if (name == "s") return measure_s(alpha, options);
  if (name == "geometric") return measure_geometric(options);
  if (name == "l1-qubit") return measure_l1_qubit();
  if (name == "broken") return measure_broken();
  throw Error(ErrorKind::InvalidConfig, "unknown measure '" + name + "'");
}

ScalarFn make_scalar(const std::string& name) {
  if (name == "identity") return ScalarFn::identity();
  if (name == "square") return ScalarFn::square();
  if (name == "sqrt") return ScalarFn::sqrt();
  throw Error(ErrorKind::InvalidConfig, "unknown function '" + name + "'");
}

Axiom parse_axiom(const std::string& name) {
  for (Axiom a : {Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::C5, Axiom::DPI})
    if (to_string(a) == name) return a;
  throw Error(ErrorKind::InvalidConfig, "unknown axiom '" + name + "'");
}

DensityMatrix density(const ComplexMatrix& m) { return DensityMatrix(m); }

std::vector<double> to_vector(const ProbVector& p) {
  return {p.values().begin(), p.values().end()};
}

const char* kOptionsDoc = "seed, restarts, tol, max_iters, oracle ('mirror' or 'grid') and grid_resolution "
                          "configure the inner optimization over incoherent states.";

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sandwiched Renyi coherence measures";

  py::register_exception<Error>(m, "SandcohError", PyExc_ValueError);

  py::class_<MeasureResult>(m, "MeasureResult")
      .def_readonly("value", &MeasureResult::value)
      .def_property_readonly("sigma", [](const MeasureResult& r) { return to_vector(r.optimal_sigma); })
      .def_property_readonly("converged", [](const MeasureResult& r) { return r.report.converged; })
      .def_property_readonly("restarts_agreeing", [](const MeasureResult& r) { return r.report.restarts_agreeing; })
      .def_property_readonly("iterations", [](const MeasureResult& r) { return r.report.iterations; })
      .def_property_readonly("gap", [](const MeasureResult& r) { return r.report.gap; })
      .def_property_readonly("method", [](const MeasureResult& r) { return std::string(to_string(r.method)); })
      .def("__repr__", [](const MeasureResult& r) {
        return "MeasureResult(value=" + format_double(r.value) + ", converged=" +
               (r.report.converged ? "True" : "False") + ", method='" + std::string(to_string(r.method)) + "')";
      });

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_property_readonly("axiom", [](const AxiomReport& r) { return std::string(to_string(r.axiom)); })
      .def_readonly("trials", &AxiomReport::trials)
      .def_readonly("max_violation", &AxiomReport::max_violation)
      .def_property_readonly("worst_seed", [](const AxiomReport& r) { return r.worst_case_seed.value; })
      .def_readonly("passed", &AxiomReport::passed)
      .def_readonly("skipped", &AxiomReport::skipped)
      .def_readonly("note", &AxiomReport::note)
      .def("__repr__", [](const AxiomReport& r) {
        return "AxiomReport(axiom='" + std::string(to_string(r.axiom)) + "', passed=" +
               (r.passed ? "True" : "False") + ", max_violation=" + format_double(r.max_violation) + ")";
      });

  py::class_<HolderCheck>(m, "HolderCheck")
      .def_readonly("lhs", &HolderCheck::lhs)
      .def_readonly("rhs", &HolderCheck::rhs)
      .def_readonly("regime_satisfied", &HolderCheck::regime_satisfied)
      .def_readonly("equality", &HolderCheck::equality);

  // States
  m.def("random_density",
        [](std::size_t d, std::size_t rank, std::uint64_t seed) {
          return random_density(d, rank, RngSeed{seed}).mat();
        },
        "d"_a, "rank"_a, "seed"_a, "Random density matrix of the given rank.");
  m.def("random_pure",
        [](std::size_t d, std::uint64_t seed) { return ComplexVector(random_pure(d, RngSeed{seed}).amplitudes()); },
        "d"_a, "seed"_a, "Random pure-state amplitudes.");
  m.def("dephase", [](const ComplexMatrix& rho) { return to_vector(dephase(density(rho))); }, "rho"_a,
        "Diagonal of rho as a probability vector.");
  m.def("load_state", [](const std::string& path) { return load_state(path).rho.mat(); }, "path"_a,
        "Reads a state file and returns its density matrix.");
  m.def("save_state", [](const std::string& path, const ComplexMatrix& rho) { save_state(path, density(rho)); },
        "path"_a, "rho"_a);

  // Measures
  m.def("c_s1",
        [](const ComplexMatrix& rho, double alpha, std::uint64_t seed, int restarts, double tol, int max_iters,
           const std::string& oracle, int grid_resolution) {
          return c_s1(density(rho), Alpha::s1(alpha),
                      make_options(seed, restarts, tol, max_iters, oracle, grid_resolution));
        },
        "rho"_a, "alpha"_a, "seed"_a = 0x5eed, "restarts"_a = 4, "tol"_a = 1e-8, "max_iters"_a = 5000,
        "oracle"_a = "mirror", "grid_resolution"_a = 200, kOptionsDoc);
  m.def("c_s",
        [](const ComplexMatrix& rho, double alpha, std::uint64_t seed, int restarts, double tol, int max_iters,
           const std::string& oracle, int grid_resolution) {
          return c_s(density(rho), Alpha::s(alpha),
                     make_options(seed, restarts, tol, max_iters, oracle, grid_resolution));
        },
        "rho"_a, "alpha"_a, "seed"_a = 0x5eed, "restarts"_a = 4, "tol"_a = 1e-8, "max_iters"_a = 5000,
        "oracle"_a = "mirror", "grid_resolution"_a = 200, kOptionsDoc);
  m.def("geometric_coherence",
        [](const ComplexMatrix& rho, std::uint64_t seed, int restarts, double tol, int max_iters,
           const std::string& oracle, int grid_resolution) {
          return geometric_coherence(density(rho),
                                     make_options(seed, restarts, tol, max_iters, oracle, grid_resolution));
        },
        "rho"_a, "seed"_a = 0x5eed, "restarts"_a = 4, "tol"_a = 1e-8, "max_iters"_a = 5000, "oracle"_a = "mirror",
        "grid_resolution"_a = 200, kOptionsDoc);
  m.def("c_s1_pure",
        [](const ComplexVector& psi, double alpha) { return c_s1_pure(PureState(psi), Alpha::s1(alpha)); },
        "psi"_a, "alpha"_a, "Closed form for a pure state given by its amplitudes.");
  m.def("c_s_pure",
        [](const ComplexVector& psi, double alpha) { return c_s_pure(PureState(psi), Alpha::s(alpha)); }, "psi"_a,
        "alpha"_a, "Closed form for a pure state given by its amplitudes.");
  m.def("l1_coherence_qubit", [](const ComplexMatrix& rho) { return l1_coherence_qubit(density(rho)); }, "rho"_a);
  m.def("sandwiched_renyi",
        [](const ComplexMatrix& sigma, const ComplexMatrix& rho, double alpha) {
          return sandwiched_renyi(density(sigma), density(rho), Alpha::entropy(alpha));
        },
        "sigma"_a, "rho"_a, "alpha"_a);
  m.def("fidelity",
        [](const ComplexMatrix& rho, const ComplexMatrix& sigma) { return fidelity(density(rho), density(sigma)); },
        "rho"_a, "sigma"_a, "Root fidelity tr[(sigma^1/2 rho sigma^1/2)^1/2].");

  // Simplex tools
  m.def("holder_check",
        [](const std::vector<double>& a, const std::vector<double>& b, double alpha) {
          return holder_check(a, b, alpha);
        },
        "a"_a, "b"_a, "alpha"_a);
  m.def("holder_two_block",
        [](double t1, double t2, double p1, double p2, double alpha) {
          return holder_two_block(t1, t2, p1, p2, Alpha::s1(alpha));
        },
        "t1"_a, "t2"_a, "p1"_a, "p2"_a, "alpha"_a);

  // Axiom harness
  m.def("check_axiom",
        [](const std::string& axiom, const std::string& measure, double alpha, std::size_t d, int trials,
           std::uint64_t seed, double tol, const std::string& compose_with) {
          HarnessOptions harness;
          harness.tol = tol;
          const Axiom which = parse_axiom(axiom);
          if (which == Axiom::DPI) return check_dpi(Alpha::entropy(alpha), d, trials, RngSeed{seed}, harness);
          MeasureFn fn = make_measure(measure, alpha, MeasureOptions{});
          if (compose_with != "identity") fn = compose(make_scalar(compose_with), fn);
          switch (which) {
          case Axiom::C1: return check_c1(fn, d, trials, RngSeed{seed}, harness);
          case Axiom::C2: return check_c2(fn, d, trials, RngSeed{seed}, harness);
          case Axiom::C3: return check_c3(fn, d, trials, RngSeed{seed}, harness);
          case Axiom::C4: return check_c4(fn, d, trials, RngSeed{seed}, harness);
          default: return check_c5(fn, trials, RngSeed{seed}, harness, d);
          }
        },
        "axiom"_a, "measure"_a, "alpha"_a = 0.5, "d"_a = 2, "trials"_a = 200, "seed"_a = 1, "tol"_a = kAxiomTol,
        "compose"_a = "identity",
        "Runs one axiom check. For C5, d is the maximum total dimension; DPI ignores measure.");
  m.def("linearization_counterexample",
        [](const std::string& f, const std::string& measure, double alpha, std::size_t d) {
          const LinearizationResult r =
              linearization_counterexample(make_scalar(f), make_measure(measure, alpha, MeasureOptions{}), d);
          return py::make_tuple(r.violation, r.worst_p2, r.witness.mat());
        },
        "f"_a, "measure"_a, "alpha"_a = 0.5, "d"_a = 3, "Returns (violation, worst_p2, witness).");
}
