#include "sandcoh/cli.hpp"

#include "sandcoh/axioms.hpp"
#include "sandcoh/errors.hpp"
#include "sandcoh/io.hpp"
#include "sandcoh/measures.hpp"
#include "sandcoh/states.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sandcoh {

namespace {

struct CommonFlags {
  std::uint64_t seed = 0x5eed;
  std::optional<double> tol;
  std::optional<int> restarts;
  std::optional<int> max_iters;
  std::string oracle = "mirror";
  int grid_resolution = 200;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& tol_help) {
  cmd->add_option("--seed", flags.seed, "Root random seed")->capture_default_str();
  cmd->add_option("--tol", flags.tol, tol_help);
  cmd->add_option("--restarts", flags.restarts, "Optimizer restarts (>= 1)");
  cmd->add_option("--max-iters", flags.max_iters, "Optimizer iteration cap per restart");
  cmd->add_option("--oracle", flags.oracle, "Inner solver: mirror ascent or exhaustive grid (dim <= 4)")
      ->check(CLI::IsMember({"mirror", "grid"}))
      ->capture_default_str();
  cmd->add_option("--grid-resolution", flags.grid_resolution, "Lattice resolution for --oracle grid")
      ->capture_default_str();
}

MeasureOptions measure_options(const CommonFlags& flags, bool tol_is_optimizer) {
  MeasureOptions options;
  options.seed = RngSeed{flags.seed};
  if (tol_is_optimizer && flags.tol) options.optimizer.tol = *flags.tol;
  if (flags.restarts) options.optimizer.restarts = *flags.restarts;
  if (flags.max_iters) options.optimizer.max_iters = *flags.max_iters;
  options.oracle = flags.oracle == "grid" ? Oracle::Grid : Oracle::Mirror;
  options.grid_resolution = flags.grid_resolution;
  if (options.grid_resolution < 1) throw Error(ErrorKind::InvalidConfig, "--grid-resolution must be >= 1");
  options.optimizer.validate(1);
  return options;
}

bool needs_alpha(const std::string& measure) {
  return measure == "s1" || measure == "s";
}

// Alpha reported in output rows; the alpha-free measures carry a fixed value.
std::string alpha_field(const std::string& measure, double alpha) {
  if (measure == "geometric") return format_double(0.5);
  if (measure == "l1-qubit" || measure == "broken") return "";
  return format_double(alpha);
}

MeasureFn make_measure(const std::string& name, double alpha, const MeasureOptions& options) {
  if (name == "s1") return measure_s1(alpha, options);
  if (name == "s") return measure_s(alpha, options);
  if (name == "geometric") return measure_geometric(options);
  if (name == "l1-qubit") return measure_l1_qubit();
  if (name == "broken") return measure_broken();
  throw Error(ErrorKind::InvalidConfig, "unknown measure '" + name + "'");
}

std::string bool_field(bool b) {
  return b ? "true" : "false";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(x)) {
    throw Error(ErrorKind::Parse, what + ": '" + text + "' is not a finite number");
  }
  return x;
}

// Measurement of one state; failures inside the optimizer propagate as Error.
struct Cell {
  double value = 0.0;
  bool converged = true;
  int restarts_agreeing = 0;
  Method method = Method::Optimizer;
};

Cell evaluate(const std::string& measure, double alpha, const LoadedState& state, const MeasureOptions& options,
              bool closed_form) {
  Cell cell;
  if (measure == "l1-qubit") {
    cell.value = l1_coherence_qubit(state.rho);
    cell.method = Method::PureClosedForm;
    return cell;
  }
  if (measure == "broken") {
    cell.value = measure_broken()(state.rho);
    cell.method = Method::PureClosedForm;
    return cell;
  }
  if (closed_form) {
    if (!state.pure) throw Error(ErrorKind::InvalidPureState, "--closed-form needs a state file with a \"vector\"");
    if (measure == "s1") cell.value = c_s1_pure(*state.pure, Alpha::s1(alpha));
    else if (measure == "s") cell.value = c_s_pure(*state.pure, Alpha::s(alpha));
    else cell.value = c_s1_pure(*state.pure, Alpha::s1(0.5));
    cell.method = Method::PureClosedForm;
    return cell;
  }
  MeasureResult r;
  if (measure == "s1") r = c_s1(state.rho, Alpha::s1(alpha), options);
  else if (measure == "s") r = c_s(state.rho, Alpha::s(alpha), options);
  else if (measure == "geometric") r = geometric_coherence(state.rho, options);
  else throw Error(ErrorKind::InvalidConfig, "unknown measure '" + measure + "'");
  cell.value = r.value;
  cell.converged = r.report.converged;
  cell.restarts_agreeing = r.report.restarts_agreeing;
  cell.method = r.method;
  return cell;
}

// ---- measure ---------------------------------------------------------------

struct MeasureArgs {
  CommonFlags common;
  std::string state;
  std::string measure;
  std::optional<double> alpha;
  bool closed_form = false;
};

int cmd_measure(const MeasureArgs& args, std::ostream& out, std::ostream& err) {
  if (needs_alpha(args.measure) && !args.alpha) {
    err << "error: --alpha is required for measure '" << args.measure << "'\n";
    return kExitInputError;
  }
  const double alpha = args.alpha.value_or(0.5);
  const MeasureOptions options = measure_options(args.common, true);
  const LoadedState state = load_state(args.state);
  const Cell cell = evaluate(args.measure, alpha, state, options, args.closed_form);
  out << args.measure << ',' << alpha_field(args.measure, alpha) << ',' << format_double(cell.value) << ','
      << bool_field(cell.converged) << ',' << cell.restarts_agreeing << ',' << to_string(cell.method) << '\n';
  if (!cell.converged) {
    err << "warning: optimizer did not converge\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

// ---- axioms ----------------------------------------------------------------

struct AxiomArgs {
  CommonFlags common;
  std::string measure;
  std::optional<double> alpha;
  std::size_t dim = 2;
  int trials = 200;
  std::string compose = "identity";
  std::string log;
};

int cmd_axioms(const AxiomArgs& args, std::ostream& out, std::ostream& err) {
  if (needs_alpha(args.measure) && !args.alpha) {
    err << "error: --alpha is required for measure '" << args.measure << "'\n";
    return kExitInputError;
  }
  if (args.trials < 1) throw Error(ErrorKind::InvalidConfig, "--trials must be >= 1");
  if (args.dim < 2) throw Error(ErrorKind::InvalidDimension, "--dim must be >= 2");
  if (args.measure == "l1-qubit" && args.dim != 2) throw Error(ErrorKind::NotQubit, "l1-qubit needs --dim 2");
  const double alpha = args.alpha.value_or(0.5);
  const MeasureOptions options = measure_options(args.common, false);

  MeasureFn m = make_measure(args.measure, alpha, options);
  if (args.compose == "square") m = compose(ScalarFn::square(), m);
  else if (args.compose == "sqrt") m = compose(ScalarFn::sqrt(), m);

  std::ofstream log_file;
  HarnessOptions harness;
  if (args.common.tol) harness.tol = *args.common.tol;
  if (!args.log.empty()) {
    log_file.open(args.log);
    if (!log_file) throw Error(ErrorKind::Parse, args.log + ": cannot open for writing");
    harness.log = &log_file;
  }

  const RngSeed root{args.common.seed};
  std::vector<AxiomReport> reports;
  reports.push_back(check_c1(m, args.dim, args.trials, derive_seed(root, 1), harness));
  reports.push_back(check_c2(m, args.dim, args.trials, derive_seed(root, 2), harness));
  reports.push_back(check_c3(m, args.dim, args.trials, derive_seed(root, 3), harness));
  reports.push_back(check_c4(m, args.dim, args.trials, derive_seed(root, 4), harness));
  if (args.dim >= 3 && args.measure != "l1-qubit") {
    reports.push_back(check_c5(m, args.trials, derive_seed(root, 5), harness, args.dim));
  } else {
    AxiomReport skipped;
    skipped.axiom = Axiom::C5;
    skipped.skipped = true;
    reports.push_back(skipped);
  }

  out << "axiom,measure,alpha,dim,trials,max_violation,worst_seed,status\n";
  bool all_pass = true;
  for (const AxiomReport& r : reports) {
    const char* status = r.skipped ? "skipped" : (r.passed ? "pass" : "fail");
    if (!r.skipped && !r.passed) all_pass = false;
    out << to_string(r.axiom) << ',' << csv_field(m.name) << ',' << alpha_field(args.measure, alpha) << ','
        << args.dim << ',' << r.trials << ',' << (r.skipped ? "NaN" : format_double(r.max_violation)) << ','
        << r.worst_case_seed.value << ',' << status << '\n';
  }
  return all_pass ? kExitOk : kExitAxiomFailure;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  CommonFlags common;
  std::vector<std::string> states;
  std::vector<std::string> generate;
  std::string measures = "s1,s";
  std::string alphas;
  std::string out;
};

struct SweepState {
  std::string id;
  LoadedState state;
};

std::vector<SweepState> sweep_states(const SweepArgs& args) {
  std::vector<SweepState> states;
  for (const std::string& path : args.states) states.push_back({path, load_state(path)});
  for (const std::string& generator : args.generate) {
    const std::vector<std::string> parts = split(generator, ',');
    if (parts.size() != 4) {
      throw Error(ErrorKind::Parse, "--generate '" + generator + "': expected dim,rank,count,seed");
    }
    std::vector<long long> v;
    for (const std::string& p : parts) {
      std::size_t used = 0;
      long long x = -1;
      try {
        x = std::stoll(p, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != p.size() || x < 0) {
        throw Error(ErrorKind::Parse, "--generate '" + generator + "': '" + p + "' is not a non-negative integer");
      }
      v.push_back(x);
    }
    const auto dim = static_cast<std::size_t>(v[0]);
    const auto rank = static_cast<std::size_t>(v[1]);
    const RngSeed seed{static_cast<std::uint64_t>(v[3])};
    for (long long i = 0; i < v[2]; ++i) {
      std::ostringstream id;
      id << "gen-d" << dim << "-r" << rank << "-s" << seed.value << "-" << i;
      DensityMatrix rho = random_density(dim, rank, derive_seed(seed, static_cast<std::uint64_t>(i)));
      states.push_back({id.str(), LoadedState{std::move(rho), std::nullopt}});
    }
  }
  if (states.empty()) throw Error(ErrorKind::InvalidConfig, "sweep needs at least one --state or --generate");
  return states;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const MeasureOptions options = measure_options(args.common, true);
  const std::vector<std::string> measures = split(args.measures, ',');
  for (const std::string& name : measures) {
    if (name != "s1" && name != "s" && name != "geometric" && name != "l1-qubit") {
      throw Error(ErrorKind::InvalidConfig, "unknown sweep measure '" + name + "'");
    }
  }
  std::vector<double> alphas;
  for (const std::string& a : split(args.alphas, ',')) alphas.push_back(parse_real(a, "--alphas"));
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  const std::vector<SweepState> states = sweep_states(args);

  std::ostringstream csv;
  csv << "state_id,measure,alpha,value,method,converged\n";
  bool all_ok = true;
  for (const SweepState& s : states) {
    for (const std::string& measure : measures) {
      std::vector<double> cell_alphas = needs_alpha(measure) ? alphas : std::vector<double>{0.5};
      if (measure == "l1-qubit" && s.state.rho.dim() != 2) {
        err << "notice: skipping " << s.id << " x l1-qubit (state is not a qubit)\n";
        continue;
      }
      for (double alpha : cell_alphas) {
        const Regime regime = measure == "s" ? Regime::S : Regime::S1;
        if (needs_alpha(measure) && !in_regime(alpha, regime)) {
          err << "notice: skipping " << s.id << " x " << measure << " at alpha=" << format_double(alpha)
              << " (outside the " << to_string(regime) << " range)\n";
          continue;
        }
        csv << csv_field(s.id) << ',' << measure << ',' << alpha_field(measure, alpha) << ',';
        try {
          const Cell cell = evaluate(measure, alpha, s.state, options, false);
          csv << format_double(cell.value) << ',' << to_string(cell.method) << ',' << bool_field(cell.converged)
              << '\n';
          if (!cell.converged) all_ok = false;
        } catch (const Error& e) {
          err << "warning: " << s.id << " x " << measure << ": " << e.what() << '\n';
          csv << "NaN," << to_string(options.oracle == Oracle::Grid ? Method::GridOracle : Method::Optimizer)
              << ",false\n";
          all_ok = false;
        }
      }
    }
  }

  if (args.out.empty() || args.out == "-") {
    out << csv.str();
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::Parse, args.out + ": cannot open for writing");
    file << csv.str();
  }
  return all_ok ? kExitOk : kExitNotConverged;
}

// ---- random ----------------------------------------------------------------

struct RandomArgs {
  std::size_t dim = 2;
  std::optional<std::size_t> rank;
  std::uint64_t seed = 0x5eed;
  bool pure = false;
  std::string out;
};

int cmd_random(const RandomArgs& args, std::ostream& out) {
  const RngSeed seed{args.seed};
  std::string text;
  if (args.pure) text = state_to_json(random_pure(args.dim, seed));
  else text = state_to_json(random_density(args.dim, args.rank.value_or(args.dim), seed));
  if (args.out.empty() || args.out == "-") {
    out << text;
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::Parse, args.out + ": cannot open for writing");
    file << text;
  }
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sandwiched Renyi coherence measures: evaluation, axiom checks and sweeps", "sandcoh"};
  app.require_subcommand(1);
  const std::vector<std::string> all_measures{"s1", "s", "geometric", "l1-qubit", "broken"};

  MeasureArgs measure_args;
  CLI::App* measure = app.add_subcommand("measure", "Evaluate one measure on a state file");
  measure->add_option("--state", measure_args.state, "State file")->required();
  measure->add_option("--measure", measure_args.measure, "Measure name")
      ->required()
      ->check(CLI::IsMember(all_measures));
  measure->add_option("--alpha", measure_args.alpha, "Order alpha");
  measure->add_flag("--closed-form", measure_args.closed_form, "Use the pure-state closed form");
  add_common(measure, measure_args.common, "Optimizer convergence tolerance");

  AxiomArgs axiom_args;
  CLI::App* axioms = app.add_subcommand("axioms", "Run the C1-C5 property suites");
  axioms->add_option("--measure", axiom_args.measure, "Measure name")
      ->required()
      ->check(CLI::IsMember(all_measures));
  axioms->add_option("--alpha", axiom_args.alpha, "Order alpha");
  axioms->add_option("--dim", axiom_args.dim, "State dimension")->capture_default_str();
  axioms->add_option("--trials", axiom_args.trials, "Trials per axiom")->capture_default_str();
  axioms->add_option("--compose", axiom_args.compose, "Scalar function applied to the measure")
      ->check(CLI::IsMember({"identity", "square", "sqrt"}))
      ->capture_default_str();
  axioms->add_option("--log", axiom_args.log, "Write failing trials (seed, alpha, states) to this file");
  add_common(axioms, axiom_args.common, "Axiom tolerance (default 5e-6)");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate measures over states and alphas");
  sweep->add_option("--state", sweep_args.states, "State file (repeatable)");
  sweep->add_option("--generate", sweep_args.generate, "Random states: dim,rank,count,seed (repeatable)");
  sweep->add_option("--measures", sweep_args.measures, "Comma-separated subset of s1,s,geometric,l1-qubit")
      ->capture_default_str();
  sweep->add_option("--alphas", sweep_args.alphas, "Comma-separated alphas");
  sweep->add_option("--out", sweep_args.out, "Output CSV path (default: standard output)");
  add_common(sweep, sweep_args.common, "Optimizer convergence tolerance");

  RandomArgs random_args;
  CLI::App* random = app.add_subcommand("random", "Write a random state file");
  random->add_option("--dim", random_args.dim, "Dimension")->required();
  random->add_option("--rank", random_args.rank, "Rank (default: dim)");
  random->add_option("--seed", random_args.seed, "Seed")->capture_default_str();
  random->add_flag("--pure", random_args.pure, "Haar-random pure state");
  random->add_option("--out", random_args.out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*measure) return cmd_measure(measure_args, out, err);
    if (*axioms) return cmd_axioms(axiom_args, out, err);
    if (*sweep) return cmd_sweep(sweep_args, out, err);
    if (*random) return cmd_random(random_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

} // namespace sandcoh
