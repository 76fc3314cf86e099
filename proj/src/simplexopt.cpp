#include "sandcoh/simplexopt.hpp"

#include "sandcoh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sandcoh {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kAgreementTol = 1e-7;

struct Run {
  std::vector<double> point;
  double value = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

double sign_of(Sense sense) { return sense == Sense::Maximize ? 1.0 : -1.0; }

void floor_and_normalize(std::vector<double>& x, double floor) {
  double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (auto& v : x) v /= total;
  bool changed = false;
  for (auto& v : x) {
    if (v < floor) {
      v = floor;
      changed = true;
    }
  }
  if (changed) {
    total = std::accumulate(x.begin(), x.end(), 0.0);
    for (auto& v : x) v /= total;
  }
}

double evaluate_interior(const SimplexObjective& obj, const std::vector<double>& x,
                         std::vector<double>& grad) {
  const double f = obj.eval(x, grad);
  bool finite = std::isfinite(f);
  for (double g : grad) finite = finite && std::isfinite(g);
  if (!finite) {
    std::ostringstream msg;
    msg << "objective returned a non-finite value or gradient at an interior point (";
    for (std::size_t j = 0; j < x.size(); ++j) msg << (j ? ", " : "") << x[j];
    msg << ")";
    throw Error(ErrorKind::NonFiniteObjective, msg.str());
  }
  return f;
}

// Frank-Wolfe gap, signed so that it is >= 0 and bounds the suboptimality of
// a concave (maximize) or convex (minimize) objective.
double fw_gap(const std::vector<double>& x, const std::vector<double>& g, double sign) {
  double inner = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) inner += x[j] * g[j];
  if (sign > 0) return *std::max_element(g.begin(), g.end()) - inner;
  return inner - *std::min_element(g.begin(), g.end());
}

Run run_from(const SimplexObjective& obj, const OptimizerConfig& cfg, std::vector<double> x) {
  const double sign = sign_of(obj.sense);
  const std::size_t d = obj.dim;
  floor_and_normalize(x, cfg.interior_floor);

  std::vector<double> g(d), y(d), gy(d);
  double f = evaluate_interior(obj, x, g);
  double eta = 1.0;
  std::vector<double> history; // values after each accepted step
  bool stalled = false;

  Run run;
  for (int it = 0; it < cfg.max_iters; ++it) {
    run.iterations = it;
    const double gap = fw_gap(x, g, sign);
    if (gap <= cfg.tol * std::max(1.0, std::abs(f))) {
      run.converged = true;
      break;
    }
    history.push_back(f);
    if (static_cast<int>(history.size()) > cfg.stall_window) {
      const double before = history[history.size() - 1 - static_cast<std::size_t>(cfg.stall_window)];
      if (std::abs(f - before) <= cfg.value_tol * std::max(1.0, std::abs(f))) {
        stalled = true;
        break;
      }
    }
    const auto [gmin, gmax] = std::minmax_element(g.begin(), g.end());
    const double range = *gmax - *gmin;
    const double reference = sign > 0 ? *gmax : *gmin;

    bool accepted = false;
    while (!accepted) {
      const double step = (cfg.step_rule == StepRule::Fixed ? cfg.fixed_step : eta) / range;
      for (std::size_t j = 0; j < d; ++j) y[j] = x[j] * std::exp(sign * step * (g[j] - reference));
      floor_and_normalize(y, cfg.interior_floor);
      const double fy = evaluate_interior(obj, y, gy);
      if (cfg.step_rule == StepRule::Fixed) {
        f = fy;
        accepted = true;
        break;
      }
      double predicted = 0.0;
      for (std::size_t j = 0; j < d; ++j) predicted += g[j] * (y[j] - x[j]);
      predicted *= sign;
      const double gained = sign * (fy - f);
      if (gained >= kArmijo * predicted && gained >= 0.0) {
        f = fy;
        accepted = true;
      } else {
        eta *= 0.5;
        if (eta < 1e-30) break;
      }
    }
    if (!accepted) { // no ascent direction left at machine precision
      stalled = true;
      break;
    }
    std::swap(x, y);
    std::swap(g, gy);
    if (cfg.step_rule == StepRule::Backtracking) eta = std::min(eta * 2.0, 1e30);
    run.iterations = it + 1;
  }
  run.gap = fw_gap(x, g, sign);
  const double scale = std::max(1.0, std::abs(f));
  if (!run.converged) {
    run.converged = run.gap <= cfg.tol * scale ||
                    (stalled && run.gap <= cfg.stall_gap_factor * cfg.tol * scale);
  }
  run.point = std::move(x);
  run.value = f;
  return run;
}

// True when run a should be preferred over run b.
bool better(const Run& a, const Run& b, Sense sense) {
  if (a.value != b.value) return sense == Sense::Maximize ? a.value > b.value : a.value < b.value;
  return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(), b.point.end());
}

} // namespace

void OptimizerConfig::validate(std::size_t dim) const {
  std::ostringstream msg;
  if (!(tol > 0.0)) msg << "tol must be positive; ";
  if (restarts < 1) msg << "restarts must be >= 1; ";
  if (max_iters < 0) msg << "max_iters must be >= 0; ";
  if (!(value_tol >= 0.0)) msg << "value_tol must be >= 0; ";
  if (stall_window < 1) msg << "stall_window must be >= 1; ";
  if (!(interior_floor > 0.0) || !(interior_floor < 1.0 / static_cast<double>(dim)))
    msg << "interior_floor must lie in (0, 1/dim); ";
  if (step_rule == StepRule::Fixed && !(fixed_step > 0.0)) msg << "fixed_step must be positive; ";
  if (!msg.str().empty()) throw Error(ErrorKind::InvalidConfig, msg.str());
}

OptimizationReport mirror_ascend(const SimplexObjective& obj, const OptimizerConfig& cfg,
                                 RngSeed seed, std::span<const ProbVector> warm_starts) {
  if (obj.dim < 1) throw Error(ErrorKind::InvalidDimension, "objective dimension must be >= 1");
  cfg.validate(obj.dim);

  std::vector<std::vector<double>> starts;
  starts.emplace_back(obj.dim, 1.0 / static_cast<double>(obj.dim));
  for (const auto& w : warm_starts) {
    if (static_cast<int>(starts.size()) >= cfg.restarts) break;
    if (w.dim() != obj.dim) throw Error(ErrorKind::DimensionMismatch, "warm start has the wrong dimension");
    starts.push_back(w.vector());
  }
  Rng rng(seed);
  while (static_cast<int>(starts.size()) < cfg.restarts) starts.push_back(rng.dirichlet(obj.dim));

  std::vector<Run> runs;
  runs.reserve(starts.size());
  for (auto& s : starts) runs.push_back(run_from(obj, cfg, std::move(s)));

  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (better(runs[r], runs[best], obj.sense)) best = r;

  OptimizationReport report;
  report.best_value = runs[best].value;
  report.best_point = ProbVector::normalized(runs[best].point);
  report.converged = runs[best].converged;
  report.gap = runs[best].gap;
  for (const auto& run : runs) {
    report.iterations += run.iterations;
    if (std::abs(run.value - report.best_value) <= kAgreementTol) ++report.restarts_agreeing;
  }
  for (double v : runs[best].point)
    if (v <= 10.0 * cfg.interior_floor) report.boundary = true;
  return report;
}

OptimizationReport grid_search(const SimplexObjective& obj, int resolution) {
  if (obj.dim < 1) throw Error(ErrorKind::InvalidDimension, "objective dimension must be >= 1");
  if (obj.dim > 4) {
    std::ostringstream msg;
    msg << "grid search supports dim <= 4, got " << obj.dim;
    throw Error(ErrorKind::DimensionTooLarge, msg.str());
  }
  if (resolution < 1) throw Error(ErrorKind::InvalidConfig, "grid resolution must be >= 1");

  const std::size_t d = obj.dim;
  const double sign = sign_of(obj.sense);
  std::vector<int> k(d, 0);
  std::vector<double> point(d);
  std::vector<double> best_point;
  double best_value = 0.0;
  bool found = false;
  int evaluated = 0;

  // Lexicographic enumeration of compositions of `resolution` into d parts.
  auto visit = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == d) {
      k[pos] = remaining;
      for (std::size_t j = 0; j < d; ++j) point[j] = static_cast<double>(k[j]) / resolution;
      ++evaluated;
      double v;
      try {
        v = obj.eval(point, {});
      } catch (const Error&) {
        return;
      }
      if (!std::isfinite(v)) return;
      if (!found || sign * (v - best_value) > 0.0) {
        best_value = v;
        best_point = point;
        found = true;
      }
      return;
    }
    for (int i = 0; i <= remaining; ++i) {
      k[pos] = i;
      self(self, pos + 1, remaining - i);
    }
  };
  visit(visit, 0, resolution);

  if (!found) throw Error(ErrorKind::NonFiniteObjective, "objective is not finite at any lattice point");

  OptimizationReport report;
  report.best_value = best_value;
  report.best_point = ProbVector::normalized(best_point);
  report.iterations = evaluated;
  report.converged = true;
  report.restarts_agreeing = 1;
  for (double v : best_point)
    if (v == 0.0) report.boundary = true;
  return report;
}

double holder_two_block(double t1, double t2, double p1, double p2, const Alpha& alpha) {
  require_regime(alpha, Regime::S1, "holder_two_block");
  if (!(t1 > 0.0) || !(t2 > 0.0)) {
    std::ostringstream msg;
    msg << "t1 = " << t1 << ", t2 = " << t2 << " must both be positive";
    throw Error(ErrorKind::NonPositiveT, msg.str());
  }
  if (!(p1 > 0.0) || !(p2 > 0.0) || std::abs(p1 + p2 - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "weights (" << p1 << ", " << p2 << ") must be positive and sum to 1";
    throw Error(ErrorKind::InvalidWeights, msg.str());
  }
  const double a = alpha.value();
  const double e = 1.0 / (a - 1.0);
  return std::pow(p1, 1.0 - a) * std::pow(p2, 1.0 - a) * t1 * t2 *
         std::pow(std::pow(t1, e) / p1 + std::pow(t2, e) / p2, 1.0 - a);
}

HolderCheck holder_check(std::span<const double> a, std::span<const double> b, double alpha) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "holder_check needs two non-empty vectors of equal length");
  }
  if (!(alpha > 0.0) || alpha == 1.0) {
    std::ostringstream msg;
    msg << "holder_check: alpha = " << alpha << " must lie in (0, 1) or (1, inf)";
    throw Error(ErrorKind::AlphaOutOfRange, msg.str());
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] > 0.0) || !(b[j] > 0.0)) {
      std::ostringstream msg;
      msg << "entry " << j << " is not positive (a = " << a[j] << ", b = " << b[j] << ")";
      throw Error(ErrorKind::NonPositiveEntry, msg.str());
    }
  }
  const double pa = 1.0 / alpha;
  const double pb = 1.0 / (1.0 - alpha);
  double lhs = 0.0, sa = 0.0, sb = 0.0;
  double log_ratio_min = INFINITY, log_ratio_max = -INFINITY;
  for (std::size_t j = 0; j < a.size(); ++j) {
    lhs += a[j] * b[j];
    sa += std::pow(a[j], pa);
    sb += std::pow(b[j], pb);
    const double log_ratio = pa * std::log(a[j]) - pb * std::log(b[j]);
    log_ratio_min = std::min(log_ratio_min, log_ratio);
    log_ratio_max = std::max(log_ratio_max, log_ratio);
  }
  HolderCheck out;
  out.lhs = lhs;
  out.rhs = std::pow(sa, alpha) * std::pow(sb, 1.0 - alpha);
  const double slack = 1e-12 * std::max(std::abs(out.lhs), std::abs(out.rhs));
  out.regime_satisfied = alpha < 1.0 ? out.lhs <= out.rhs + slack : out.lhs >= out.rhs - slack;
  out.equality = std::abs(out.lhs - out.rhs) <= 1e-10 * std::max(1.0, std::abs(out.lhs)) && (log_ratio_max - log_ratio_min) <= 1e-8;
  return out;
}

} // namespace sandcoh
