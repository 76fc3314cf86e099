#pragma once

#include "sandcoh/alpha.hpp"
#include "sandcoh/random.hpp"
#include "sandcoh/states.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sandcoh {

enum class Sense { Maximize, Minimize };

/// Objective over the probability simplex. `eval(point, grad)` returns the
/// value and, when `grad` is non-empty, writes the gradient into it.
struct SimplexObjective {
  std::size_t dim = 0;
  std::function<double(std::span<const double>, std::span<double>)> eval;
  Sense sense = Sense::Maximize;
};

enum class StepRule { Fixed, Backtracking };

struct OptimizerConfig {
  int max_iters = 5000;
  // Stop once the Frank-Wolfe gap (max_j g_j - <sigma, g> when maximizing)
  // falls below tol * max(1, |value|).
  double tol = 1e-8;
  // Also stop when the value has moved by less than value_tol (relative)
  // over the last stall_window accepted steps. Such a run counts as converged
  // if its gap is within stall_gap_factor * tol; at that point the remaining
  // suboptimality is below what double precision can resolve.
  double value_tol = 1e-14;
  int stall_window = 20;
  double stall_gap_factor = 1e3;
  int restarts = 4;
  double interior_floor = 1e-9;
  StepRule step_rule = StepRule::Backtracking;
  // Step size used by StepRule::Fixed, in units of 1 / (max g - min g).
  double fixed_step = 1.0;

  void validate(std::size_t dim) const;
};

struct OptimizationReport {
  double best_value = 0.0;
  ProbVector best_point = ProbVector::uniform(1);
  int iterations = 0;    // summed over restarts
  bool converged = false; // the best restart met the gap tolerance
  int restarts_agreeing = 0;
  double gap = 0.0;       // Frank-Wolfe gap at best_point
  bool boundary = false;  // some coordinate of best_point sits on the floor
};

/// Exponentiated-gradient (mirror) ascent/descent with restarts.
/// Starting points: the uniform point, then each of `warm_starts`, then flat
/// Dirichlet draws from `seed` until cfg.restarts runs have been made.
OptimizationReport mirror_ascend(const SimplexObjective& obj, const OptimizerConfig& cfg,
                                 RngSeed seed, std::span<const ProbVector> warm_starts = {});

/// Exhaustive search over the lattice {k / resolution} of the simplex.
/// Non-finite or throwing evaluations are skipped. Ties go to the first point
/// in lexicographic order. dim <= 4.
OptimizationReport grid_search(const SimplexObjective& obj, int resolution);

/// Closed form of max_q { p1^{1-a} q^a t1 + p2^{1-a} (1-q)^a t2 }:
/// p1^{1-a} p2^{1-a} t1 t2 (t1^{1/(a-1)}/p1 + t2^{1/(a-1)}/p2)^{1-a}.
double holder_two_block(double t1, double t2, double p1, double p2, const Alpha& alpha);

struct HolderCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool regime_satisfied = false; // lhs <= rhs for alpha in (0,1), lhs >= rhs for alpha > 1
  bool equality = false;         // |lhs - rhs| <= 1e-10 and the proportionality condition holds
};

/// Compares sum_j a_j b_j with (sum_j a_j^{1/a})^a (sum_j b_j^{1/(1-a)})^{1-a}.
/// Equality holds exactly when a_j^{1/a} / b_j^{1/(1-a)} is the same for all j.
HolderCheck holder_check(std::span<const double> a, std::span<const double> b, double alpha);

} // namespace sandcoh
