#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsallis_inf/core.hpp"
#include "tsallis_inf/types.hpp"

namespace tsallis_inf {

inline constexpr double kDualResidualTolerance = 1e-12;
inline constexpr int kDualSolveIterationCap = 200;

// Result of the one-dimensional dual solve behind the FTRL argmin. The dual
// variable nu is the multiplier of the simplex normalization constraint;
// stationarity gives x_i = lambda^2 / (4 (L_i + nu)^2) with L_i + nu > 0.
struct DualSolveResult {
  SimplexPoint iterate;
  double dual_variable;
  double residual;    // |sum(x) - 1| at exit
  int iterations;
};

namespace detail {

// phi(nu) = sum_i (lambda / (2 (L_i + nu)))^2 - 1 on shifted losses
// (min L = 0). Strictly decreasing and convex on (0, inf).
inline double dual_gap(const std::vector<double>& shifted, double lambda, double nu) {
  double sum = 0.0;
  for (double l : shifted) {
    const double s = lambda / (2.0 * (l + nu));
    sum += s * s;
  }
  return sum - 1.0;
}

inline double dual_gap_derivative(const std::vector<double>& shifted, double lambda, double nu) {
  double sum = 0.0;
  for (double l : shifted) {
    const double denom = l + nu;
    sum += 1.0 / (denom * denom * denom);
  }
  return -0.5 * lambda * lambda * sum;
}

}  // namespace detail

// Minimizes <L, x> - lambda * sum_i sqrt(x_i) over the probability simplex.
//
// The stationarity conditions invert to x_i(nu) = lambda^2/(4 (L_i + nu)^2),
// so the constrained problem reduces to the monotone scalar equation
// sum_i x_i(nu) = 1. Losses are shifted by min L first (the argmin is
// translation invariant; the dual variable shifts back by -min L), which
// keeps the solve conditioned when cumulative estimates grow large.
inline DualSolveResult ftrl_argmin(const std::vector<double>& losses, double lambda) {
  const int d = static_cast<int>(losses.size());
  if (d < 1) throw std::invalid_argument("ftrl_argmin: d must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("ftrl_argmin: lambda must be positive and finite");
  for (double l : losses)
    if (!std::isfinite(l)) throw std::invalid_argument("ftrl_argmin: losses must be finite");

  const double min_loss = *std::min_element(losses.begin(), losses.end());
  if (d == 1) {
    // The simplex is a single point; nu keeps the stationarity identity.
    return DualSolveResult{SimplexPoint(std::vector<double>{1.0}), 0.5 * lambda - losses[0],
                           0.0, 0};
  }

  std::vector<double> shifted(losses.size());
  for (std::size_t i = 0; i < losses.size(); ++i) shifted[i] = losses[i] - min_loss;

  double lo = 1e-3 * lambda;
  double hi = 0.5 * lambda * std::sqrt(static_cast<double>(d));
  double gap_lo = detail::dual_gap(shifted, lambda, lo);
  double gap_hi = detail::dual_gap(shifted, lambda, hi);
  int expansions = 0;
  while (gap_lo < 0.0 && expansions < 64) {
    lo *= 0.5;
    gap_lo = detail::dual_gap(shifted, lambda, lo);
    ++expansions;
  }
  while (gap_hi > kDualResidualTolerance && expansions < 64) {
    hi *= 2.0;
    gap_hi = detail::dual_gap(shifted, lambda, hi);
    ++expansions;
  }
  if (gap_lo < 0.0 || gap_hi > kDualResidualTolerance)
    throw NumericalError("ftrl_argmin: failed to bracket the dual root");

  // Safeguarded Newton on phi. phi is convex and decreasing, so from the
  // phi >= 0 side the Newton iterates increase monotonically toward the
  // root; the bracket catches floating-point strays.
  double nu = std::max(lo, 0.5 * lambda);  // root always satisfies nu >= lambda/2
  nu = std::min(nu, hi);
  double gap = detail::dual_gap(shifted, lambda, nu);
  int iterations = 0;
  while (std::abs(gap) > kDualResidualTolerance) {
    if (++iterations > kDualSolveIterationCap)
      throw NumericalError("ftrl_argmin: dual root-find did not converge in " +
                           std::to_string(kDualSolveIterationCap) +
                           " iterations (residual " + std::to_string(gap) + ")");
    if (gap > 0.0)
      lo = nu;
    else
      hi = nu;
    const double slope = detail::dual_gap_derivative(shifted, lambda, nu);
    double next = nu - gap / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    nu = next;
    gap = detail::dual_gap(shifted, lambda, nu);
  }

  std::vector<double> x(losses.size());
  for (std::size_t i = 0; i < losses.size(); ++i) {
    const double s = lambda / (2.0 * (shifted[i] + nu));
    x[i] = s * s;
  }
  return DualSolveResult{SimplexPoint(std::move(x)), nu - min_loss, std::abs(gap), iterations};
}

/// Adds the round's estimate into the cumulative sum and advances the round.
inline FtrlState ftrl_update(FtrlState state, const EstimateVector& estimate) {
  if (estimate.dim() != state.dim())
    throw std::invalid_argument("ftrl_update: dimension mismatch");
  for (std::size_t i = 0; i < state.cumulative_estimates.size(); ++i) {
    if (estimate.values[i] < 0.0)
      throw std::invalid_argument("ftrl_update: estimates must be nonnegative");
    state.cumulative_estimates[i] += estimate.values[i];
  }
  state.round += 1;
  return state;
}

/// The distribution played at round state.round.
inline SimplexPoint next_iterate(const FtrlState& state) {
  return ftrl_argmin(state.cumulative_estimates, lambda_schedule(state.round, state.scale))
      .iterate;
}

// Spread of the stationarity quantity L_i - lambda/(2 sqrt(x_i)), which is
// constant (= -nu) at the optimum.
inline double kkt_residual(const SimplexPoint& x, const std::vector<double>& losses,
                           double lambda) {
  if (static_cast<int>(losses.size()) != x.dim())
    throw std::invalid_argument("kkt_residual: dimension mismatch");
  if (!(lambda > 0.0)) throw std::invalid_argument("kkt_residual: lambda must be > 0");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] <= 0.0)
      throw std::invalid_argument("kkt_residual: point must be strictly interior");
    const double s = losses[static_cast<std::size_t>(i)] - lambda / (2.0 * std::sqrt(x[i]));
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

}  // namespace tsallis_inf
