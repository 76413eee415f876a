#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "tsallis_inf/rng.hpp"
#include "tsallis_inf/types.hpp"

namespace tsallis_inf {

/// Regularizer weight at round t: 4 * G * sqrt(t).
inline double lambda_schedule(long t, double scale_g) {
  if (t < 1) throw std::invalid_argument("lambda_schedule: t must be >= 1");
  if (!(scale_g > 0.0)) throw std::invalid_argument("lambda_schedule: G must be > 0");
  return 4.0 * scale_g * std::sqrt(static_cast<double>(t));
}

/// The Tsallis-1/2 potential -sum_i sqrt(x_i); ranges in [-sqrt(d), -1].
inline double tsallis_potential(const SimplexPoint& x) {
  double sum = 0.0;
  for (double w : x.weights()) sum += std::sqrt(w);
  return -sum;
}

// Importance-weighted estimate of the full loss vector from the single
// observed coordinate: loss/x at the chosen arm, zero elsewhere. Unbiased
// under arm ~ x.
inline EstimateVector importance_weighted_estimate(double loss_of_chosen, int chosen_arm,
                                                   const SimplexPoint& x) {
  if (chosen_arm < 0 || chosen_arm >= x.dim())
    throw std::invalid_argument("importance_weighted_estimate: arm index out of range");
  if (!(loss_of_chosen >= 0.0) || !std::isfinite(loss_of_chosen))
    throw std::invalid_argument("importance_weighted_estimate: loss must be finite and >= 0");
  const double prob = x[chosen_arm];
  if (prob == 0.0)
    throw std::domain_error(
        "importance_weighted_estimate: division by zero (chosen arm has probability 0)");
  EstimateVector est;
  est.values.assign(static_cast<std::size_t>(x.dim()), 0.0);
  est.values[static_cast<std::size_t>(chosen_arm)] = loss_of_chosen / prob;
  est.chosen_arm = chosen_arm;
  return est;
}

// Draws an arm index with Pr{arm = i} = x_i by inverse CDF. Mutates the rng;
// deterministic given its state. Arms with zero weight are never returned.
inline int draw_arm(const SimplexPoint& x, Rng& rng) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double cumulative = 0.0;
  int last_positive = 0;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] > 0.0) last_positive = i;
    cumulative += x[i];
    if (u < cumulative && x[i] > 0.0) return i;
  }
  // u landed past the accumulated sum (float roundoff); return the last arm
  // with positive mass.
  return last_positive;
}

/// Per-run pseudo-regret realization: sum_i pulls[i] * gap[i].
inline double pseudo_regret_from_pulls(const std::vector<long>& pull_counts,
                                       const GapProfile& profile) {
  if (static_cast<int>(pull_counts.size()) != profile.dim())
    throw std::invalid_argument("pseudo_regret_from_pulls: length mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < pull_counts.size(); ++i)
    total += static_cast<double>(pull_counts[i]) * profile.gaps()[i];
  return total;
}

// Incurred cumulative loss minus the best fixed arm in hindsight. Can be
// negative for a lucky run.
inline double realized_regret(const Trajectory& trajectory) {
  if (!trajectory.completed())
    throw InvalidStateError("realized_regret: trajectory incomplete (" +
                            std::to_string(trajectory.rounds_recorded()) + " of " +
                            std::to_string(trajectory.horizon()) + " rounds)");
  const int d = trajectory.arms();
  std::vector<double> per_arm(static_cast<std::size_t>(d), 0.0);
  double incurred = 0.0;
  for (long t = 0; t < trajectory.horizon(); ++t) {
    const RoundRecord& rec = trajectory.round(t);
    incurred += rec.true_losses.values[static_cast<std::size_t>(rec.arm)];
    for (int i = 0; i < d; ++i) per_arm[static_cast<std::size_t>(i)] += rec.true_losses.values[static_cast<std::size_t>(i)];
  }
  double best = per_arm[0];
  for (double v : per_arm) best = std::min(best, v);
  return incurred - best;
}

}  // namespace tsallis_inf
