#pragma once

#include "tsallis_inf/core.hpp"
#include "tsallis_inf/solver.hpp"
#include "tsallis_inf/types.hpp"

namespace tsallis_inf {

// The FTRL learner with the Tsallis-1/2 regularizer and schedule 4G*sqrt(t).
//
// Bandit feedback is enforced by the interface: observe() takes the single
// scalar loss of the pulled arm, never the full loss vector.
class TsallisInfPolicy {
 public:
  TsallisInfPolicy(int arms, double scale_g)
      : state_(arms, scale_g), cached_(SimplexPoint::uniform(arms)), cache_valid_(false) {}

  int arms() const { return state_.dim(); }
  long round() const { return state_.round; }
  const FtrlState& state() const { return state_; }

  // Distribution played this round; solved once and cached until observe().
  const SimplexPoint& distribution() {
    if (!cache_valid_) {
      cached_ = next_iterate(state_);
      cache_valid_ = true;
    }
    return cached_;
  }

  // Consumes the observed loss of the pulled arm; returns the importance
  // weighted estimate that entered the cumulative sum.
  EstimateVector observe(int arm, double loss) {
    EstimateVector estimate = importance_weighted_estimate(loss, arm, distribution());
    state_ = ftrl_update(std::move(state_), estimate);
    cache_valid_ = false;
    return estimate;
  }

 private:
  FtrlState state_;
  SimplexPoint cached_;
  bool cache_valid_;
};

// Sanity baseline: plays the uniform distribution every round. Same surface
// as TsallisInfPolicy so the harness episode loop is shared.
class UniformPolicy {
 public:
  UniformPolicy(int arms, double /*scale_g*/) : uniform_(SimplexPoint::uniform(arms)) {}

  int arms() const { return uniform_.dim(); }
  const SimplexPoint& distribution() { return uniform_; }

  EstimateVector observe(int arm, double loss) {
    return importance_weighted_estimate(loss, arm, uniform_);
  }

 private:
  SimplexPoint uniform_;
};

}  // namespace tsallis_inf
