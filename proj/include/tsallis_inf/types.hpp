#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tsallis_inf {

// Thrown when an iterative routine fails to converge. Callers must never
// see a silent best-effort result instead of this.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is called on an object in the wrong state
// (incomplete trajectory, exhausted loss matrix, ...).
class InvalidStateError : public std::logic_error {
 public:
  explicit InvalidStateError(const std::string& what) : std::logic_error(what) {}
};

// Thrown by file ingestion; the message names the offending row/column.
class IngestionError : public std::runtime_error {
 public:
  explicit IngestionError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a documented precondition is violated at runtime (e.g. a
// nonpositive denominator in the closed-form step).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a bound or check does not apply to the given inputs
// (e.g. stochastic bound with a non-unique best arm).
class NotApplicableError : public std::invalid_argument {
 public:
  explicit NotApplicableError(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr double kSimplexSumTolerance = 1e-10;

// A probability distribution over d arms. Weights are validated on
// construction: nonnegative, summing to one within 1e-10.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("SimplexPoint: d must be >= 1");
    double sum = 0.0;
    for (double w : weights_) {
      if (!(w >= 0.0) || !std::isfinite(w))
        throw std::invalid_argument("SimplexPoint: weights must be finite and >= 0");
      sum += w;
    }
    if (std::abs(sum - 1.0) > kSimplexSumTolerance)
      throw std::invalid_argument("SimplexPoint: weights must sum to 1 (got " +
                                  std::to_string(sum) + ")");
  }

  static SimplexPoint uniform(int d) {
    if (d < 1) throw std::invalid_argument("SimplexPoint::uniform: d must be >= 1");
    return SimplexPoint(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d));
  }

  int dim() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& weights() const { return weights_; }

  double min_weight() const {
    double m = weights_[0];
    for (double w : weights_) m = std::min(m, w);
    return m;
  }

 private:
  std::vector<double> weights_;
};

// Per-arm losses for one round. Range validation against the scale G is done
// by the producer (environment or loader), which knows G.
struct LossVector {
  std::vector<double> values;

  int dim() const { return static_cast<int>(values.size()); }
};

inline void validate_loss_range(const std::vector<double>& values, double scale_g) {
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0 || v > scale_g)
      throw std::invalid_argument("loss out of range [0, G]");
  }
}

// Importance-weighted loss estimate: zero everywhere except (at most) the
// chosen arm.
struct EstimateVector {
  std::vector<double> values;
  int chosen_arm = 0;

  int dim() const { return static_cast<int>(values.size()); }
};

// Cumulative estimated losses plus the round counter and the loss scale G.
struct FtrlState {
  std::vector<double> cumulative_estimates;
  long round = 1;
  double scale = 1.0;

  FtrlState(int arms, double scale_g)
      : cumulative_estimates(static_cast<std::size_t>(arms), 0.0), round(1), scale(scale_g) {
    if (arms < 1) throw std::invalid_argument("FtrlState: arms must be >= 1");
    if (!(scale_g > 0.0)) throw std::invalid_argument("FtrlState: scale G must be > 0");
  }

  int dim() const { return static_cast<int>(cumulative_estimates.size()); }
};

struct RoundRecord {
  SimplexPoint iterate;
  int arm;
  LossVector true_losses;
  EstimateVector estimate;
};

// Full record of one episode. pull_counts always sums to the number of
// recorded rounds.
class Trajectory {
 public:
  Trajectory(int arms, long horizon) : pull_counts_(static_cast<std::size_t>(arms), 0), horizon_(horizon) {
    if (arms < 1) throw std::invalid_argument("Trajectory: arms must be >= 1");
    if (horizon < 1) throw std::invalid_argument("Trajectory: horizon must be >= 1");
    rounds_.reserve(static_cast<std::size_t>(horizon));
  }

  void push_round(RoundRecord record) {
    if (static_cast<long>(rounds_.size()) >= horizon_)
      throw InvalidStateError("Trajectory: horizon exceeded");
    pull_counts_[static_cast<std::size_t>(record.arm)] += 1;
    rounds_.push_back(std::move(record));
  }

  bool completed() const { return static_cast<long>(rounds_.size()) == horizon_; }
  long rounds_recorded() const { return static_cast<long>(rounds_.size()); }
  long horizon() const { return horizon_; }
  int arms() const { return static_cast<int>(pull_counts_.size()); }
  const std::vector<long>& pull_counts() const { return pull_counts_; }
  const RoundRecord& round(long t) const { return rounds_[static_cast<std::size_t>(t)]; }

 private:
  std::vector<RoundRecord> rounds_;
  std::vector<long> pull_counts_;
  long horizon_;
};

// Arm means with derived suboptimality gaps.
class GapProfile {
 public:
  explicit GapProfile(std::vector<double> means) : means_(std::move(means)) {
    if (means_.empty()) throw std::invalid_argument("GapProfile: d must be >= 1");
    best_mean_ = means_[0];
    for (double m : means_) {
      if (!std::isfinite(m)) throw std::invalid_argument("GapProfile: means must be finite");
      best_mean_ = std::min(best_mean_, m);
    }
    gaps_.reserve(means_.size());
    for (double m : means_) gaps_.push_back(m - best_mean_);
  }

  int dim() const { return static_cast<int>(means_.size()); }
  const std::vector<double>& means() const { return means_; }
  const std::vector<double>& gaps() const { return gaps_; }
  double best_mean() const { return best_mean_; }

  // True when exactly one arm attains the best mean; the logarithmic bound
  // only applies in that case.
  bool unique_best() const {
    int zeros = 0;
    for (double g : gaps_)
      if (g == 0.0) ++zeros;
    return zeros == 1;
  }

 private:
  std::vector<double> means_;
  std::vector<double> gaps_;
  double best_mean_ = 0.0;
};

}  // namespace tsallis_inf
