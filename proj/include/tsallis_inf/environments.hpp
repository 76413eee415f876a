#pragma once

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "tsallis_inf/rng.hpp"
#include "tsallis_inf/types.hpp"

namespace tsallis_inf {

// Supported per-arm loss distributions. Restricted to families with
// closed-form means so GapProfile never needs estimation.
struct BernoulliArm {
  double p = 0.5;  // loss is G with probability p, else 0
};
struct UniformArm {
  double lo = 0.0, hi = 1.0;  // uniform on [lo, hi], which must sit inside [0, G]
};
struct ConstantArm {
  double value = 0.0;
};

using ArmDistribution = std::variant<BernoulliArm, UniformArm, ConstantArm>;

// I.i.d. per-arm loss distributions with their derived gap profile.
class StochasticSpec {
 public:
  StochasticSpec(std::vector<ArmDistribution> arms, double scale_g)
      : arms_(std::move(arms)), scale_g_(scale_g) {
    if (arms_.empty()) throw std::invalid_argument("StochasticSpec: needs at least one arm");
    if (!(scale_g_ > 0.0)) throw std::invalid_argument("StochasticSpec: G must be > 0");
    for (std::size_t i = 0; i < arms_.size(); ++i) validate_arm(arms_[i], i);
  }

  int arms() const { return static_cast<int>(arms_.size()); }
  double scale_g() const { return scale_g_; }
  const std::vector<ArmDistribution>& distributions() const { return arms_; }

  double mean(int arm) const {
    const ArmDistribution& a = arms_[static_cast<std::size_t>(arm)];
    if (const auto* b = std::get_if<BernoulliArm>(&a)) return b->p * scale_g_;
    if (const auto* u = std::get_if<UniformArm>(&a)) return 0.5 * (u->lo + u->hi);
    return std::get<ConstantArm>(a).value;
  }

  GapProfile gap_profile() const {
    std::vector<double> means;
    means.reserve(arms_.size());
    for (int i = 0; i < arms(); ++i) means.push_back(mean(i));
    return GapProfile(std::move(means));
  }

  double sample_arm(int arm, Rng& rng) const {
    const ArmDistribution& a = arms_[static_cast<std::size_t>(arm)];
    if (const auto* b = std::get_if<BernoulliArm>(&a))
      return std::bernoulli_distribution(b->p)(rng) ? scale_g_ : 0.0;
    if (const auto* u = std::get_if<UniformArm>(&a))
      return std::uniform_real_distribution<double>(u->lo, u->hi)(rng);
    return std::get<ConstantArm>(a).value;
  }

 private:
  void validate_arm(const ArmDistribution& a, std::size_t index) const {
    const std::string where = "StochasticSpec arm " + std::to_string(index + 1) + ": ";
    if (const auto* b = std::get_if<BernoulliArm>(&a)) {
      if (!(b->p >= 0.0 && b->p <= 1.0))
        throw std::invalid_argument(where + "Bernoulli p must be in [0, 1]");
    } else if (const auto* u = std::get_if<UniformArm>(&a)) {
      if (!(u->lo <= u->hi) || u->lo < 0.0 || u->hi > scale_g_)
        throw std::invalid_argument(where + "uniform support must sit inside [0, G]");
    } else {
      const double v = std::get<ConstantArm>(a).value;
      if (!(v >= 0.0 && v <= scale_g_))
        throw std::invalid_argument(where + "constant must be in [0, G]");
    }
  }

  std::vector<ArmDistribution> arms_;
  double scale_g_;
};

/// One i.i.d. round: each coordinate drawn independently from its arm law.
inline LossVector sample_stochastic_round(const StochasticSpec& spec, Rng& rng) {
  LossVector out;
  out.values.reserve(static_cast<std::size_t>(spec.arms()));
  for (int i = 0; i < spec.arms(); ++i) out.values.push_back(spec.sample_arm(i, rng));
  return out;
}

struct LossMatrix {
  std::vector<std::vector<double>> rows;  // T rows of d entries
};

// Adaptive generator: the historically least-pulled arm gets loss 0, every
// other arm gets G. Ties break toward the lowest arm index.
struct WorstArmSwitching {
  int arms = 2;
};

// Either a fixed T x d loss matrix or a named adaptive generator. Generators
// see past arm choices only, never the current round's distribution.
class AdversarialSpec {
 public:
  AdversarialSpec(LossMatrix matrix, double scale_g)
      : payload_(std::move(matrix)), scale_g_(scale_g) {
    const auto& rows = std::get<LossMatrix>(payload_).rows;
    if (rows.empty()) throw std::invalid_argument("AdversarialSpec: matrix has no rounds");
    if (!(scale_g_ > 0.0)) throw std::invalid_argument("AdversarialSpec: G must be > 0");
    const std::size_t d = rows[0].size();
    if (d == 0) throw std::invalid_argument("AdversarialSpec: matrix has no arms");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != d)
        throw std::invalid_argument("AdversarialSpec: ragged row " + std::to_string(r + 1));
      validate_loss_range(rows[r], scale_g_);
    }
  }

  AdversarialSpec(WorstArmSwitching gen, double scale_g) : payload_(gen), scale_g_(scale_g) {
    if (gen.arms < 1) throw std::invalid_argument("AdversarialSpec: arms must be >= 1");
    if (!(scale_g_ > 0.0)) throw std::invalid_argument("AdversarialSpec: G must be > 0");
  }

  int arms() const {
    if (const auto* m = std::get_if<LossMatrix>(&payload_))
      return static_cast<int>(m->rows[0].size());
    return std::get<WorstArmSwitching>(payload_).arms;
  }

  double scale_g() const { return scale_g_; }
  bool is_matrix() const { return std::holds_alternative<LossMatrix>(payload_); }
  long matrix_rounds() const {
    return is_matrix() ? static_cast<long>(std::get<LossMatrix>(payload_).rows.size()) : 0;
  }
  const LossMatrix& matrix() const { return std::get<LossMatrix>(payload_); }

 private:
  friend LossVector adversarial_round(const AdversarialSpec&, const std::vector<int>&);
  std::variant<LossMatrix, WorstArmSwitching> payload_;
  double scale_g_;
};

// Loss vector for round history.size()+1. Matrix mode replays the stored
// row; generator mode reacts to the pull history.
inline LossVector adversarial_round(const AdversarialSpec& spec,
                                    const std::vector<int>& history) {
  if (const auto* m = std::get_if<LossMatrix>(&spec.payload_)) {
    const std::size_t t = history.size();
    if (t >= m->rows.size())
      throw InvalidStateError("adversarial_round: loss matrix exhausted at round " +
                              std::to_string(t + 1));
    return LossVector{m->rows[t]};
  }
  const auto& gen = std::get<WorstArmSwitching>(spec.payload_);
  std::vector<long> pulls(static_cast<std::size_t>(gen.arms), 0);
  for (int arm : history) pulls[static_cast<std::size_t>(arm)] += 1;
  std::size_t least = 0;
  for (std::size_t i = 1; i < pulls.size(); ++i)
    if (pulls[i] < pulls[least]) least = i;  // ties keep the lowest index
  LossVector out;
  out.values.assign(pulls.size(), spec.scale_g());
  out.values[least] = 0.0;
  return out;
}

// Reads a loss matrix from CSV: one row per round, d comma-separated
// decimals, no header. Errors name the offending row/column (1-based).
inline AdversarialSpec load_loss_matrix(const std::string& path, double scale_g) {
  std::ifstream in(path);
  if (!in) throw IngestionError("load_loss_matrix: cannot open '" + path + "'");
  LossMatrix matrix;
  std::string line;
  std::size_t row = 0;
  std::size_t expected_cols = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++row;
    if (line.empty())
      throw IngestionError("load_loss_matrix: empty row " + std::to_string(row));
    std::vector<double> values;
    std::size_t pos = 0;
    std::size_t col = 0;
    while (true) {
      ++col;
      const std::size_t comma = line.find(',', pos);
      const std::string_view field(line.data() + pos,
                                   (comma == std::string::npos ? line.size() : comma) - pos);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size())
        throw IngestionError("load_loss_matrix: parse failure at row " + std::to_string(row) +
                             ", column " + std::to_string(col));
      if (!std::isfinite(v) || v < 0.0 || v > scale_g)
        throw IngestionError("load_loss_matrix: entry out of [0, G] at row " +
                             std::to_string(row) + ", column " + std::to_string(col));
      values.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (expected_cols == 0)
      expected_cols = values.size();
    else if (values.size() != expected_cols)
      throw IngestionError("load_loss_matrix: ragged row " + std::to_string(row) + " (" +
                           std::to_string(values.size()) + " columns, expected " +
                           std::to_string(expected_cols) + ")");
    matrix.rows.push_back(std::move(values));
  }
  if (matrix.rows.empty()) throw IngestionError("load_loss_matrix: no rounds in '" + path + "'");
  return AdversarialSpec(std::move(matrix), scale_g);
}

}  // namespace tsallis_inf
