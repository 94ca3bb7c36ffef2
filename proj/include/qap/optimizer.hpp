#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qap {

enum class OptKind { GD, RMSProp, Adam };

struct OptimizerConfig {
  OptKind kind = OptKind::GD;
  double learning_rate = 0.1;
  double rmsprop_decay = 0.9;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double epsilon = 1e-8;
};

// Coordinate-wise first-order optimizer with freeze-mask support. Frozen
// slots are returned bit-identical and their moment accumulators stop
// updating.
class Optimizer {
 public:
  Optimizer(OptimizerConfig config, std::size_t n_params);

  std::vector<double> step(std::span<const double> params,
                           std::span<const double> grad,
                           const std::vector<std::uint8_t>& frozen);

  long step_count() const { return t_; }
  const OptimizerConfig& config() const { return config_; }

 private:
  OptimizerConfig config_;
  std::vector<double> m1_;  // Adam first moment
  std::vector<double> m2_;  // Adam second moment / RMSProp squared average
  long t_ = 0;
};

}  // namespace qap
