#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qap {

struct PruneConfig {
  int window = 5;          // optimizer steps between pruning events
  std::optional<int> k;    // max slots frozen per event; absent = all salient
  bool enabled = true;
};

// Emitted at a window boundary. frozen_now lists the slots frozen at this
// event; tau/accum are snapshots taken just before the buffer reset.
struct PruneEvent {
  long step = 0;
  std::vector<int> saliency;
  std::vector<int> frozen_now;
  std::vector<double> tau;
  std::vector<double> accum;
};

// Adaptive pruning state machine, run as a co-routine around an optimizer
// loop. Per-slot thresholds start at 1/n and shrink with each observed
// gradient; a buffer accumulates |grad_t - grad_{t-1}| per slot over a window
// of steps. At each window boundary the slots whose accumulated difference
// fell below their threshold are frozen at their current value and excluded
// from every later gradient computation and update. Frozen slots never thaw.
class PruneState {
 public:
  PruneState(std::size_t n_params, PruneConfig config);

  // Feed the gradient the optimizer will consume this step, once per step.
  // Returns an event at window boundaries (while any slot is still live).
  // `event_seed` drives the k-subset selection and is only read at events.
  std::optional<PruneEvent> observe(std::span<const double> grad,
                                    std::span<const double> params,
                                    std::uint64_t event_seed);

  // tau_j <- max(0, tau_j * (1 - |grad_j|)) for live slots; frozen slots keep
  // their threshold. Called by observe() every step.
  void update_thresholds(std::span<const double> grad);

  // Re-pins frozen slots to the value they were frozen at.
  std::vector<double> apply_freeze(std::span<const double> params) const;

  double pruning_ratio() const;

  std::size_t n_params() const { return tau_.size(); }
  std::size_t n_frozen() const { return n_frozen_; }
  bool all_frozen() const { return n_frozen_ == tau_.size(); }
  long step_count() const { return t_; }
  long kappa() const { return kappa_; }
  bool enabled() const { return config_.enabled; }
  const PruneConfig& config() const { return config_; }
  const std::vector<double>& tau() const { return tau_; }
  const std::vector<double>& accum() const { return accum_; }
  const std::vector<double>& last_grad() const { return last_grad_; }
  const std::vector<std::uint8_t>& frozen() const { return frozen_; }
  const std::vector<double>& frozen_values() const { return frozen_values_; }

 private:
  PruneConfig config_;
  std::vector<double> tau_;
  std::vector<double> accum_;
  std::vector<double> last_grad_;
  std::vector<std::uint8_t> frozen_;
  std::vector<double> frozen_values_;
  std::size_t n_frozen_ = 0;
  long kappa_ = 0;
  long t_ = 0;
};

// Uniform sample of `k` distinct entries of `pool`, Fisher-Yates order.
std::vector<int> sample_without_replacement(const std::vector<int>& pool,
                                            std::size_t k, std::uint64_t seed);

}  // namespace qap
