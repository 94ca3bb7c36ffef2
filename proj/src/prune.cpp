#include "qap/prune.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qap/errors.hpp"
#include "qap/rng.hpp"

namespace qap {

PruneState::PruneState(std::size_t n_params, PruneConfig config)
    : config_(config) {
  if (n_params < 1) throw input_error("prune state needs n_params >= 1");
  if (config_.window < 1) throw input_error("prune window must be >= 1");
  if (config_.k && *config_.k < 1) throw input_error("prune k must be >= 1");
  const double tau0 = 1.0 / static_cast<double>(n_params);
  tau_.assign(n_params, tau0);
  accum_.assign(n_params, 0.0);
  last_grad_.assign(n_params, 0.0);
  frozen_.assign(n_params, 0);
  frozen_values_.assign(n_params, 0.0);
}

void PruneState::update_thresholds(std::span<const double> grad) {
  if (grad.size() != tau_.size())
    throw input_error("update_thresholds: gradient length mismatch");
  for (std::size_t j = 0; j < tau_.size(); ++j) {
    if (frozen_[j]) continue;
    if (!std::isfinite(grad[j]))
      throw numeric_error("non-finite gradient in threshold update at slot " +
                          std::to_string(j));
    tau_[j] = std::max(0.0, tau_[j] * (1.0 - std::abs(grad[j])));
  }
}

std::vector<int> sample_without_replacement(const std::vector<int>& pool,
                                            std::size_t k,
                                            std::uint64_t seed) {
  std::vector<int> scratch = pool;
  if (k > scratch.size()) k = scratch.size();
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(scratch.size() - i));
    std::swap(scratch[i], scratch[j]);
  }
  scratch.resize(k);
  std::sort(scratch.begin(), scratch.end());
  return scratch;
}

std::optional<PruneEvent> PruneState::observe(std::span<const double> grad,
                                              std::span<const double> params,
                                              std::uint64_t event_seed) {
  if (!config_.enabled) return std::nullopt;
  if (grad.size() != tau_.size())
    throw input_error("observe: gradient length mismatch");
  if (params.size() != tau_.size())
    throw input_error("observe: params length mismatch");

  // The first step only records the gradient; a difference needs two.
  if (t_ > 0) {
    for (std::size_t j = 0; j < tau_.size(); ++j)
      if (!frozen_[j]) accum_[j] += std::abs(grad[j] - last_grad_[j]);
  }
  for (std::size_t j = 0; j < tau_.size(); ++j)
    if (!frozen_[j]) last_grad_[j] = grad[j];

  update_thresholds(grad);

  std::optional<PruneEvent> event;
  if (t_ > 0 && t_ % config_.window == 0 && !all_frozen()) {
    PruneEvent ev;
    ev.step = t_;
    ev.tau = tau_;
    ev.accum = accum_;
    for (std::size_t j = 0; j < tau_.size(); ++j)
      if (!frozen_[j] && accum_[j] < tau_[j])
        ev.saliency.push_back(static_cast<int>(j));

    if (config_.k && static_cast<std::size_t>(*config_.k) < ev.saliency.size())
      ev.frozen_now = sample_without_replacement(
          ev.saliency, static_cast<std::size_t>(*config_.k), event_seed);
    else
      ev.frozen_now = ev.saliency;

    for (int j : ev.frozen_now) {
      frozen_[j] = 1;
      frozen_values_[j] = params[j];
      accum_[j] = 0.0;
      ++n_frozen_;
    }
    // Buffer restarts from this step's gradient.
    for (std::size_t j = 0; j < tau_.size(); ++j)
      if (!frozen_[j]) accum_[j] = 0.0;
    ++kappa_;
    event = std::move(ev);
  }

  ++t_;
  return event;
}

std::vector<double> PruneState::apply_freeze(std::span<const double> params) const {
  if (params.size() != tau_.size())
    throw input_error("apply_freeze: params length mismatch");
  std::vector<double> pinned(params.begin(), params.end());
  for (std::size_t j = 0; j < tau_.size(); ++j)
    if (frozen_[j]) pinned[j] = frozen_values_[j];
  return pinned;
}

double PruneState::pruning_ratio() const {
  return static_cast<double>(n_frozen_) / static_cast<double>(tau_.size());
}

}  // namespace qap
