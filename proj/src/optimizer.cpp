#include "qap/optimizer.hpp"

#include <cmath>
#include <string>

#include "qap/errors.hpp"

namespace qap {

Optimizer::Optimizer(OptimizerConfig config, std::size_t n_params)
    : config_(config) {
  if (config_.learning_rate <= 0.0) throw input_error("learning rate must be > 0");
  if (config_.rmsprop_decay <= 0.0 || config_.rmsprop_decay >= 1.0)
    throw input_error("rmsprop decay must lie in (0, 1)");
  if (config_.kind != OptKind::GD) {
    m2_.assign(n_params, 0.0);
    if (config_.kind == OptKind::Adam) m1_.assign(n_params, 0.0);
  }
}

std::vector<double> Optimizer::step(std::span<const double> params,
                                    std::span<const double> grad,
                                    const std::vector<std::uint8_t>& frozen) {
  if (grad.size() != params.size() || frozen.size() != params.size())
    throw input_error("optimizer step: vector length mismatch");
  for (std::size_t k = 0; k < grad.size(); ++k)
    if (!frozen[k] && !std::isfinite(grad[k]))
      throw numeric_error("non-finite gradient component at slot " + std::to_string(k));

  ++t_;
  std::vector<double> next(params.begin(), params.end());
  const double eta = config_.learning_rate;
  switch (config_.kind) {
    case OptKind::GD:
      for (std::size_t k = 0; k < next.size(); ++k)
        if (!frozen[k]) next[k] -= eta * grad[k];
      break;
    case OptKind::RMSProp: {
      const double rho = config_.rmsprop_decay;
      for (std::size_t k = 0; k < next.size(); ++k) {
        if (frozen[k]) continue;
        m2_[k] = rho * m2_[k] + (1.0 - rho) * grad[k] * grad[k];
        next[k] -= eta * grad[k] / (std::sqrt(m2_[k]) + config_.epsilon);
      }
      break;
    }
    case OptKind::Adam: {
      const double b1 = config_.adam_beta1;
      const double b2 = config_.adam_beta2;
      const double corr1 = 1.0 - std::pow(b1, static_cast<double>(t_));
      const double corr2 = 1.0 - std::pow(b2, static_cast<double>(t_));
      for (std::size_t k = 0; k < next.size(); ++k) {
        if (frozen[k]) continue;
        m1_[k] = b1 * m1_[k] + (1.0 - b1) * grad[k];
        m2_[k] = b2 * m2_[k] + (1.0 - b2) * grad[k] * grad[k];
        const double mhat = m1_[k] / corr1;
        const double vhat = m2_[k] / corr2;
        next[k] -= eta * mhat / (std::sqrt(vhat) + config_.epsilon);
      }
      break;
    }
  }
  return next;
}

}  // namespace qap
