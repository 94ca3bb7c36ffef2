#include "qap/gradient.hpp"

#include <cmath>
#include <string>

#include "qap/errors.hpp"
#include "qap/rng.hpp"

namespace qap {

std::uint64_t eval_seed(const EvalPoint& at, std::uint64_t stream) {
  return mix_seed({at.master_seed, 0x5e5eull, at.step,
                   static_cast<std::uint64_t>(at.slot + 2),
                   static_cast<std::uint64_t>(at.sign + 2), stream});
}

double CostFn::shift_partial(std::span<const double> params, int slot,
                             std::span<const double> /*chain*/,
                             const EvalPoint& base) const {
  std::vector<double> shifted(params.begin(), params.end());
  EvalPoint up = base;
  up.slot = slot;
  up.sign = +1;
  EvalPoint down = base;
  down.slot = slot;
  down.sign = -1;
  shifted[slot] = params[slot] + kParamShift.s;
  const double plus = value(shifted, up);
  shifted[slot] = params[slot] - kParamShift.s;
  const double minus = value(shifted, down);
  return kParamShift.c * (plus - minus);
}

BaseEval evaluate(const CostFn& cost, std::span<const double> params,
                  const EvalPoint& base) {
  BaseEval out;
  out.cost = cost.value(params, base, &out.chain);
  if (!std::isfinite(out.cost)) throw numeric_error("non-finite cost value");
  return out;
}

GradResult param_shift_grad(const CostFn& cost, std::span<const double> params,
                            const std::vector<std::uint8_t>& frozen,
                            const EvalPoint& base, const BaseEval& base_eval) {
  if (params.size() != cost.n_params())
    throw input_error("param count does not match cost");
  if (frozen.size() != params.size())
    throw input_error("freeze mask length does not match params");
  GradResult out;
  out.grad.assign(params.size(), 0.0);
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (frozen[k]) continue;
    const double g =
        cost.shift_partial(params, static_cast<int>(k), base_eval.chain, base);
    if (!std::isfinite(g))
      throw numeric_error("non-finite gradient at slot " + std::to_string(k));
    out.grad[k] = g;
    out.evals_used += 2;
  }
  return out;
}

GradResult param_shift_grad(const CostFn& cost, std::span<const double> params,
                            const std::vector<std::uint8_t>& frozen,
                            const EvalPoint& base) {
  return param_shift_grad(cost, params, frozen, base, evaluate(cost, params, base));
}

std::vector<double> finite_diff_grad(const CostFn& cost,
                                     std::span<const double> params, double h,
                                     const EvalPoint& base) {
  if (h <= 0.0) throw input_error("finite-difference step must be positive");
  std::vector<double> grad(params.size(), 0.0);
  std::vector<double> shifted(params.begin(), params.end());
  for (std::size_t k = 0; k < params.size(); ++k) {
    EvalPoint up = base;
    up.slot = static_cast<std::int32_t>(k);
    up.sign = +1;
    EvalPoint down = up;
    down.sign = -1;
    shifted[k] = params[k] + h;
    const double plus = cost.value(shifted, up);
    shifted[k] = params[k] - h;
    const double minus = cost.value(shifted, down);
    shifted[k] = params[k];
    grad[k] = (plus - minus) / (2.0 * h);
    if (!std::isfinite(grad[k]))
      throw numeric_error("non-finite finite-difference at slot " + std::to_string(k));
  }
  return grad;
}

}  // namespace qap
