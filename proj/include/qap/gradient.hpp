#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace qap {

// Exact first derivative of a circuit expectation: c * (C(t+s) - C(t-s)).
// Every rotation in the supported gate set has a Pauli generator scaled by
// 1/2, for which s = pi/2 and c = 1/2 give the exact derivative.
struct ShiftRule {
  double s = std::numbers::pi / 2.0;
  double c = 0.5;
};
inline constexpr ShiftRule kParamShift{};

// Identifies one cost evaluation inside a training run. Shot seeds derive
// from it, so serial and parallel execution of the per-slot evaluations give
// bit-identical results.
struct EvalPoint {
  std::uint64_t master_seed = 0;
  std::uint64_t step = 0;
  std::int32_t slot = -1;  // parameter slot being shifted; -1 for base evals
  std::int32_t sign = 0;   // shift direction; 0 for base evals
};

// Seed for one concrete sampling stream (e.g. one dataset sample) under `at`.
std::uint64_t eval_seed(const EvalPoint& at, std::uint64_t stream);

// A cost C(params) whose derivative is obtained by applying the shift rule to
// the underlying circuit expectations. Costs that are affine in a single
// expectation use the default shift_partial; composite losses (L2 over a
// batch, cross entropy over a readout) override it and chain the shift-rule
// derivative of each expectation through the loss analytically.
class CostFn {
 public:
  virtual ~CostFn() = default;

  virtual std::size_t n_params() const = 0;

  // Circuit executions performed by a single evaluation (batch size for
  // dataset losses, 1 otherwise). Used for evaluation accounting.
  virtual std::uint64_t circuit_runs_per_eval() const { return 1; }

  // Cost at `params`. When `chain` is non-null it receives the
  // d(cost)/d(expectation) factors of the base point; costs with no chaining
  // leave it empty.
  virtual double value(std::span<const double> params, const EvalPoint& at,
                       std::vector<double>* chain = nullptr) const = 0;

  // Exact partial derivative w.r.t. one slot. `chain` must come from value()
  // at the same params. Costs two evaluations.
  virtual double shift_partial(std::span<const double> params, int slot,
                               std::span<const double> chain,
                               const EvalPoint& base) const;
};

struct GradResult {
  std::vector<double> grad;       // frozen components are exactly 0
  std::uint64_t evals_used = 0;   // 2 per unfrozen component
};

struct BaseEval {
  double cost = 0.0;
  std::vector<double> chain;
};

// One base evaluation of the cost, capturing the chain factors.
BaseEval evaluate(const CostFn& cost, std::span<const double> params,
                  const EvalPoint& base);

// Shift-rule gradient. Frozen slots get gradient 0 and consume no
// evaluations. `base_eval` must come from evaluate() at the same params.
GradResult param_shift_grad(const CostFn& cost, std::span<const double> params,
                            const std::vector<std::uint8_t>& frozen,
                            const EvalPoint& base, const BaseEval& base_eval);

// Convenience overload that performs the base evaluation itself.
GradResult param_shift_grad(const CostFn& cost, std::span<const double> params,
                            const std::vector<std::uint8_t>& frozen,
                            const EvalPoint& base);

// Central-difference oracle, (C(t+h e_k) - C(t-h e_k)) / 2h per component.
// Independent of the shift-rule path; used to cross-check it.
std::vector<double> finite_diff_grad(const CostFn& cost,
                                     std::span<const double> params, double h,
                                     const EvalPoint& base);

}  // namespace qap
