#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qap/circuit.hpp"
#include "qap/gradient.hpp"
#include "qap/pauli.hpp"
#include "qap/statevector.hpp"

namespace qap {

// |f - y| for a scalar expectation and a +-1 label.
double loss_l2(double expectation_value, double label);

// Negative log likelihood for a two-class probability vector; probabilities
// are clamped to [1e-12, 1 - 1e-12].
double loss_bce(const std::array<double, 2>& probs, int label);

// (e0+e1, e2+e3) through a two-way softmax.
std::array<double, 2> mnist_readout(const std::array<double, 4>& z_expectations);

// 1 - |<0...0|psi>|^2; zero iff the state is |0...0> up to phase.
double identity_cost(const Statevector& state);

// Expectation of `hamiltonian` on circuit(params) applied to `initial`.
double vqe_energy(const ParamCircuit& circuit, std::span<const double> params,
                  const PauliSum& hamiltonian, const Statevector& initial,
                  int shots, std::uint64_t seed);

// --- CostFn implementations -------------------------------------------------

// <psi(params)|O|psi(params)> from a fixed initial state. shots = 0 means the
// exact expectation.
class ExpectationCost : public CostFn {
 public:
  ExpectationCost(ParamCircuit circuit, PauliSum obs, Statevector initial,
                  int shots = 0);

  std::size_t n_params() const override;
  double value(std::span<const double> params, const EvalPoint& at,
               std::vector<double>* chain = nullptr) const override;

 private:
  ParamCircuit circuit_;
  PauliSum obs_;
  Statevector initial_;
  int shots_;
};

// 1 - |<0|psi(params)>|^2. With shots the survival probability is estimated
// by sampling basis states.
class IdentityLearningCost : public CostFn {
 public:
  explicit IdentityLearningCost(ParamCircuit circuit, int shots = 0);

  std::size_t n_params() const override;
  double value(std::span<const double> params, const EvalPoint& at,
               std::vector<double>* chain = nullptr) const override;

 private:
  ParamCircuit circuit_;
  Statevector initial_;
  int shots_;
};

// Mean |f_i - y_i| over a dataset, f_i the expectation of `obs` on the state
// prepared from sample i. Chain factors are sign(f_i - y_i) / M.
class L2BatchCost : public CostFn {
 public:
  L2BatchCost(ParamCircuit circuit, PauliSum obs,
              std::vector<std::vector<double>> features,
              std::vector<int> labels, int shots = 0);

  std::size_t n_params() const override;
  std::uint64_t circuit_runs_per_eval() const override;
  double value(std::span<const double> params, const EvalPoint& at,
               std::vector<double>* chain = nullptr) const override;
  double shift_partial(std::span<const double> params, int slot,
                       std::span<const double> chain,
                       const EvalPoint& base) const override;

 private:
  double sample_expectation(std::size_t i, std::span<const double> params,
                            const EvalPoint& at) const;

  ParamCircuit circuit_;
  PauliSum obs_;
  std::vector<std::vector<double>> features_;
  std::vector<int> labels_;  // in {-1, +1}
  int shots_;
};

// Summed binary cross entropy over the active batch; per sample the four
// <Z_q> readouts are reduced to two class probabilities. Chain factors are
// the d(loss)/d<Z_q> of the softmax cross entropy, four per sample.
class BceBatchCost : public CostFn {
 public:
  BceBatchCost(ParamCircuit circuit, std::vector<std::vector<double>> features,
               std::vector<int> labels, int shots = 0);

  // Restricts evaluation to a subset of samples (mini-batch training). An
  // empty list selects the full dataset.
  void set_batch(std::vector<std::size_t> indices);

  std::size_t n_params() const override;
  std::uint64_t circuit_runs_per_eval() const override;
  double value(std::span<const double> params, const EvalPoint& at,
               std::vector<double>* chain = nullptr) const override;
  double shift_partial(std::span<const double> params, int slot,
                       std::span<const double> chain,
                       const EvalPoint& base) const override;

 private:
  std::array<double, 4> sample_z(std::size_t i, std::span<const double> params,
                                 const EvalPoint& at) const;
  std::size_t batch_size() const;
  std::size_t batch_index(std::size_t b) const;

  ParamCircuit circuit_;
  std::vector<std::vector<double>> features_;
  std::vector<int> labels_;  // in {0, 1}
  std::vector<std::size_t> batch_;
  PauliSum z_obs_[4];
  int shots_;
};

}  // namespace qap
