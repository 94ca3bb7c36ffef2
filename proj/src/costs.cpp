#include "qap/costs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qap/errors.hpp"
#include "qap/rng.hpp"

namespace qap {

double loss_l2(double expectation_value, double label) {
  if (label != 1.0 && label != -1.0)
    throw input_error("L2 loss expects labels in {-1, +1}");
  return std::abs(expectation_value - label);
}

double loss_bce(const std::array<double, 2>& probs, int label) {
  if (label != 0 && label != 1) throw input_error("BCE loss expects labels in {0, 1}");
  const double y_hat = std::clamp(probs[1], 1e-12, 1.0 - 1e-12);
  const double y = static_cast<double>(label);
  return -(y * std::log(y_hat) + (1.0 - y) * std::log(1.0 - y_hat));
}

std::array<double, 2> mnist_readout(const std::array<double, 4>& z) {
  const double l0 = z[0] + z[1];
  const double l1 = z[2] + z[3];
  const double m = std::max(l0, l1);
  const double e0 = std::exp(l0 - m);
  const double e1 = std::exp(l1 - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

double identity_cost(const Statevector& state) {
  return 1.0 - std::norm(state.amps[0]);
}

double vqe_energy(const ParamCircuit& circuit, std::span<const double> params,
                  const PauliSum& hamiltonian, const Statevector& initial,
                  int shots, std::uint64_t seed) {
  if (hamiltonian.n_qubits != circuit.n_qubits)
    throw input_error("hamiltonian and circuit qubit counts differ");
  const Statevector state = bind_and_run(circuit, params, {}, initial);
  if (shots == 0) return expectation(state, hamiltonian);
  return sampled_expectation(state, hamiltonian, shots, seed);
}

// --- ExpectationCost ---------------------------------------------------------

ExpectationCost::ExpectationCost(ParamCircuit circuit, PauliSum obs,
                                 Statevector initial, int shots)
    : circuit_(std::move(circuit)),
      obs_(std::move(obs)),
      initial_(std::move(initial)),
      shots_(shots) {
  if (obs_.n_qubits != circuit_.n_qubits)
    throw input_error("observable and circuit qubit counts differ");
  if (shots_ < 0) throw input_error("shots must be >= 0");
}

std::size_t ExpectationCost::n_params() const {
  return static_cast<std::size_t>(circuit_.n_params);
}

double ExpectationCost::value(std::span<const double> params,
                              const EvalPoint& at,
                              std::vector<double>* chain) const {
  if (chain) chain->clear();
  const Statevector state = bind_and_run(circuit_, params, {}, initial_);
  if (shots_ == 0) return expectation(state, obs_);
  return sampled_expectation(state, obs_, shots_, eval_seed(at, 0));
}

// --- IdentityLearningCost ----------------------------------------------------

IdentityLearningCost::IdentityLearningCost(ParamCircuit circuit, int shots)
    : circuit_(std::move(circuit)), shots_(shots) {
  if (shots_ < 0) throw input_error("shots must be >= 0");
  initial_ = init_basis_state(circuit_.n_qubits,
                              std::string(circuit_.n_qubits, '0'));
}

std::size_t IdentityLearningCost::n_params() const {
  return static_cast<std::size_t>(circuit_.n_params);
}

double IdentityLearningCost::value(std::span<const double> params,
                                   const EvalPoint& at,
                                   std::vector<double>* chain) const {
  if (chain) chain->clear();
  const Statevector state = bind_and_run(circuit_, params, {}, initial_);
  if (shots_ == 0) return identity_cost(state);
  // Estimate the survival probability |<0|psi>|^2 from sampled bitstrings.
  const std::size_t dim = state.dim();
  std::vector<double> cum(dim);
  double running = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    running += std::norm(state.amps[i]);
    cum[i] = running;
  }
  Rng rng(eval_seed(at, 0));
  long long hits = 0;
  for (int s = 0; s < shots_; ++s) {
    const double u = rng.uniform01() * running;
    const std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (std::min(idx, dim - 1) == 0) ++hits;
  }
  return 1.0 - static_cast<double>(hits) / shots_;
}

// --- L2BatchCost ---------------------------------------------------------------

L2BatchCost::L2BatchCost(ParamCircuit circuit, PauliSum obs,
                         std::vector<std::vector<double>> features,
                         std::vector<int> labels, int shots)
    : circuit_(std::move(circuit)),
      obs_(std::move(obs)),
      features_(std::move(features)),
      labels_(std::move(labels)),
      shots_(shots) {
  if (features_.empty()) throw input_error("L2 cost needs a non-empty dataset");
  if (features_.size() != labels_.size())
    throw input_error("feature/label count mismatch");
  for (int y : labels_)
    if (y != -1 && y != 1) throw input_error("L2 cost expects labels in {-1, +1}");
  if (shots_ < 0) throw input_error("shots must be >= 0");
}

std::size_t L2BatchCost::n_params() const {
  return static_cast<std::size_t>(circuit_.n_params);
}

std::uint64_t L2BatchCost::circuit_runs_per_eval() const {
  return features_.size();
}

double L2BatchCost::sample_expectation(std::size_t i,
                                       std::span<const double> params,
                                       const EvalPoint& at) const {
  const Statevector initial = init_basis_state(
      circuit_.n_qubits, std::string(circuit_.n_qubits, '0'));
  const Statevector state = bind_and_run(circuit_, params, features_[i], initial);
  if (shots_ == 0) return expectation(state, obs_);
  return sampled_expectation(state, obs_, shots_, eval_seed(at, i + 1));
}

double L2BatchCost::value(std::span<const double> params, const EvalPoint& at,
                          std::vector<double>* chain) const {
  const double m = static_cast<double>(features_.size());
  if (chain) chain->assign(features_.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < features_.size(); ++i) {
    const double f = sample_expectation(i, params, at);
    const double r = f - static_cast<double>(labels_[i]);
    total += std::abs(r);
    if (chain) (*chain)[i] = (r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0)) / m;
  }
  return total / m;
}

double L2BatchCost::shift_partial(std::span<const double> params, int slot,
                                  std::span<const double> chain,
                                  const EvalPoint& base) const {
  if (chain.size() != features_.size())
    throw input_error("L2 shift_partial needs chain factors from a base evaluation");
  std::vector<double> shifted(params.begin(), params.end());
  double sides[2] = {0.0, 0.0};
  const int signs[2] = {+1, -1};
  for (int d = 0; d < 2; ++d) {
    EvalPoint at = base;
    at.slot = slot;
    at.sign = signs[d];
    shifted[slot] = params[slot] + signs[d] * kParamShift.s;
    for (std::size_t i = 0; i < features_.size(); ++i)
      sides[d] += chain[i] * sample_expectation(i, shifted, at);
  }
  return kParamShift.c * (sides[0] - sides[1]);
}

// --- BceBatchCost ----------------------------------------------------------------

BceBatchCost::BceBatchCost(ParamCircuit circuit,
                           std::vector<std::vector<double>> features,
                           std::vector<int> labels, int shots)
    : circuit_(std::move(circuit)),
      features_(std::move(features)),
      labels_(std::move(labels)),
      shots_(shots) {
  if (circuit_.n_qubits != 4) throw input_error("BCE readout cost is fixed at 4 qubits");
  if (features_.empty()) throw input_error("BCE cost needs a non-empty dataset");
  if (features_.size() != labels_.size())
    throw input_error("feature/label count mismatch");
  for (int y : labels_)
    if (y != 0 && y != 1) throw input_error("BCE cost expects labels in {0, 1}");
  if (shots_ < 0) throw input_error("shots must be >= 0");
  for (int q = 0; q < 4; ++q) z_obs_[q] = z_on(4, q);
}

void BceBatchCost::set_batch(std::vector<std::size_t> indices) {
  for (std::size_t i : indices)
    if (i >= features_.size()) throw input_error("batch index out of range");
  batch_ = std::move(indices);
}

std::size_t BceBatchCost::batch_size() const {
  return batch_.empty() ? features_.size() : batch_.size();
}

std::size_t BceBatchCost::batch_index(std::size_t b) const {
  return batch_.empty() ? b : batch_[b];
}

std::size_t BceBatchCost::n_params() const {
  return static_cast<std::size_t>(circuit_.n_params);
}

std::uint64_t BceBatchCost::circuit_runs_per_eval() const { return batch_size(); }

std::array<double, 4> BceBatchCost::sample_z(std::size_t i,
                                             std::span<const double> params,
                                             const EvalPoint& at) const {
  const Statevector initial = init_basis_state(4, "0000");
  const Statevector state = bind_and_run(circuit_, params, features_[i], initial);
  std::array<double, 4> z{};
  if (shots_ == 0) {
    // All four <Z_q> in one pass over the amplitudes.
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
      const double p = std::norm(state.amps[idx]);
      for (int q = 0; q < 4; ++q)
        z[q] += p * (((idx >> (3 - q)) & 1) ? -1.0 : 1.0);
    }
    return z;
  }
  // One sampled bitstring yields all four Z values.
  const std::size_t dim = state.dim();
  std::vector<double> cum(dim);
  double running = 0.0;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    running += std::norm(state.amps[idx]);
    cum[idx] = running;
  }
  Rng rng(eval_seed(at, i + 1));
  std::array<long long, 4> sums{};
  for (int s = 0; s < shots_; ++s) {
    const double u = rng.uniform01() * running;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    idx = std::min(idx, dim - 1);
    for (int q = 0; q < 4; ++q)
      sums[q] += ((idx >> (3 - q)) & 1) ? -1 : 1;
  }
  for (int q = 0; q < 4; ++q)
    z[q] = static_cast<double>(sums[q]) / shots_;
  return z;
}

double BceBatchCost::value(std::span<const double> params, const EvalPoint& at,
                           std::vector<double>* chain) const {
  const std::size_t m = batch_size();
  if (chain) chain->assign(4 * m, 0.0);
  double total = 0.0;
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t i = batch_index(b);
    const std::array<double, 4> z = sample_z(i, params, at);
    const std::array<double, 2> probs = mnist_readout(z);
    const int y = labels_[i];
    total += loss_bce(probs, y);
    if (chain) {
      const double d_l0 = probs[0] - (1.0 - y);
      const double d_l1 = probs[1] - y;
      (*chain)[4 * b + 0] = d_l0;
      (*chain)[4 * b + 1] = d_l0;
      (*chain)[4 * b + 2] = d_l1;
      (*chain)[4 * b + 3] = d_l1;
    }
  }
  return total;
}

double BceBatchCost::shift_partial(std::span<const double> params, int slot,
                                   std::span<const double> chain,
                                   const EvalPoint& base) const {
  const std::size_t m = batch_size();
  if (chain.size() != 4 * m)
    throw input_error("BCE shift_partial needs chain factors from a base evaluation");
  std::vector<double> shifted(params.begin(), params.end());
  double sides[2] = {0.0, 0.0};
  const int signs[2] = {+1, -1};
  for (int d = 0; d < 2; ++d) {
    EvalPoint at = base;
    at.slot = slot;
    at.sign = signs[d];
    shifted[slot] = params[slot] + signs[d] * kParamShift.s;
    for (std::size_t b = 0; b < m; ++b) {
      const std::array<double, 4> z = sample_z(batch_index(b), shifted, at);
      for (int q = 0; q < 4; ++q) sides[d] += chain[4 * b + q] * z[q];
    }
  }
  return kParamShift.c * (sides[0] - sides[1]);
}

}  // namespace qap
