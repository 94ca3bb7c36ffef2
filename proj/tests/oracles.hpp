#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written the slow, obvious way and shares no
// code with the implementation paths it verifies.

#include <cstdint>
#include <optional>
#include <vector>

#include "qap/pauli.hpp"
#include "qap/prune.hpp"
#include "qap/statevector.hpp"

namespace oracle {

using Mat = std::vector<std::vector<qap::cdouble>>;

Mat kron(const Mat& a, const Mat& b);
Mat pauli_matrix(char p);

// Dense 2^n x 2^n matrix of the Pauli sum assembled by explicit Kronecker
// products. Intended for n <= 3.
Mat pauli_sum_matrix(const qap::PauliSum& obs);

// psi^dagger M psi via the dense matrix.
double dense_expectation(const qap::Statevector& state, const qap::PauliSum& obs);

// Smallest eigenvalue of a dense Hermitian matrix by cyclic Jacobi rotations.
double dense_ground_energy(const Mat& m);

// Brute-force replay of the pruning state machine from a logged gradient
// stream. Thresholds are folded step by step; window accumulators are
// re-derived from the raw history at every event instead of incrementally.
struct PruneReplay {
  std::vector<double> tau;
  std::vector<std::uint8_t> frozen;
  std::vector<qap::PruneEvent> events;
};

PruneReplay replay_prune(std::size_t n_params, int window, std::optional<int> k,
                         const std::vector<std::vector<double>>& grads,
                         const std::vector<std::uint64_t>& event_seeds);

}  // namespace oracle
