#pragma once

#include "qap/pauli.hpp"

namespace qap {

// Ground (minimum) eigenvalue of the dense 2^n x 2^n Hermitian matrix of the
// Pauli sum. Capped at n <= 12.
double exact_diag(const PauliSum& hamiltonian);

}  // namespace qap
