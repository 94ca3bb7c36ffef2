#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qap/statevector.hpp"

namespace qap {

struct PauliTerm {
  double coeff = 0.0;
  std::string paulis;  // over {I,X,Y,Z}; position q addresses qubit q
};

// Weighted sum of Pauli strings; Hermitian observable / Hamiltonian.
struct PauliSum {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
};

// Validates string alphabet, lengths and coefficient finiteness.
PauliSum make_pauli_sum(int n_qubits, std::vector<PauliTerm> terms);

// Single Z on qubit q.
PauliSum z_on(int n_qubits, int q);

// Text format: one `<coefficient> <pauli-string>` per line, `#` starts a
// comment, blank lines ignored. The string length fixes n_qubits.
PauliSum parse_pauli_sum(std::istream& in, const std::string& origin);
PauliSum load_pauli_file(const std::string& path);

// <psi|O|psi>, exact (no sampling).
double expectation(const Statevector& state, const PauliSum& obs);

// Shot-based estimator: every non-identity term is rotated into the Z basis
// (RY(-pi/2) for X factors, RX(pi/2) for Y factors), sampled `shots` times
// and averaged. Deterministic for a fixed seed; unbiased for expectation().
double sampled_expectation(const Statevector& state, const PauliSum& obs,
                           int shots, std::uint64_t seed);

}  // namespace qap
