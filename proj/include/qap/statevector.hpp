#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace qap {

using cdouble = std::complex<double>;

// Gate set used by every ansatz in this project. Rotation gates are generated
// as exp(-i * angle * G / 2) with G the matching Pauli (X, Y, Z or Z(x)Z).
enum class GateKind { RX, RY, RZ, RZZ, CZ, CNOT, X };

bool is_rotation_gate(GateKind kind);
int gate_arity(GateKind kind);
std::string_view gate_name(GateKind kind);

// Dense n-qubit state.
//
// Bit-order convention, fixed project-wide: qubit 0 is the MOST significant
// bit of the amplitude index. For n=4 the basis state |1100> (qubits 0 and 1
// set) sits at index 0b1100 = 12.
struct Statevector {
  int n_qubits = 0;
  std::vector<cdouble> amps;

  std::size_t dim() const { return amps.size(); }
  double norm_sq() const;
};

// Practical cap for the dense representation (2^20 amplitudes, ~16 MiB).
inline constexpr int kMaxQubits = 20;

// |bits>, most significant qubit first: init_basis_state(4, "1100") puts
// amplitude 1 at index 12.
Statevector init_basis_state(int n_qubits, std::string_view bits);

// Checked, pure gate application: the input is untouched and the transformed
// state is returned. `angle` must be present exactly for rotation gates.
Statevector apply_gate(const Statevector& state, GateKind kind,
                       const std::vector<int>& targets,
                       std::optional<double> angle = std::nullopt);

// Same checks, in place.
void apply_gate_inplace(Statevector& state, GateKind kind,
                        const std::vector<int>& targets,
                        std::optional<double> angle = std::nullopt);

// Unchecked kernels used by the circuit evaluator. Targets must be distinct
// and in range.
void apply_rx(Statevector& state, int q, double angle);
void apply_ry(Statevector& state, int q, double angle);
void apply_rz(Statevector& state, int q, double angle);
void apply_rzz(Statevector& state, int a, int b, double angle);
void apply_cz(Statevector& state, int a, int b);
void apply_cnot(Statevector& state, int control, int target);
void apply_x(Statevector& state, int q);

// Process-wide count of full circuit executions (bind_and_run calls). Tests
// audit evaluation budgets against deltas of this counter.
std::uint64_t circuit_runs();
void count_circuit_run();

}  // namespace qap
