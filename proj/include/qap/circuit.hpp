#pragma once

#include <array>
#include <span>
#include <vector>

#include "qap/statevector.hpp"

namespace qap {

// One gate in a parameterized circuit. Rotation angles are either fixed at
// build time, bound to a trainable parameter slot, or filled from an input
// feature vector at evaluation time.
struct CircuitOp {
  enum class Bind { Fixed, Param, Feature };

  GateKind kind = GateKind::RX;
  std::array<int, 2> targets{0, 0};  // arity from kind
  Bind bind = Bind::Fixed;
  double angle = 0.0;  // Fixed rotations only
  int index = -1;      // Param slot or Feature component

  static CircuitOp fixed(GateKind kind, int q0, double angle = 0.0, int q1 = 0);
  static CircuitOp param(GateKind kind, int slot, int q0, int q1 = 0);
  static CircuitOp feature(GateKind kind, int component, int q0, int q1 = 0);
};

struct ParamCircuit {
  int n_qubits = 0;
  std::vector<CircuitOp> ops;
  int n_params = 0;
};

// Checks the circuit invariants: targets in range and distinct, every Param
// slot in {0..n_params-1} bound exactly once, Param/Feature only on rotations.
void validate_circuit(const ParamCircuit& circuit);

// Largest Feature component referenced, or -1 when the circuit takes none.
int max_feature_index(const ParamCircuit& circuit);

// Applies the ops in order with bindings resolved. `features` must be
// non-empty exactly when the circuit contains Feature bindings.
Statevector bind_and_run(const ParamCircuit& circuit,
                         std::span<const double> params,
                         std::span<const double> features,
                         const Statevector& initial);

// Per layer: RX then RY on every qubit (one slot each), then a CZ chain on
// (0,1),(1,2),...,(n-2,n-1). 2 * n_qubits * n_layers slots.
ParamCircuit build_hardware_efficient(int n_qubits, int n_layers);

// Angle embedding RX(feature j) on qubit j, then per layer RY on every qubit
// followed by a CNOT chain (0,1),(1,2),(2,3). 4 * n_layers slots.
ParamCircuit build_iris_qnn(int n_qubits, int n_layers);

// 4-qubit circuit for 16-feature rows (4x4 images, row-major): per qubit q the
// encoding RY(f[4q]), RX(f[4q+1]), RZ(f[4q+2]), RY(f[4q+3]); per layer RZZ on
// (0,1),(1,2),(2,3) then RY on every qubit. 7 slots per layer.
ParamCircuit build_mnist_qnn(int n_layers);

// Hardware-efficient layers intended to act on the |1100> reference state.
ParamCircuit build_vqe_custom(int n_qubits, int n_layers);

}  // namespace qap
