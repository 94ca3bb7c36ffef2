#include "qap/circuit.hpp"

#include <string>

#include "qap/errors.hpp"

namespace qap {

CircuitOp CircuitOp::fixed(GateKind kind, int q0, double angle, int q1) {
  CircuitOp op;
  op.kind = kind;
  op.targets = {q0, q1};
  op.bind = Bind::Fixed;
  op.angle = angle;
  return op;
}

CircuitOp CircuitOp::param(GateKind kind, int slot, int q0, int q1) {
  CircuitOp op;
  op.kind = kind;
  op.targets = {q0, q1};
  op.bind = Bind::Param;
  op.index = slot;
  return op;
}

CircuitOp CircuitOp::feature(GateKind kind, int component, int q0, int q1) {
  CircuitOp op;
  op.kind = kind;
  op.targets = {q0, q1};
  op.bind = Bind::Feature;
  op.index = component;
  return op;
}

void validate_circuit(const ParamCircuit& circuit) {
  if (circuit.n_qubits < 1 || circuit.n_qubits > kMaxQubits)
    throw input_error("circuit n_qubits out of range");
  if (circuit.n_params < 0) throw input_error("negative n_params");
  std::vector<char> slot_seen(static_cast<std::size_t>(circuit.n_params), 0);
  for (const CircuitOp& op : circuit.ops) {
    const int arity = gate_arity(op.kind);
    for (int i = 0; i < arity; ++i)
      if (op.targets[i] < 0 || op.targets[i] >= circuit.n_qubits)
        throw input_error("target qubit out of range in circuit op");
    if (arity == 2 && op.targets[0] == op.targets[1])
      throw input_error("two-qubit op with duplicate targets");
    if (op.bind != CircuitOp::Bind::Fixed) {
      if (!is_rotation_gate(op.kind))
        throw input_error("Param/Feature binding on non-rotation gate");
      if (op.index < 0) throw input_error("negative binding index");
      if (op.bind == CircuitOp::Bind::Param) {
        if (op.index >= circuit.n_params)
          throw input_error("param slot " + std::to_string(op.index) +
                            " >= n_params " + std::to_string(circuit.n_params));
        if (slot_seen[op.index])
          throw input_error("param slot " + std::to_string(op.index) +
                            " bound more than once");
        slot_seen[op.index] = 1;
      }
    }
  }
  for (int s = 0; s < circuit.n_params; ++s)
    if (!slot_seen[s])
      throw input_error("param slot " + std::to_string(s) + " never bound");
}

int max_feature_index(const ParamCircuit& circuit) {
  int max_index = -1;
  for (const CircuitOp& op : circuit.ops)
    if (op.bind == CircuitOp::Bind::Feature && op.index > max_index)
      max_index = op.index;
  return max_index;
}

Statevector bind_and_run(const ParamCircuit& circuit,
                         std::span<const double> params,
                         std::span<const double> features,
                         const Statevector& initial) {
  if (initial.n_qubits != circuit.n_qubits)
    throw input_error("initial state has " + std::to_string(initial.n_qubits) +
                      " qubits, circuit expects " + std::to_string(circuit.n_qubits));
  if (static_cast<int>(params.size()) != circuit.n_params)
    throw input_error("got " + std::to_string(params.size()) + " params, circuit has " +
                      std::to_string(circuit.n_params) + " slots");
  const int max_feat = max_feature_index(circuit);
  if (max_feat >= 0 && features.empty())
    throw input_error("circuit takes features but none were supplied");
  if (max_feat < 0 && !features.empty())
    throw input_error("circuit takes no features but some were supplied");
  if (max_feat >= static_cast<int>(features.size()) && max_feat >= 0)
    throw input_error("feature vector too short: need component " +
                      std::to_string(max_feat));

  Statevector state = initial;
  for (const CircuitOp& op : circuit.ops) {
    double angle = 0.0;
    switch (op.bind) {
      case CircuitOp::Bind::Fixed: angle = op.angle; break;
      case CircuitOp::Bind::Param: angle = params[op.index]; break;
      case CircuitOp::Bind::Feature: angle = features[op.index]; break;
    }
    switch (op.kind) {
      case GateKind::RX: apply_rx(state, op.targets[0], angle); break;
      case GateKind::RY: apply_ry(state, op.targets[0], angle); break;
      case GateKind::RZ: apply_rz(state, op.targets[0], angle); break;
      case GateKind::RZZ: apply_rzz(state, op.targets[0], op.targets[1], angle); break;
      case GateKind::CZ: apply_cz(state, op.targets[0], op.targets[1]); break;
      case GateKind::CNOT: apply_cnot(state, op.targets[0], op.targets[1]); break;
      case GateKind::X: apply_x(state, op.targets[0]); break;
    }
  }
  count_circuit_run();
  return state;
}

ParamCircuit build_hardware_efficient(int n_qubits, int n_layers) {
  if (n_qubits < 2) throw input_error("hardware-efficient ansatz needs n_qubits >= 2");
  if (n_layers < 1) throw input_error("n_layers must be >= 1");
  ParamCircuit circuit;
  circuit.n_qubits = n_qubits;
  int slot = 0;
  for (int layer = 0; layer < n_layers; ++layer) {
    for (int q = 0; q < n_qubits; ++q)
      circuit.ops.push_back(CircuitOp::param(GateKind::RX, slot++, q));
    for (int q = 0; q < n_qubits; ++q)
      circuit.ops.push_back(CircuitOp::param(GateKind::RY, slot++, q));
    for (int q = 0; q + 1 < n_qubits; ++q)
      circuit.ops.push_back(CircuitOp::fixed(GateKind::CZ, q, 0.0, q + 1));
  }
  circuit.n_params = slot;
  validate_circuit(circuit);
  return circuit;
}

ParamCircuit build_iris_qnn(int n_qubits, int n_layers) {
  if (n_qubits != 4) throw input_error("iris ansatz is fixed at 4 qubits");
  if (n_layers < 1 || n_layers > 16)
    throw input_error("iris ansatz supports 1..16 layers");
  ParamCircuit circuit;
  circuit.n_qubits = n_qubits;
  for (int q = 0; q < n_qubits; ++q)
    circuit.ops.push_back(CircuitOp::feature(GateKind::RX, q, q));
  int slot = 0;
  for (int layer = 0; layer < n_layers; ++layer) {
    for (int q = 0; q < n_qubits; ++q)
      circuit.ops.push_back(CircuitOp::param(GateKind::RY, slot++, q));
    for (int q = 0; q + 1 < n_qubits; ++q)
      circuit.ops.push_back(CircuitOp::fixed(GateKind::CNOT, q, 0.0, q + 1));
  }
  circuit.n_params = slot;
  validate_circuit(circuit);
  return circuit;
}

ParamCircuit build_mnist_qnn(int n_layers) {
  if (n_layers < 1) throw input_error("n_layers must be >= 1");
  constexpr int n_qubits = 4;
  ParamCircuit circuit;
  circuit.n_qubits = n_qubits;
  for (int q = 0; q < n_qubits; ++q) {
    circuit.ops.push_back(CircuitOp::feature(GateKind::RY, 4 * q, q));
    circuit.ops.push_back(CircuitOp::feature(GateKind::RX, 4 * q + 1, q));
    circuit.ops.push_back(CircuitOp::feature(GateKind::RZ, 4 * q + 2, q));
    circuit.ops.push_back(CircuitOp::feature(GateKind::RY, 4 * q + 3, q));
  }
  int slot = 0;
  for (int layer = 0; layer < n_layers; ++layer) {
    for (int q = 0; q + 1 < n_qubits; ++q)
      circuit.ops.push_back(CircuitOp::param(GateKind::RZZ, slot++, q, q + 1));
    for (int q = 0; q < n_qubits; ++q)
      circuit.ops.push_back(CircuitOp::param(GateKind::RY, slot++, q));
  }
  circuit.n_params = slot;
  validate_circuit(circuit);
  return circuit;
}

ParamCircuit build_vqe_custom(int n_qubits, int n_layers) {
  return build_hardware_efficient(n_qubits, n_layers);
}

}  // namespace qap
