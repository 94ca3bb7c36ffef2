#include "qap/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qap/errors.hpp"

namespace qap {

bool is_rotation_gate(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ:
      return true;
    default:
      return false;
  }
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::RZZ:
    case GateKind::CZ:
    case GateKind::CNOT:
      return 2;
    default:
      return 1;
  }
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::RZZ: return "RZZ";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::X: return "X";
  }
  return "?";
}

double Statevector::norm_sq() const {
  double total = 0.0;
  for (const cdouble& a : amps) total += std::norm(a);
  return total;
}

Statevector init_basis_state(int n_qubits, std::string_view bits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw input_error("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  if (static_cast<int>(bits.size()) != n_qubits)
    throw input_error("bitstring length " + std::to_string(bits.size()) +
                      " does not match n_qubits " + std::to_string(n_qubits));
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw input_error("bitstring must be over {0,1}");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  Statevector state;
  state.n_qubits = n_qubits;
  state.amps.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
  state.amps[index] = cdouble{1.0, 0.0};
  return state;
}

namespace {

inline std::size_t qubit_mask(int n_qubits, int q) {
  return std::size_t{1} << (n_qubits - 1 - q);
}

// Applies [[m00, m01], [m10, m11]] to the amplitude pairs split by qubit q.
void apply_1q(Statevector& s, int q, cdouble m00, cdouble m01, cdouble m10,
              cdouble m11) {
  const std::size_t stride = qubit_mask(s.n_qubits, q);
  const std::size_t dim = s.amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; ++j) {
      cdouble& a0 = s.amps[base + j];
      cdouble& a1 = s.amps[base + j + stride];
      const cdouble v0 = a0;
      const cdouble v1 = a1;
      a0 = m00 * v0 + m01 * v1;
      a1 = m10 * v0 + m11 * v1;
    }
  }
}

}  // namespace

void apply_rx(Statevector& state, int q, double angle) {
  const double c = std::cos(angle / 2.0);
  const cdouble mis{0.0, -std::sin(angle / 2.0)};
  apply_1q(state, q, c, mis, mis, c);
}

void apply_ry(Statevector& state, int q, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  apply_1q(state, q, c, -s, s, c);
}

void apply_rz(Statevector& state, int q, double angle) {
  const cdouble p0 = std::polar(1.0, -angle / 2.0);
  const cdouble p1 = std::polar(1.0, angle / 2.0);
  const std::size_t stride = qubit_mask(state.n_qubits, q);
  const std::size_t dim = state.amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; ++j) {
      state.amps[base + j] *= p0;
      state.amps[base + j + stride] *= p1;
    }
  }
}

void apply_x(Statevector& state, int q) {
  const std::size_t stride = qubit_mask(state.n_qubits, q);
  const std::size_t dim = state.amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride)
    for (std::size_t j = 0; j < stride; ++j)
      std::swap(state.amps[base + j], state.amps[base + j + stride]);
}

void apply_rzz(Statevector& state, int a, int b, double angle) {
  // exp(-i angle ZZ / 2): phase exp(-i angle/2) on aligned bits, exp(+i angle/2)
  // on anti-aligned ones.
  const cdouble same = std::polar(1.0, -angle / 2.0);
  const cdouble diff = std::polar(1.0, angle / 2.0);
  const std::size_t ma = qubit_mask(state.n_qubits, a);
  const std::size_t mb = qubit_mask(state.n_qubits, b);
  const std::size_t dim = state.amps.size();
  for (std::size_t i = 0; i < dim; ++i) {
    const bool ba = (i & ma) != 0;
    const bool bb = (i & mb) != 0;
    state.amps[i] *= (ba == bb) ? same : diff;
  }
}

void apply_cz(Statevector& state, int a, int b) {
  const std::size_t mask = qubit_mask(state.n_qubits, a) | qubit_mask(state.n_qubits, b);
  const std::size_t dim = state.amps.size();
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & mask) == mask) state.amps[i] = -state.amps[i];
}

void apply_cnot(Statevector& state, int control, int target) {
  const std::size_t cm = qubit_mask(state.n_qubits, control);
  const std::size_t tm = qubit_mask(state.n_qubits, target);
  const std::size_t dim = state.amps.size();
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & cm) && !(i & tm)) std::swap(state.amps[i], state.amps[i | tm]);
}

void apply_gate_inplace(Statevector& state, GateKind kind,
                        const std::vector<int>& targets,
                        std::optional<double> angle) {
  const int arity = gate_arity(kind);
  if (static_cast<int>(targets.size()) != arity)
    throw input_error(std::string(gate_name(kind)) + " expects " +
                      std::to_string(arity) + " target(s), got " +
                      std::to_string(targets.size()));
  for (int t : targets)
    if (t < 0 || t >= state.n_qubits)
      throw input_error("target qubit " + std::to_string(t) + " out of range");
  if (arity == 2 && targets[0] == targets[1])
    throw input_error("two-qubit gate targets must be distinct");
  if (is_rotation_gate(kind) != angle.has_value())
    throw input_error(std::string(gate_name(kind)) +
                      (angle ? " takes no angle" : " requires an angle"));

  switch (kind) {
    case GateKind::RX: apply_rx(state, targets[0], *angle); break;
    case GateKind::RY: apply_ry(state, targets[0], *angle); break;
    case GateKind::RZ: apply_rz(state, targets[0], *angle); break;
    case GateKind::RZZ: apply_rzz(state, targets[0], targets[1], *angle); break;
    case GateKind::CZ: apply_cz(state, targets[0], targets[1]); break;
    case GateKind::CNOT: apply_cnot(state, targets[0], targets[1]); break;
    case GateKind::X: apply_x(state, targets[0]); break;
  }
}

Statevector apply_gate(const Statevector& state, GateKind kind,
                       const std::vector<int>& targets,
                       std::optional<double> angle) {
  Statevector out = state;
  apply_gate_inplace(out, kind, targets, angle);
  return out;
}

namespace {
std::uint64_t g_circuit_runs = 0;
}

std::uint64_t circuit_runs() { return g_circuit_runs; }
void count_circuit_run() { ++g_circuit_runs; }

}  // namespace qap
