#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qap/circuit.hpp"
#include "qap/errors.hpp"
#include "qap/pauli.hpp"

using namespace qap;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("bind_and_run resolves bindings") {
  // Degenerate all-Fixed circuit equals raw gate application.
  ParamCircuit fixed;
  fixed.n_qubits = 2;
  fixed.ops = {CircuitOp::fixed(GateKind::RX, 0, 0.4),
               CircuitOp::fixed(GateKind::CNOT, 0, 0.0, 1)};
  fixed.n_params = 0;
  validate_circuit(fixed);
  const Statevector got = bind_and_run(fixed, {}, {}, init_basis_state(2, "00"));
  Statevector want = init_basis_state(2, "00");
  apply_rx(want, 0, 0.4);
  apply_cnot(want, 0, 1);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(got.amps[i] - want.amps[i]) < 1e-14);

  // Single RX bound to a param slot.
  ParamCircuit one;
  one.n_qubits = 1;
  one.ops = {CircuitOp::param(GateKind::RX, 0, 0)};
  one.n_params = 1;
  validate_circuit(one);
  const std::vector<double> params{pi};
  const Statevector s = bind_and_run(one, params, {}, init_basis_state(1, "0"));
  CHECK(std::abs(s.amps[0]) < 1e-12);
  CHECK(std::abs(s.amps[1] - cdouble{0.0, -1.0}) < 1e-12);

  // Single RX fed from feature component 2.
  ParamCircuit feat;
  feat.n_qubits = 1;
  feat.ops = {CircuitOp::feature(GateKind::RX, 2, 0)};
  feat.n_params = 0;
  validate_circuit(feat);
  const std::vector<double> features{0.0, 0.0, pi / 2.0};
  const Statevector f = bind_and_run(feat, {}, features, init_basis_state(1, "0"));
  CHECK(std::abs(f.amps[0] - std::cos(pi / 4.0)) < 1e-12);
  CHECK(std::abs(f.amps[1] - cdouble{0.0, -std::sin(pi / 4.0)}) < 1e-12);

  // Binding mismatches are rejected.
  const std::vector<double> one_feature{0.1};
  CHECK_THROWS_AS(bind_and_run(one, {}, {}, init_basis_state(1, "0")), input_error);
  CHECK_THROWS_AS(bind_and_run(feat, {}, {}, init_basis_state(1, "0")), input_error);
  CHECK_THROWS_AS(bind_and_run(feat, {}, one_feature, init_basis_state(1, "0")),
                  input_error);
  CHECK_THROWS_AS(bind_and_run(fixed, {}, one_feature, init_basis_state(2, "00")),
                  input_error);
  CHECK_THROWS_AS(bind_and_run(fixed, {}, {}, init_basis_state(1, "0")), input_error);
}

TEST_CASE("circuit invariants are enforced") {
  ParamCircuit bad;
  bad.n_qubits = 2;
  bad.ops = {CircuitOp::param(GateKind::RX, 0, 0),
             CircuitOp::param(GateKind::RY, 0, 1)};  // slot 0 bound twice
  bad.n_params = 2;
  CHECK_THROWS_AS(validate_circuit(bad), input_error);

  ParamCircuit gap;
  gap.n_qubits = 2;
  gap.ops = {CircuitOp::param(GateKind::RX, 1, 0)};  // slot 0 never bound
  gap.n_params = 2;
  CHECK_THROWS_AS(validate_circuit(gap), input_error);

  ParamCircuit cz_param;
  cz_param.n_qubits = 2;
  cz_param.ops = {CircuitOp::param(GateKind::CZ, 0, 0, 1)};
  cz_param.n_params = 1;
  CHECK_THROWS_AS(validate_circuit(cz_param), input_error);
}

TEST_CASE("hardware-efficient builder structure") {
  const ParamCircuit smallest = build_hardware_efficient(2, 1);
  CHECK(smallest.n_params == 4);
  int cz_count = 0;
  for (const CircuitOp& op : smallest.ops)
    if (op.kind == GateKind::CZ) ++cz_count;
  CHECK(cz_count == 1);
  CHECK(build_hardware_efficient(8, 2).n_params == 32);
  CHECK_THROWS_AS(build_hardware_efficient(1, 1), input_error);

  const ParamCircuit c = build_hardware_efficient(4, 2);
  CHECK(c.n_params == 16);
  // Layer layout: 4 RX, 4 RY, then the CZ chain (0,1),(1,2),(2,3).
  REQUIRE(c.ops.size() == 2 * (4 + 4 + 3));
  for (int layer = 0; layer < 2; ++layer) {
    const std::size_t at = static_cast<std::size_t>(layer) * 11;
    for (int q = 0; q < 4; ++q) {
      CHECK(c.ops[at + q].kind == GateKind::RX);
      CHECK(c.ops[at + q].targets[0] == q);
      CHECK(c.ops[at + q].bind == CircuitOp::Bind::Param);
      CHECK(c.ops[at + 4 + q].kind == GateKind::RY);
      CHECK(c.ops[at + 4 + q].targets[0] == q);
    }
    for (int e = 0; e < 3; ++e) {
      CHECK(c.ops[at + 8 + e].kind == GateKind::CZ);
      CHECK(c.ops[at + 8 + e].targets[0] == e);
      CHECK(c.ops[at + 8 + e].targets[1] == e + 1);
    }
  }
}

TEST_CASE("iris builder structure") {
  CHECK(build_iris_qnn(4, 4).n_params == 16);
  CHECK(build_iris_qnn(4, 8).n_params == 32);
  CHECK_THROWS_AS(build_iris_qnn(4, 0), input_error);
  CHECK_THROWS_AS(build_iris_qnn(4, 17), input_error);
  CHECK_THROWS_AS(build_iris_qnn(5, 2), input_error);

  const ParamCircuit c = build_iris_qnn(4, 2);
  REQUIRE(c.ops.size() == 4 + 2 * (4 + 3));
  for (int q = 0; q < 4; ++q) {
    CHECK(c.ops[q].kind == GateKind::RX);
    CHECK(c.ops[q].bind == CircuitOp::Bind::Feature);
    CHECK(c.ops[q].index == q);
    CHECK(c.ops[q].targets[0] == q);
  }
  for (int layer = 0; layer < 2; ++layer) {
    const std::size_t at = 4 + static_cast<std::size_t>(layer) * 7;
    for (int q = 0; q < 4; ++q) CHECK(c.ops[at + q].kind == GateKind::RY);
    for (int e = 0; e < 3; ++e) {
      CHECK(c.ops[at + 4 + e].kind == GateKind::CNOT);
      CHECK(c.ops[at + 4 + e].targets[0] == e);
      CHECK(c.ops[at + 4 + e].targets[1] == e + 1);
    }
  }

  // Zero feature vector: the embedding is the identity, so the output only
  // depends on the variational block.
  const std::vector<double> zeros4(4, 0.0);
  std::vector<double> params(c.n_params, 0.5);
  const Statevector with_embed =
      bind_and_run(c, params, zeros4, init_basis_state(4, "0000"));
  ParamCircuit no_embed = c;
  no_embed.ops.erase(no_embed.ops.begin(), no_embed.ops.begin() + 4);
  const Statevector without =
      bind_and_run(no_embed, params, {}, init_basis_state(4, "0000"));
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(std::abs(with_embed.amps[i] - without.amps[i]) < 1e-14);
}

TEST_CASE("mnist builder structure") {
  CHECK(build_mnist_qnn(2).n_params == 14);
  CHECK(build_mnist_qnn(1).n_params == 7);
  CHECK_THROWS_AS(build_mnist_qnn(0), input_error);

  const ParamCircuit c = build_mnist_qnn(1);
  REQUIRE(c.ops.size() == 16 + 7);
  // Encoding: RY, RX, RZ, RY per qubit with row-major feature indices.
  const GateKind enc[4] = {GateKind::RY, GateKind::RX, GateKind::RZ, GateKind::RY};
  for (int q = 0; q < 4; ++q)
    for (int j = 0; j < 4; ++j) {
      const CircuitOp& op = c.ops[4 * q + j];
      CHECK(op.kind == enc[j]);
      CHECK(op.bind == CircuitOp::Bind::Feature);
      CHECK(op.index == 4 * q + j);
      CHECK(op.targets[0] == q);
    }
  for (int e = 0; e < 3; ++e) {
    CHECK(c.ops[16 + e].kind == GateKind::RZZ);
    CHECK(c.ops[16 + e].bind == CircuitOp::Bind::Param);
  }
  for (int q = 0; q < 4; ++q) CHECK(c.ops[19 + q].kind == GateKind::RY);
  CHECK(max_feature_index(c) == 15);

  // All-zero image: encoding is the identity; with zero params the circuit is
  // the identity on |0000>, so every <Z_q> is 1.
  const std::vector<double> image(16, 0.0);
  const std::vector<double> params(c.n_params, 0.0);
  const Statevector s = bind_and_run(c, params, image, init_basis_state(4, "0000"));
  for (int q = 0; q < 4; ++q)
    CHECK(expectation(s, z_on(4, q)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vqe builder matches the hardware-efficient layout") {
  const ParamCircuit c = build_vqe_custom(4, 2);
  CHECK(c.n_params == 16);
  const ParamCircuit hea = build_hardware_efficient(4, 2);
  REQUIRE(c.ops.size() == hea.ops.size());
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    CHECK(c.ops[i].kind == hea.ops[i].kind);
    CHECK(c.ops[i].targets == hea.ops[i].targets);
  }

  // Zero params on |1100> leave the state on |1100> up to phase.
  const std::vector<double> params(16, 0.0);
  const Statevector s = bind_and_run(c, params, {}, init_basis_state(4, "1100"));
  CHECK(std::abs(std::abs(s.amps[12]) - 1.0) < 1e-12);
}

TEST_CASE("zero-angle circuits on basis states act as the identity") {
  // CZ and CNOT on |0...0> do nothing, so an all-zero binding reproduces the
  // initial state for every builder that starts from it.
  const ParamCircuit hea = build_hardware_efficient(3, 2);
  const std::vector<double> params(hea.n_params, 0.0);
  const Statevector s = bind_and_run(hea, params, {}, init_basis_state(3, "000"));
  CHECK(std::abs(s.amps[0] - cdouble{1.0, 0.0}) < 1e-12);
}
