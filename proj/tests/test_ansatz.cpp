// Copyright 2026 The QuaSiMo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>

#include "quasimo/ansatz.hpp"
#include "quasimo/error.hpp"
#include "quasimo/model.hpp"
#include "quasimo/simulator.hpp"
#include "support/oracle.hpp"

using namespace quasimo;

namespace {

PauliOperator heisenberg(std::size_t n, double g) {
  HeisenbergParams p;
  p.num_spins = n;
  p.Jz = g;
  p.initial_spins.assign(n, 0);
  return create_heisenberg(p).hamiltonian;
}

double step_error(const PauliOperator& h, double dt, bool symmetric) {
  const std::size_t n = h.num_qubits();
  const Circuit c = symmetric ? symmetric_trotter_step(h, dt, n) : trotter_step(h, dt, n);
  return (oracle::unitary(c) - oracle::expi(oracle::dense(h, n), dt)).norm();
}

}  // namespace

TEST(Trotter, SingleZ) {
  const Circuit c = trotter_step(PauliOperator::Z(0), 0.1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::Rz);
  EXPECT_DOUBLE_EQ(c.gates()[0].angle.offset, 0.2);
}

TEST(Trotter, TwoSpinBlocksAndAccuracy) {
  const auto h = heisenberg(2, 1.0);
  EXPECT_EQ(h.size(), 3u);
  const Circuit c = trotter_step(h, 0.05);
  const auto rz = gate_counts(c).at("Rz");
  EXPECT_EQ(rz, 3u);
  // Two-spin terms commute, so the product is exact.
  EXPECT_LT(step_error(h, 0.05, false), 5e-3);
}

TEST(Trotter, ZeroTimeIsIdentity) {
  const auto h = heisenberg(3, 0.5);
  const auto u = oracle::unitary(trotter_step(h, 0.0));
  EXPECT_TRUE((u - oracle::Mat::Identity(8, 8)).isZero(1e-14));
}

TEST(Trotter, ConstantIgnored) {
  EXPECT_TRUE(trotter_step(PauliOperator(3.0), 0.2, 1).empty());
}

TEST(Trotter, FirstOrderErrorScalesQuadratically) {
  const auto h = PauliOperator::parse("X(0)*X(1) + 0.7*Z(0) + 0.4*Y(1) + 0.3*Z(0)*Y(1)");
  const double ratio = step_error(h, 0.05, false) / step_error(h, 0.025, false);
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(Trotter, SymmetricErrorScalesCubically) {
  const auto h = PauliOperator::parse("X(0)*X(1) + 0.7*Z(0) + 0.4*Y(1) + 0.3*Z(0)*Y(1)");
  const double ratio = step_error(h, 0.05, true) / step_error(h, 0.025, true);
  EXPECT_GT(ratio, 7.0);
  EXPECT_LT(ratio, 9.0);
}

TEST(Trotter, NonHermitianRejected) {
  EXPECT_THROW(trotter_step(PauliOperator(PauliString::single(0, Axis::X), Complex(0, 1)), 0.1),
               Error);
}

TEST(Qaoa, TwoNodeStructure) {
  const auto m = create_star_maxcut(2);
  const Circuit c = qaoa_ansatz(m.hamiltonian, 1, 2);
  EXPECT_EQ(c.num_params(), 2u);
  const auto counts = gate_counts(c);
  EXPECT_EQ(counts.at("H"), 2u);
  EXPECT_EQ(counts.at("Rz"), 1u);
  EXPECT_EQ(counts.at("CNOT"), 2u);
  EXPECT_EQ(counts.at("Rx"), 2u);
}

TEST(Qaoa, ParameterCount) {
  EXPECT_EQ(qaoa_ansatz(create_star_maxcut(8).hamiltonian, 3, 8).num_params(), 6u);
  EXPECT_THROW(qaoa_ansatz(create_star_maxcut(3).hamiltonian, 0, 3), Error);
}

TEST(Qaoa, ZeroAnglesLeaveUniformSuperposition) {
  const auto m = create_star_maxcut(5);
  const Circuit c = bind_parameters(qaoa_ansatz(m.hamiltonian, 2, 5), std::vector<double>(4, 0.0));
  EXPECT_NEAR(expectation(run(c), m.hamiltonian), -2.0, 1e-12);
}

TEST(Qaoa, LayerMatchesDenseExponentials) {
  const auto m = create_star_maxcut(3);
  const double gamma = 0.37, beta = -0.81;
  const Circuit c = bind_parameters(qaoa_ansatz(m.hamiltonian, 1, 3), std::vector<double>{gamma, beta});
  const auto hc = oracle::dense(m.hamiltonian - PauliOperator(m.hamiltonian.constant()), 3);
  const auto mixer = oracle::dense(PauliOperator::X(0) + PauliOperator::X(1) + PauliOperator::X(2), 3);
  oracle::Vec plus = oracle::Vec::Constant(8, 1.0 / std::sqrt(8.0));
  const oracle::Vec ref = oracle::expi(mixer, beta) * oracle::expi(hc, gamma) * plus;
  const oracle::Vec got = oracle::unitary(c) * oracle::basis_state(3, 0);
  EXPECT_NEAR(std::abs(ref.dot(got)), 1.0, 1e-12);
}

TEST(HardwareEfficient, Counts) {
  const Circuit one = hardware_efficient(1, 1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one.gates()[0].kind, GateKind::Ry);
  EXPECT_EQ(one.gates()[1].kind, GateKind::Rz);
  const Circuit two = hardware_efficient(2, 2);
  EXPECT_EQ(two.num_params(), 8u);
  EXPECT_EQ(gate_counts(two).at("CNOT"), 2u);
}

TEST(RxRy, OrderAndParameters) {
  const Circuit c = rx_ry_ansatz();
  EXPECT_EQ(c.num_params(), 2u);
  EXPECT_EQ(c.dump(), "Rx q0($0)\nRy q0($1)\n");
}

TEST(PauliRotations, ReferenceAndGenerator) {
  const PauliString g{{0, Axis::X}, {1, Axis::X}, {2, Axis::X}, {3, Axis::Y}};
  const Circuit c = pauli_rotations(0b0011, {g}, 4);
  EXPECT_EQ(c.num_params(), 1u);
  const auto bound = bind_parameters(c, std::vector<double>{0.2});
  const oracle::Vec ref = oracle::expi(oracle::pauli(g, 4), 0.2) * oracle::basis_state(4, 3);
  EXPECT_TRUE((oracle::unitary(bound) * oracle::basis_state(4, 0) - ref).isZero(1e-12));
}
