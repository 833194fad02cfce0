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

#include <numbers>
#include <random>

#include "quasimo/circuit.hpp"
#include "quasimo/error.hpp"
#include "quasimo/simulator.hpp"
#include "support/oracle.hpp"

using namespace quasimo;

namespace {

Circuit random_circuit(std::mt19937& rng, std::size_t n, int gates) {
  std::uniform_int_distribution<int> kind(0, 10);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  Circuit c(n);
  for (int i = 0; i < gates; ++i) {
    const auto k = static_cast<GateKind>(kind(rng));
    const std::size_t a = qubit(rng);
    if (gate_arity(k) == 2) {
      std::size_t b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.add({k, {a, b}, {}});
    } else if (is_rotation(k)) {
      c.add({k, {a}, angle(rng)});
    } else {
      c.add({k, {a}, {}});
    }
  }
  return c;
}

}  // namespace

TEST(Gate, MatricesAreUnitary) {
  for (int k = 0; k <= 10; ++k) {
    const auto kind = static_cast<GateKind>(k);
    Gate g{kind, gate_arity(kind) == 2 ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0},
           0.7};
    const Eigen::MatrixXcd u = gate_matrix(g);
    EXPECT_TRUE((u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).isZero(1e-12))
        << gate_name(kind);
  }
}

TEST(Gate, MatricesMatchOracle) {
  for (int k = 0; k <= 10; ++k) {
    const auto kind = static_cast<GateKind>(k);
    Gate g{kind, gate_arity(kind) == 2 ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0},
           0.3};
    const std::size_t n = gate_arity(kind);
    EXPECT_TRUE((gate_matrix(g) - oracle::gate(g, n)).isZero(1e-12)) << gate_name(kind);
  }
}

TEST(Circuit, AddValidates) {
  Circuit c(2);
  EXPECT_THROW(c.add({GateKind::H, {0, 1}, {}}), Error);
  EXPECT_THROW(c.add({GateKind::CNOT, {1, 1}, {}}), Error);
  try {
    c.add({GateKind::X, {2}, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexTooLarge);
  }
  c.rz(1, Angle::param(3));
  EXPECT_EQ(c.num_params(), 4u);
}

TEST(Bind, ReplacesSlots) {
  Circuit c(1, 1);
  c.rx(0, Angle::param(0));
  const Circuit b = bind_parameters(c, std::vector<double>{1.57079});
  EXPECT_TRUE(b.is_bound());
  EXPECT_EQ(b.gates()[0].angle, Angle(1.57079));
  EXPECT_TRUE(bind_parameters(Circuit(2), std::vector<double>{}).empty());
  try {
    bind_parameters(c, std::vector<double>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}

TEST(Bind, ScaledSlotsMatchDirectConstruction) {
  Circuit sym(2, 2);
  sym.ry(0, Angle::param(0)).cnot(0, 1).rz(1, Angle::param(1, -2.0)).rx(0, Angle::param(1, 0.5));
  Circuit direct(2);
  direct.ry(0, 0.4).cnot(0, 1).rz(1, -2.0 * 1.1).rx(0, 0.5 * 1.1);
  const auto bound = bind_parameters(sym, std::vector<double>{0.4, 1.1});
  EXPECT_LT(oracle::phase_distance(oracle::unitary(bound), oracle::unitary(direct)), 1e-12);
}

TEST(Inverse, SelfInverseAndRotation) {
  Circuit h(1);
  h.h(0);
  EXPECT_EQ(inverse(h), h);
  Circuit rz(1);
  rz.rz(0, 0.3);
  EXPECT_EQ(inverse(rz).gates()[0].angle, Angle(-0.3));
  Circuit s(1);
  s.s(0);
  EXPECT_EQ(inverse(s).gates()[0].kind, GateKind::Sdg);
}

TEST(Inverse, ComposeWithInverseIsIdentity) {
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    const Circuit c = random_circuit(rng, 3, 25);
    const Eigen::MatrixXcd u = oracle::unitary(compose(c, inverse(c)));
    EXPECT_TRUE((u - Eigen::MatrixXcd::Identity(8, 8)).isZero(1e-10));
    EXPECT_TRUE((oracle::unitary(inverse(c)) - oracle::unitary(c).adjoint()).isZero(1e-10));
  }
  EXPECT_THROW(compose(Circuit(2), Circuit(3)), Error);
}

TEST(ExpPauli, SingleZIsRz) {
  const Circuit c = exp_pauli(0.4, PauliString::single(0, Axis::Z));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::Rz);
  EXPECT_DOUBLE_EQ(c.gates()[0].angle.offset, 0.8);
}

TEST(ExpPauli, ZZStructureAndUnitary) {
  const PauliString zz{{0, Axis::Z}, {1, Axis::Z}};
  const Circuit c = exp_pauli(0.37, zz);
  EXPECT_EQ(c.dump(), "CNOT q0,q1\nRz q1(0.73999999999999999)\nCNOT q0,q1\n");
  EXPECT_TRUE((oracle::unitary(c) - oracle::expi(oracle::pauli(zz, 2), 0.37)).isZero(1e-12));
}

TEST(ExpPauli, MatchesMatrixExponentialForAllStrings) {
  for (std::uint64_t x = 0; x < 8; ++x) {
    for (std::uint64_t z = 0; z < 8; ++z) {
      if (!x && !z) continue;
      const auto p = PauliString::from_masks(x, z);
      const Circuit c = exp_pauli(Angle(-0.61), p, 3);
      EXPECT_TRUE((oracle::unitary(c) - oracle::expi(oracle::pauli(p, 3), -0.61)).isZero(1e-12))
          << p.to_string();
      std::size_t basis = 0;
      for (const auto& [q, a] : p.factors()) basis += a == Axis::X ? 1 : a == Axis::Y ? 2 : 0;
      EXPECT_EQ(c.size(), 2 * basis + 2 * (p.weight() - 1) + 1);
    }
  }
}

TEST(ExpPauli, PiOnXActsAsX) {
  const Circuit c = exp_pauli(std::numbers::pi / 2, PauliString::single(0, Axis::X));
  EXPECT_LT(oracle::phase_distance(oracle::unitary(c), oracle::X()), 1e-12);
}

TEST(ExpPauli, IdentityRejected) {
  try {
    exp_pauli(0.1, PauliString{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdentityString);
  }
}

TEST(CancelInverses, RemovesPairs) {
  Circuit hh(1);
  hh.h(0).h(0);
  EXPECT_TRUE(cancel_adjacent_inverses(hh).empty());
  Circuit cc(2);
  cc.cnot(0, 1).cnot(0, 1);
  EXPECT_TRUE(cancel_adjacent_inverses(cc).empty());
  Circuit rz(1);
  rz.rz(0, 0.3).rz(0, -0.3);
  EXPECT_TRUE(cancel_adjacent_inverses(rz).empty());
  Circuit nested(2);
  nested.h(0).s(1).cnot(0, 1).cnot(0, 1).sdg(1).h(0);
  EXPECT_TRUE(cancel_adjacent_inverses(nested).empty());
}

TEST(CancelInverses, KeepsBlockedPairs) {
  Circuit c(2);
  c.h(0).cnot(0, 1).h(0);
  EXPECT_EQ(cancel_adjacent_inverses(c).size(), 3u);
}

TEST(CancelInverses, PreservesUnitary) {
  std::mt19937 rng(21);
  for (int t = 0; t < 10; ++t) {
    Circuit c = random_circuit(rng, 3, 30);
    c.append(inverse(random_circuit(rng, 3, 5)));
    const Circuit o = cancel_adjacent_inverses(c);
    EXPECT_LE(o.size(), c.size());
    EXPECT_LT(oracle::phase_distance(oracle::unitary(o), oracle::unitary(c)), 1e-10);
    EXPECT_EQ(cancel_adjacent_inverses(o), o);
  }
}

TEST(Dump, RoundTrips) {
  Circuit c(3, 2);
  c.h(0).sdg(2).cnot(2, 0).rz(1, Angle::param(0, 2.0)).ry(0, -1.25).cz(0, 1).rx(2, Angle::param(1));
  EXPECT_EQ(Circuit::parse_dump(c.dump(), 3, 2), c);
  EXPECT_THROW(Circuit::parse_dump("FOO q0\n", 1), Error);
}

TEST(GateCounts, CountsByName) {
  Circuit c(2);
  c.h(0).h(1).cnot(0, 1).rz(1, 0.2);
  const auto counts = gate_counts(c);
  EXPECT_EQ(counts.at("H"), 2u);
  EXPECT_EQ(counts.at("CNOT"), 1u);
  EXPECT_EQ(counts.at("total"), 4u);
}

TEST(CircuitOptimizer, LookupByName) {
  EXPECT_EQ(create_circuit_optimizer("cancel-adjacent-inverses")->name(), "cancel-adjacent-inverses");
  EXPECT_THROW(create_circuit_optimizer("qsearch"), Error);
}
