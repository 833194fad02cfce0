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


#include "quasimo/ansatz.hpp"

#include "quasimo/error.hpp"

namespace quasimo {

namespace {

void require_hermitian(const PauliOperator& h) {
  if (!h.is_hermitian()) {
    throw Error(ErrorCode::NonHermitian, "Trotter step of a non-Hermitian operator");
  }
}

void require_params(std::size_t value, const char* what) {
  if (value == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
}

}  // namespace

Circuit trotter_step(const PauliOperator& h, double dt, std::size_t num_qubits) {
  require_hermitian(h);
  Circuit c(num_qubits);
  for (const auto& [p, coeff] : h.terms()) {
    if (p.is_identity()) continue;
    c.append(exp_pauli(Angle(coeff.real() * dt), p, num_qubits));
  }
  return c;
}

Circuit symmetric_trotter_step(const PauliOperator& h, double dt, std::size_t num_qubits) {
  require_hermitian(h);
  std::vector<std::pair<PauliString, double>> terms;
  for (const auto& [p, coeff] : h.terms()) {
    if (!p.is_identity()) terms.emplace_back(p, coeff.real() * dt / 2.0);
  }
  Circuit c(num_qubits);
  for (const auto& [p, theta] : terms) c.append(exp_pauli(Angle(theta), p, num_qubits));
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    c.append(exp_pauli(Angle(it->second), it->first, num_qubits));
  }
  return c;
}

Circuit qaoa_ansatz(const PauliOperator& h_c, std::size_t p, std::size_t num_qubits) {
  require_params(p, "QAOA depth p");
  require_hermitian(h_c);
  Circuit c(num_qubits, 2 * p);
  for (std::size_t q = 0; q < num_qubits; ++q) c.h(q);
  for (std::size_t layer = 0; layer < p; ++layer) {
    const std::size_t gamma = 2 * layer;
    const std::size_t beta = gamma + 1;
    for (const auto& [s, coeff] : h_c.terms()) {
      if (s.is_identity()) continue;
      c.append(exp_pauli(Angle::param(gamma, coeff.real()), s, num_qubits));
    }
    // exp(-i beta X) = Rx(2 beta)
    for (std::size_t q = 0; q < num_qubits; ++q) c.rx(q, Angle::param(beta, 2.0));
  }
  return c;
}

Circuit hardware_efficient(std::size_t num_qubits, std::size_t layers) {
  require_params(layers, "layers");
  require_params(num_qubits, "qubit count");
  Circuit c(num_qubits, 2 * num_qubits * layers);
  std::size_t slot = 0;
  for (std::size_t l = 0; l < layers; ++l) {
    for (std::size_t q = 0; q < num_qubits; ++q) {
      c.ry(q, Angle::param(slot++));
      c.rz(q, Angle::param(slot++));
    }
    for (std::size_t q = 0; q + 1 < num_qubits; ++q) c.cnot(q, q + 1);
  }
  return c;
}

Circuit rx_ry_ansatz() {
  Circuit c(1, 2);
  c.rx(0, Angle::param(0));
  c.ry(0, Angle::param(1));
  return c;
}

Circuit pauli_rotations(std::uint64_t reference, const std::vector<PauliString>& generators,
                        std::size_t num_qubits) {
  Circuit c(num_qubits, generators.size());
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((reference >> q) & 1U) c.x(q);
  }
  if (num_qubits < 64 && (reference >> num_qubits) != 0) {
    throw Error(ErrorCode::IndexTooLarge, "reference state wider than the register");
  }
  for (std::size_t k = 0; k < generators.size(); ++k) {
    c.append(exp_pauli(Angle::param(k), generators[k], num_qubits));
  }
  return c;
}

}  // namespace quasimo
