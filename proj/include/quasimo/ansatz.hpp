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


#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quasimo/circuit.hpp"
#include "quasimo/pauli.hpp"

namespace quasimo {

/// First-order product of exp(-i c_k dt P_k) over the terms of `h` in
/// canonical order. The constant term is dropped (global phase). Throws
/// NonHermitian.
Circuit trotter_step(const PauliOperator& h, double dt, std::size_t num_qubits);
inline Circuit trotter_step(const PauliOperator& h, double dt) {
  return trotter_step(h, dt, h.num_qubits());
}

/// Second-order product: canonical order at dt/2 followed by the reverse
/// order at dt/2.
Circuit symmetric_trotter_step(const PauliOperator& h, double dt, std::size_t num_qubits);

/**
 * H on every qubit, then p layers of exp(-i gamma_k H_C) and exp(-i beta_k B)
 * with B = sum_i X_i. Parameters are ordered (gamma_1, beta_1, ..., gamma_p,
 * beta_p). The constant of H_C is left out of the circuit.
 */
Circuit qaoa_ansatz(const PauliOperator& h_c, std::size_t p, std::size_t num_qubits);

/// Per layer: Ry, Rz on every qubit then a CNOT chain (i, i+1).
/// 2 * n * layers parameters.
Circuit hardware_efficient(std::size_t num_qubits, std::size_t layers);

/// Single-qubit Rx(phi) Ry(theta); parameters (phi, theta).
Circuit rx_ry_ansatz();

/**
 * X on every qubit set in `reference` followed by exp(-i theta_k G_k) for each
 * generator in order; one parameter per generator.
 */
Circuit pauli_rotations(std::uint64_t reference, const std::vector<PauliString>& generators,
                        std::size_t num_qubits);

}  // namespace quasimo
