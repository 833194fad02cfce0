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
#include <optional>
#include <string>
#include <vector>

#include "quasimo/circuit.hpp"
#include "quasimo/pauli.hpp"

namespace quasimo {

/**
 * What a workflow solves for: an observable, the Hamiltonian driving the
 * dynamics (defaults to the observable), and an optional state-preparation or
 * ansatz circuit with `num_params` free parameters.
 */
struct QuantumSimulationModel {
  std::string name;
  PauliOperator observable;
  PauliOperator hamiltonian;
  std::optional<Circuit> state_prep;
  std::size_t num_params = 0;

  /// Register width: the circuit's if present, else the widest operator.
  std::size_t num_qubits() const;
  /// Throws NonHermitian or WidthMismatch.
  void validate() const;
};

struct HeisenbergParams {
  double Jx = 1.0;
  double Jy = 1.0;
  double Jz = 0.0;
  double h_ext = 0.0;
  std::size_t num_spins = 0;
  std::vector<int> initial_spins;
  std::string observable_name = "staggered_magnetization";
};

/// (1/N) sum_i (-1)^i Z_i.
PauliOperator staggered_magnetization(std::size_t num_spins);

/// Open-chain XYZ Hamiltonian plus h_ext * sum Z_i; X prep on every spin
/// set to 1. Throws UnknownObservable, InvalidArgument.
QuantumSimulationModel create_heisenberg(const HeisenbergParams& p);

/// Jz sum Z_i Z_{i+1} + hx sum X_i, open chain.
QuantumSimulationModel create_tfim(double Jz, double hx, std::size_t num_spins);

/// sum_{k=1}^{n-1} -0.5 (1 - Z_0 Z_k).
QuantumSimulationModel create_star_maxcut(std::size_t num_qubits);

/// Packages an ansatz and observable; observable doubles as Hamiltonian.
QuantumSimulationModel create_from_parts(const Circuit& ansatz, const PauliOperator& obs,
                                         std::size_t num_params);

class ModelBuilder {
 public:
  ModelBuilder& set_name(std::string name);
  ModelBuilder& set_observable(PauliOperator obs);
  ModelBuilder& set_hamiltonian(PauliOperator h);
  ModelBuilder& set_state_prep(Circuit c);
  ModelBuilder& set_num_params(std::size_t n);
  /// Throws MissingObservable when no observable was set.
  QuantumSimulationModel build() const;

 private:
  std::string name_ = "custom";
  std::optional<PauliOperator> observable_;
  std::optional<PauliOperator> hamiltonian_;
  std::optional<Circuit> state_prep_;
  std::optional<std::size_t> num_params_;
};

}  // namespace quasimo
