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


#include "quasimo/model.hpp"

#include <algorithm>

#include "quasimo/error.hpp"

namespace quasimo {

std::size_t QuantumSimulationModel::num_qubits() const {
  if (state_prep) return state_prep->num_qubits();
  return std::max(observable.num_qubits(), hamiltonian.num_qubits());
}

void QuantumSimulationModel::validate() const {
  if (!observable.is_hermitian()) throw Error(ErrorCode::NonHermitian, "observable is not Hermitian");
  if (!hamiltonian.is_hermitian()) throw Error(ErrorCode::NonHermitian, "Hamiltonian is not Hermitian");
  if (state_prep) {
    const std::size_t width = std::max(observable.num_qubits(), hamiltonian.num_qubits());
    if (state_prep->num_qubits() < width) {
      throw Error(ErrorCode::WidthMismatch,
                  "state preparation has " + std::to_string(state_prep->num_qubits()) +
                      " qubits but the operators need " + std::to_string(width));
    }
  }
}

PauliOperator staggered_magnetization(std::size_t num_spins) {
  PauliOperator m;
  const double w = 1.0 / static_cast<double>(num_spins);
  for (std::size_t i = 0; i < num_spins; ++i) m += PauliOperator::Z(i) * (i % 2 ? -w : w);
  return m;
}

QuantumSimulationModel create_heisenberg(const HeisenbergParams& p) {
  if (p.num_spins < 2) throw Error(ErrorCode::InvalidArgument, "num_spins must be >= 2");
  if (p.initial_spins.size() != p.num_spins) {
    throw Error(ErrorCode::InvalidArgument,
                "initial_spins has " + std::to_string(p.initial_spins.size()) +
                    " entries for " + std::to_string(p.num_spins) + " spins");
  }
  QuantumSimulationModel m;
  m.name = "heisenberg";
  const std::size_t n = p.num_spins;
  PauliOperator h;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h += p.Jx * PauliOperator::X(i) * PauliOperator::X(i + 1);
    h += p.Jy * PauliOperator::Y(i) * PauliOperator::Y(i + 1);
    h += p.Jz * PauliOperator::Z(i) * PauliOperator::Z(i + 1);
  }
  for (std::size_t i = 0; i < n; ++i) h += p.h_ext * PauliOperator::Z(i);
  m.hamiltonian = h;

  if (p.observable_name == "staggered_magnetization") {
    m.observable = staggered_magnetization(n);
  } else {
    throw Error(ErrorCode::UnknownObservable, "unknown observable '" + p.observable_name + "'");
  }

  Circuit prep(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.initial_spins[i] != 0 && p.initial_spins[i] != 1) {
      throw Error(ErrorCode::InvalidArgument, "initial_spins entries must be 0 or 1");
    }
    if (p.initial_spins[i] == 1) prep.x(i);
  }
  m.state_prep = prep;
  return m;
}

QuantumSimulationModel create_tfim(double Jz, double hx, std::size_t num_spins) {
  if (num_spins < 2) throw Error(ErrorCode::InvalidArgument, "TFIM needs at least 2 spins");
  PauliOperator h;
  for (std::size_t i = 0; i + 1 < num_spins; ++i) {
    h += Jz * PauliOperator::Z(i) * PauliOperator::Z(i + 1);
  }
  for (std::size_t i = 0; i < num_spins; ++i) h += hx * PauliOperator::X(i);
  QuantumSimulationModel m;
  m.name = "tfim";
  m.hamiltonian = h;
  m.observable = h;
  m.state_prep = Circuit(num_spins);
  return m;
}

QuantumSimulationModel create_star_maxcut(std::size_t num_qubits) {
  if (num_qubits < 2) throw Error(ErrorCode::InvalidArgument, "star graph needs at least 2 nodes");
  PauliOperator h;
  for (std::size_t k = 1; k < num_qubits; ++k) {
    h += -0.5 * (PauliOperator(1.0) - PauliOperator::Z(0) * PauliOperator::Z(k));
  }
  QuantumSimulationModel m;
  m.name = "star_maxcut";
  m.hamiltonian = h;
  m.observable = h;
  m.state_prep = Circuit(num_qubits);
  return m;
}

QuantumSimulationModel create_from_parts(const Circuit& ansatz, const PauliOperator& obs,
                                         std::size_t num_params) {
  return ModelBuilder()
      .set_observable(obs)
      .set_state_prep(ansatz)
      .set_num_params(num_params)
      .build();
}

ModelBuilder& ModelBuilder::set_name(std::string name) {
  name_ = std::move(name);
  return *this;
}
ModelBuilder& ModelBuilder::set_observable(PauliOperator obs) {
  observable_ = std::move(obs);
  return *this;
}
ModelBuilder& ModelBuilder::set_hamiltonian(PauliOperator h) {
  hamiltonian_ = std::move(h);
  return *this;
}
ModelBuilder& ModelBuilder::set_state_prep(Circuit c) {
  state_prep_ = std::move(c);
  return *this;
}
ModelBuilder& ModelBuilder::set_num_params(std::size_t n) {
  num_params_ = n;
  return *this;
}

QuantumSimulationModel ModelBuilder::build() const {
  if (!observable_) throw Error(ErrorCode::MissingObservable, "model has no observable");
  QuantumSimulationModel m;
  m.name = name_;
  m.observable = *observable_;
  m.hamiltonian = hamiltonian_ ? *hamiltonian_ : *observable_;
  m.state_prep = state_prep_;
  if (num_params_) {
    m.num_params = *num_params_;
    if (state_prep_ && state_prep_->num_params() != m.num_params) {
      throw Error(ErrorCode::ArityMismatch,
                  "ansatz has " + std::to_string(state_prep_->num_params()) +
                      " parameters, model declares " + std::to_string(m.num_params));
    }
  } else if (state_prep_) {
    m.num_params = state_prep_->num_params();
  }
  m.validate();
  return m;
}

}  // namespace quasimo
