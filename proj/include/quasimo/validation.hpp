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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "quasimo/pauli.hpp"
#include "quasimo/simulator.hpp"
#include "quasimo/workflow_result.hpp"

namespace quasimo {

/// Minimum eigenvalue by dense diagonalization. Throws TooManyQubits above 12.
double exact_ground_energy(const PauliOperator& h, std::size_t num_qubits);
inline double exact_ground_energy(const PauliOperator& h) {
  return exact_ground_energy(h, h.num_qubits());
}

/// exp(-i H t)|psi> via eigendecomposition. Throws TooManyQubits above 10.
StateVector exact_evolution(const PauliOperator& h, const StateVector& initial, double t);

enum class Measure { AbsDiff, Rmse };

struct ValidationCriteria {
  Measure measure = Measure::AbsDiff;
  double threshold = 0.0;
  /// Result key; defaults to "energy" for abs-diff and "exp-vals" for rmse.
  std::string key;
  std::variant<double, std::vector<double>> reference = 0.0;
};

struct ValidationOutcome {
  bool accepted = false;
  double distance = 0.0;
};

/// Root-mean-square difference; throws InvalidArgument on length mismatch.
double rmse(const std::vector<double>& a, const std::vector<double>& b);

/// Throws InvalidArgument for threshold <= 0, MissingKey for absent keys.
ValidationOutcome accept_results(const WorkflowResult& result, const ValidationCriteria& criteria);

/**
 * Extension point for user-defined acceptance rules; the built-in measures
 * go through accept_results.
 */
class QuantumValidationModel {
 public:
  virtual ~QuantumValidationModel() = default;
  virtual std::string name() const = 0;
  virtual ValidationOutcome validate(const WorkflowResult& result) const = 0;
};

/// Accepts everything with distance 0.
class AcceptAllValidator final : public QuantumValidationModel {
 public:
  std::string name() const override { return "accept-all"; }
  ValidationOutcome validate(const WorkflowResult&) const override { return {true, 0.0}; }
};

class CriteriaValidator final : public QuantumValidationModel {
 public:
  explicit CriteriaValidator(ValidationCriteria criteria) : criteria_(std::move(criteria)) {}
  std::string name() const override { return "criteria"; }
  ValidationOutcome validate(const WorkflowResult& result) const override {
    return accept_results(result, criteria_);
  }

 private:
  ValidationCriteria criteria_;
};

}  // namespace quasimo
