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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "quasimo/circuit.hpp"
#include "quasimo/costfn.hpp"
#include "quasimo/model.hpp"
#include "quasimo/optimizer.hpp"
#include "quasimo/options.hpp"
#include "quasimo/workflow_result.hpp"

namespace quasimo {

using WorkflowConfig = Options;

class QuantumSimulationWorkflow {
 public:
  virtual ~QuantumSimulationWorkflow() = default;
  virtual std::string name() const = 0;
  virtual WorkflowResult execute(const QuantumSimulationModel& model) const = 0;
};

using WorkflowFactory =
    std::function<std::unique_ptr<QuantumSimulationWorkflow>(const WorkflowConfig&)>;

/// Adds or replaces a named factory.
void register_workflow(const std::string& name, WorkflowFactory factory);
/// Throws UnknownWorkflow, or BadConfig from the factory.
std::unique_ptr<QuantumSimulationWorkflow> get_workflow(const std::string& name,
                                                        const WorkflowConfig& cfg = {});
/// Sorted registered names.
std::vector<std::string> list_workflows();

/// Evaluator from the "shots" and "seed" keys: tomography when shots > 0.
std::shared_ptr<const CostFunctionEvaluator> evaluator_from_config(const WorkflowConfig& cfg);

/**
 * exp-vals[k] = <observable> after k Trotter steps of the Hamiltonian,
 * k = 0..steps. Keys: "dt" (> 0), "steps", "trotter-order" (1 or 2,
 * default 2), "shots", "seed".
 */
class TimeDependentWorkflow final : public QuantumSimulationWorkflow {
 public:
  explicit TimeDependentWorkflow(const WorkflowConfig& cfg);
  std::string name() const override { return "time-dependent"; }
  WorkflowResult execute(const QuantumSimulationModel& model) const override;

 private:
  double dt_;
  std::size_t steps_;
  int order_;
  std::shared_ptr<const CostFunctionEvaluator> evaluator_;
};

/// Minimizes <observable> over the model's ansatz parameters from zeros.
/// Keys: "optimizer", "budget", "algorithm", "tolerance", "c", "A", "step",
/// "shots", "seed".
class VqeWorkflow final : public QuantumSimulationWorkflow {
 public:
  explicit VqeWorkflow(const WorkflowConfig& cfg);
  VqeWorkflow(std::shared_ptr<const Optimizer> optimizer,
              std::shared_ptr<const CostFunctionEvaluator> evaluator, std::uint64_t seed = 0);
  std::string name() const override { return "vqe"; }
  WorkflowResult execute(const QuantumSimulationModel& model) const override;

 private:
  std::shared_ptr<const Optimizer> optimizer_;
  std::shared_ptr<const CostFunctionEvaluator> evaluator_;
  std::uint64_t seed_;
};

/// Multi-start QAOA; "energy" is the minimum over starts. Keys: "steps" (p),
/// "starts" (default 10), plus the optimizer and evaluator keys of VQE.
class QaoaWorkflow final : public QuantumSimulationWorkflow {
 public:
  explicit QaoaWorkflow(const WorkflowConfig& cfg);
  std::string name() const override { return "qaoa"; }
  WorkflowResult execute(const QuantumSimulationModel& model) const override;

 private:
  std::size_t p_;
  std::size_t starts_;
  std::shared_ptr<const Optimizer> optimizer_;
  std::shared_ptr<const CostFunctionEvaluator> evaluator_;
  std::uint64_t seed_;
};

/**
 * Quantum imaginary-time evolution over the full Pauli basis, n <= 5.
 * Keys: "steps", "step-size", "circuit-optimizer", "shots", "seed".
 */
class QiteWorkflow final : public QuantumSimulationWorkflow {
 public:
  explicit QiteWorkflow(const WorkflowConfig& cfg);
  std::string name() const override { return "qite"; }
  WorkflowResult execute(const QuantumSimulationModel& model) const override;

  static constexpr double kRegularization = 1e-8;
  static constexpr std::size_t kMaxQubits = 5;

 private:
  std::size_t steps_;
  double step_size_;
  std::shared_ptr<const CircuitOptimizer> circuit_optimizer_;
  std::shared_ptr<const CostFunctionEvaluator> evaluator_;
};

/// All 4^n - 1 non-identity strings on n qubits in canonical order.
std::vector<PauliString> pauli_basis(std::size_t num_qubits);

}  // namespace quasimo
