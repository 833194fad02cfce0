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
#include <memory>
#include <string>

#include "quasimo/circuit.hpp"
#include "quasimo/pauli.hpp"
#include "quasimo/simulator.hpp"

namespace quasimo {

enum class EvaluationMode { Exact, Tomography };

struct EvaluatorConfig {
  EvaluationMode mode = EvaluationMode::Exact;
  std::size_t shots = 0;  // per Pauli term; tomography only
  std::uint64_t seed = 0;

  static EvaluatorConfig exact() { return {}; }
  static EvaluatorConfig tomography(std::size_t shots, std::uint64_t seed) {
    return {EvaluationMode::Tomography, shots, seed};
  }
};

/**
 * Maps (state-prep circuit, observable) to an expectation value. Evaluators
 * hold no mutable state; `stream` selects an independent RNG stream so that
 * concurrent or repeated calls stay reproducible.
 */
class CostFunctionEvaluator {
 public:
  virtual ~CostFunctionEvaluator() = default;
  virtual std::string name() const = 0;
  virtual double evaluate(const StateVector& state, const PauliOperator& obs,
                          std::uint64_t stream = 0) const = 0;

  /// Runs `prep` from |0...0> first. Throws UnboundParameters.
  double evaluate(const Circuit& prep, const PauliOperator& obs, std::uint64_t stream = 0) const;
};

class ExactEvaluator final : public CostFunctionEvaluator {
 public:
  std::string name() const override { return "exact"; }
  using CostFunctionEvaluator::evaluate;
  double evaluate(const StateVector& state, const PauliOperator& obs,
                  std::uint64_t stream = 0) const override;
};

/**
 * Partial tomography: one sampled experiment of `shots` per non-constant
 * term after its change of basis (H for X, Sdg then H for Y). Bit 0 counts
 * +1, bit 1 counts -1; the constant term is added analytically.
 */
class TomographyEvaluator final : public CostFunctionEvaluator {
 public:
  TomographyEvaluator(std::size_t shots, std::uint64_t seed);
  std::string name() const override { return "tomography"; }
  std::size_t shots() const noexcept { return shots_; }
  using CostFunctionEvaluator::evaluate;
  double evaluate(const StateVector& state, const PauliOperator& obs,
                  std::uint64_t stream = 0) const override;

  /// Sampled <P> for a single string.
  double estimate(const StateVector& state, const PauliString& p, std::uint64_t stream) const;

 private:
  std::size_t shots_;
  std::uint64_t seed_;
};

/// Throws InvalidArgument for tomography with zero shots.
std::shared_ptr<const CostFunctionEvaluator> create_evaluator(const EvaluatorConfig& cfg);

double evaluate(const Circuit& prep, const PauliOperator& obs, const EvaluatorConfig& cfg,
                std::uint64_t stream = 0);

/// Change-of-basis circuit mapping the eigenbasis of `p` to the Z basis.
Circuit measurement_basis(const PauliString& p, std::size_t num_qubits);

}  // namespace quasimo
