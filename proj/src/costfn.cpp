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


#include "quasimo/costfn.hpp"

#include <bit>

#include "quasimo/error.hpp"

namespace quasimo {

double CostFunctionEvaluator::evaluate(const Circuit& prep, const PauliOperator& obs,
                                       std::uint64_t stream) const {
  if (!obs.is_hermitian()) {
    throw Error(ErrorCode::NonHermitian, "observable is not Hermitian");
  }
  if (obs.num_qubits() > prep.num_qubits()) {
    throw Error(ErrorCode::WidthMismatch,
                "observable acts on " + std::to_string(obs.num_qubits()) +
                    " qubits but the circuit has " + std::to_string(prep.num_qubits()));
  }
  return evaluate(run(prep), obs, stream);
}

double ExactEvaluator::evaluate(const StateVector& state, const PauliOperator& obs,
                                std::uint64_t) const {
  return expectation(state, obs);
}

TomographyEvaluator::TomographyEvaluator(std::size_t shots, std::uint64_t seed)
    : shots_(shots), seed_(seed) {
  if (shots == 0) throw Error(ErrorCode::InvalidArgument, "tomography needs shots >= 1");
}

Circuit measurement_basis(const PauliString& p, std::size_t num_qubits) {
  Circuit c(num_qubits);
  for (const auto& [q, a] : p.factors()) {
    if (a == Axis::X) {
      c.h(q);
    } else if (a == Axis::Y) {
      c.sdg(q);
      c.h(q);
    }
  }
  return c;
}

double TomographyEvaluator::estimate(const StateVector& state, const PauliString& p,
                                     std::uint64_t stream) const {
  StateVector rotated = run(measurement_basis(p, state.num_qubits()), state);
  std::uint64_t support = 0;
  for (std::size_t q : p.support()) support |= std::uint64_t{1} << q;
  long long parity_sum = 0;
  for (auto idx : sample_indices(rotated, shots_, seed_, stream)) {
    parity_sum += (std::popcount(idx & support) % 2) ? -1 : 1;
  }
  return static_cast<double>(parity_sum) / static_cast<double>(shots_);
}

double TomographyEvaluator::evaluate(const StateVector& state, const PauliOperator& obs,
                                     std::uint64_t stream) const {
  if (!obs.is_hermitian()) {
    throw Error(ErrorCode::NonHermitian, "observable is not Hermitian");
  }
  // Term k of call `stream` draws from its own stream.
  const std::uint64_t base = splitmix64(stream) << 16;
  double total = 0.0;
  std::uint64_t k = 0;
  for (const auto& [p, c] : obs.terms()) {
    if (p.is_identity()) {
      total += c.real();
    } else {
      total += c.real() * estimate(state, p, base + k++);
    }
  }
  return total;
}

std::shared_ptr<const CostFunctionEvaluator> create_evaluator(const EvaluatorConfig& cfg) {
  if (cfg.mode == EvaluationMode::Tomography) {
    return std::make_shared<TomographyEvaluator>(cfg.shots, cfg.seed);
  }
  return std::make_shared<ExactEvaluator>();
}

double evaluate(const Circuit& prep, const PauliOperator& obs, const EvaluatorConfig& cfg,
                std::uint64_t stream) {
  return create_evaluator(cfg)->evaluate(prep, obs, stream);
}

}  // namespace quasimo
