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


#include "quasimo/validation.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "quasimo/error.hpp"

namespace quasimo {

void throw_missing_key(const std::string& key, const char* expected) {
  std::string msg = "result has no key '" + key + "'";
  if (expected) msg += std::string(" ") + expected;
  throw Error(ErrorCode::MissingKey, msg);
}

double exact_ground_energy(const PauliOperator& h, std::size_t num_qubits) {
  if (num_qubits > 12) {
    throw Error(ErrorCode::TooManyQubits,
                "dense ground energy limited to 12 qubits, got " + std::to_string(num_qubits));
  }
  if (num_qubits == 0) return h.constant().real();
  return eigenvalues(h, num_qubits).minCoeff();
}

StateVector exact_evolution(const PauliOperator& h, const StateVector& initial, double t) {
  const std::size_t n = initial.num_qubits();
  if (n > 10) {
    throw Error(ErrorCode::TooManyQubits,
                "exact evolution limited to 10 qubits, got " + std::to_string(n));
  }
  if (!h.is_hermitian()) throw Error(ErrorCode::NonHermitian, "evolution by a non-Hermitian operator");
  const Eigen::MatrixXcd m = to_matrix(h, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const auto amps = initial.amplitudes();
  Eigen::VectorXcd psi(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) psi[static_cast<Eigen::Index>(i)] = amps[i];
  Eigen::VectorXcd coeffs = es.eigenvectors().adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs[k] *= std::exp(Complex(0.0, -es.eigenvalues()[k] * t));
  }
  const Eigen::VectorXcd out = es.eigenvectors() * coeffs;
  return StateVector::from_amplitudes(std::vector<Complex>(out.data(), out.data() + out.size()));
}

double rmse(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "rmse needs equal non-empty series, got " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum / static_cast<double>(a.size()));
}

ValidationOutcome accept_results(const WorkflowResult& result, const ValidationCriteria& c) {
  if (!(c.threshold > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "validation threshold must be > 0");
  }
  ValidationOutcome out;
  if (c.measure == Measure::AbsDiff) {
    const std::string key = c.key.empty() ? "energy" : c.key;
    const auto* ref = std::get_if<double>(&c.reference);
    if (!ref) throw Error(ErrorCode::InvalidArgument, "abs-diff needs a scalar reference");
    out.distance = std::abs(result.get<double>(key) - *ref);
  } else {
    const std::string key = c.key.empty() ? "exp-vals" : c.key;
    const auto* ref = std::get_if<std::vector<double>>(&c.reference);
    if (!ref) throw Error(ErrorCode::InvalidArgument, "rmse needs a series reference");
    out.distance = rmse(result.get<std::vector<double>>(key), *ref);
  }
  out.accepted = out.distance <= c.threshold;
  return out;
}

}  // namespace quasimo
