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


#include "quasimo/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "quasimo/error.hpp"

namespace quasimo {

namespace {

void check_width(std::size_t n) {
  if (n > kMaxSimulatorQubits) {
    throw Error(ErrorCode::TooManyQubits,
                "statevector limited to " + std::to_string(kMaxSimulatorQubits) +
                    " qubits, requested " + std::to_string(n));
  }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_width(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Complex(0.0));
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.amps_.size()) {
    throw Error(ErrorCode::IndexTooLarge,
                "basis index " + std::to_string(index) + " outside " +
                    std::to_string(num_qubits) + " qubits");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::InvalidArgument, "amplitude count must be a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  check_width(n);
  StateVector s(n, std::move(amplitudes));
  if (std::abs(s.norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "amplitudes are not normalized");
  }
  return s;
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw Error(ErrorCode::WidthMismatch, "inner product of different widths");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) sum += std::conj(amps_[i]) * other.amps_[i];
  return sum;
}

void StateVector::apply_single(std::size_t q, const Complex m[4]) {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps_[i];
      const Complex a1 = amps_[i + stride];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply(const Gate& gate) {
  for (std::size_t q : gate.qubits) {
    if (q >= num_qubits_) {
      throw Error(ErrorCode::WidthMismatch,
                  "gate on qubit " + std::to_string(q) + " in a " +
                      std::to_string(num_qubits_) + "-qubit state");
    }
  }
  if (gate.angle.is_symbolic()) {
    throw Error(ErrorCode::UnboundParameters, "gate has an unbound parameter");
  }
  const std::size_t dim = amps_.size();
  switch (gate.kind) {
    case GateKind::CNOT: {
      const std::uint64_t cmask = std::uint64_t{1} << gate.qubits[0];
      const std::uint64_t tmask = std::uint64_t{1} << gate.qubits[1];
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
      }
      return;
    }
    case GateKind::CZ: {
      const std::uint64_t mask =
          (std::uint64_t{1} << gate.qubits[0]) | (std::uint64_t{1} << gate.qubits[1]);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) amps_[i] = -amps_[i];
      }
      return;
    }
    default: break;
  }
  const Eigen::MatrixXcd u = gate_matrix(gate);
  const Complex m[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
  apply_single(gate.qubits[0], m);
}

void StateVector::apply(const PauliString& p) {
  if (p.width() > num_qubits_) {
    throw Error(ErrorCode::WidthMismatch, "Pauli string wider than state");
  }
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const int ny = std::popcount(x & z);
  // Y = i X Z, so P|b> = i^{ny} (-1)^{popcount(b & z)} |b ^ x>.
  static const Complex kIPow[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  const Complex global = kIPow[ny % 4];
  std::vector<Complex> out(amps_.size());
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    const double sign = (std::popcount(b & z) % 2) ? -1.0 : 1.0;
    out[b ^ x] = global * sign * amps_[b];
  }
  amps_ = std::move(out);
}

StateVector run(const Circuit& c, StateVector initial) {
  if (!c.is_bound()) {
    throw Error(ErrorCode::UnboundParameters,
                "circuit has " + std::to_string(c.num_params()) + " unbound parameter(s)");
  }
  if (c.num_qubits() != initial.num_qubits()) {
    throw Error(ErrorCode::WidthMismatch,
                "circuit width " + std::to_string(c.num_qubits()) + " vs state width " +
                    std::to_string(initial.num_qubits()));
  }
  for (const auto& g : c.gates()) initial.apply(g);
  return initial;
}

StateVector run(const Circuit& c, std::uint64_t basis_index) {
  return run(c, StateVector::basis(c.num_qubits(), basis_index));
}

double expectation(const StateVector& s, const PauliString& p) {
  if (p.width() > s.num_qubits()) {
    throw Error(ErrorCode::WidthMismatch, "observable wider than state");
  }
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const int ny = std::popcount(x & z);
  static const Complex kIPow[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  const auto amps = s.amplitudes();
  Complex sum = 0.0;
  double norm2 = 0.0;
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const double sign = (std::popcount(b & z) % 2) ? -1.0 : 1.0;
    sum += std::conj(amps[b ^ x]) * sign * amps[b];
    norm2 += std::norm(amps[b]);
  }
  // Dividing by <psi|psi> removes rounding in the amplitudes' norm.
  return (kIPow[ny % 4] * sum).real() / norm2;
}

double expectation(const StateVector& s, const PauliOperator& op) {
  if (!op.is_hermitian()) {
    throw Error(ErrorCode::NonHermitian, "expectation of a non-Hermitian operator");
  }
  // Neumaier summation keeps sums like 9 * (1/9) exact.
  double total = 0.0;
  double comp = 0.0;
  for (const auto& [p, c] : op.terms()) {
    const double term = c.real() * (p.is_identity() ? 1.0 : expectation(s, p));
    const double t = total + term;
    comp += std::abs(total) >= std::abs(term) ? (total - t) + term : (term - t) + total;
    total = t;
  }
  return total + comp;
}

// ----------------------------------------------------------------------- RNG

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))) {}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::rademacher() { return (engine_() >> 63) ? 1 : -1; }

// ------------------------------------------------------------------ sampling

std::vector<std::uint64_t> sample_indices(const StateVector& s, std::size_t shots,
                                          std::uint64_t seed, std::uint64_t stream) {
  const auto amps = s.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  Rng rng(seed, stream);
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::size_t k = 0; k < shots; ++k) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    // Skip zero-probability entries that share the cumulative value.
    auto idx = static_cast<std::uint64_t>(it - cdf.begin());
    while (idx > 0 && std::norm(amps[idx]) == 0.0) --idx;
    out.push_back(idx);
  }
  return out;
}

std::string bitstring(std::uint64_t index, std::size_t num_qubits) {
  std::string out(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1U) out[q] = '1';
  }
  return out;
}

ShotResult sample(const StateVector& s, std::size_t shots, std::uint64_t seed,
                  std::uint64_t stream) {
  if (shots == 0) throw Error(ErrorCode::InvalidArgument, "shots must be >= 1");
  ShotResult result;
  result.shots = shots;
  for (auto idx : sample_indices(s, shots, seed, stream)) {
    ++result.counts[bitstring(idx, s.num_qubits())];
  }
  return result;
}

}  // namespace quasimo
