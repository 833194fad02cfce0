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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "quasimo/circuit.hpp"
#include "quasimo/pauli.hpp"

namespace quasimo {

/// Largest register the dense backend accepts.
inline constexpr std::size_t kMaxSimulatorQubits = 24;

/**
 * Dense statevector over n qubits; amplitude index bit q is qubit q, so
 * qubit 0 is the least-significant bit. |0> is spin-up (Z = +1).
 */
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(std::size_t num_qubits);
  static StateVector basis(std::size_t num_qubits, std::uint64_t index);
  /// Takes amplitudes as given; the length must be a power of two and the
  /// norm 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_.at(index); }
  double norm() const noexcept;

  void apply(const Gate& gate);
  /// In-place P|psi>; phases included, result still normalized.
  void apply(const PauliString& p);

  Complex inner(const StateVector& other) const;  // <this|other>

 private:
  StateVector(std::size_t num_qubits, std::vector<Complex> amps);

  void apply_single(std::size_t q, const Complex m[4]);

  std::size_t num_qubits_;
  std::vector<Complex> amps_;
};

/// Executes a fully bound circuit. Throws UnboundParameters or WidthMismatch.
StateVector run(const Circuit& c, StateVector initial);
StateVector run(const Circuit& c, std::uint64_t basis_index = 0);

/// <psi|P|psi> / <psi|psi> for a single string (real for any Pauli string).
double expectation(const StateVector& s, const PauliString& p);
/// <psi|op|psi>; constant term added analytically. Throws NonHermitian.
double expectation(const StateVector& s, const PauliOperator& op);

/**
 * Seeded random source. Streams are derived by hashing (seed, stream) with
 * SplitMix64 into a 64-bit Mersenne Twister seed, so identical (seed, stream)
 * pairs reproduce identical draws on every platform.
 */
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// +1 or -1 with equal probability.
  int rademacher();
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

struct ShotResult {
  /// Key character q is the outcome of qubit q ("100" = qubit 0 measured 1).
  std::map<std::string, std::size_t> counts;
  std::size_t shots = 0;
};

/// `shots` i.i.d. basis-index draws from |amplitude|^2.
std::vector<std::uint64_t> sample_indices(const StateVector& s, std::size_t shots,
                                          std::uint64_t seed, std::uint64_t stream = 0);
ShotResult sample(const StateVector& s, std::size_t shots, std::uint64_t seed,
                  std::uint64_t stream = 0);

std::string bitstring(std::uint64_t index, std::size_t num_qubits);

}  // namespace quasimo
