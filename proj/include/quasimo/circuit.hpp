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

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quasimo/pauli.hpp"

namespace quasimo {

enum class GateKind { X, Y, Z, H, S, Sdg, Rx, Ry, Rz, CNOT, CZ };

std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept;
bool is_rotation(GateKind kind) noexcept;
std::size_t gate_arity(GateKind kind) noexcept;

/// Rotation angle in radians: `offset + scale * params[slot]` when symbolic,
/// plain `offset` otherwise.
struct Angle {
  double offset = 0.0;
  std::optional<std::size_t> slot;
  double scale = 1.0;

  Angle() = default;
  Angle(double radians) : offset(radians) {}  // NOLINT(google-explicit-constructor)
  static Angle param(std::size_t slot, double scale = 1.0) {
    Angle a;
    a.slot = slot;
    a.scale = scale;
    return a;
  }

  bool is_symbolic() const noexcept { return slot.has_value(); }
  Angle negated() const;
  Angle scaled(double factor) const;
  double bind(std::span<const double> params) const;
  /// Sum of two angles; both literal, or symbolic on the same slot.
  std::optional<Angle> plus(const Angle& other) const;
  std::string to_string() const;

  bool operator==(const Angle&) const = default;
};

struct Gate {
  GateKind kind;
  std::vector<std::size_t> qubits;
  Angle angle;  // meaningful for Rx/Ry/Rz only

  bool operator==(const Gate&) const = default;
};

/// 2x2 or 4x4 unitary of a bound gate. For CNOT/CZ the basis index is
/// (control + 2 * target), i.e. the first listed qubit is the low bit.
Eigen::MatrixXcd gate_matrix(const Gate& gate);

/**
 * Ordered gate list over a fixed register. Parameters are symbolic slots
 * 0..num_params-1 referenced by rotation angles; binding replaces them with
 * literals.
 */
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits = 0, std::size_t num_params = 0);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t num_params() const noexcept { return num_params_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  bool is_bound() const noexcept { return num_params_ == 0; }

  /// Validates qubit arity, range and uniqueness; widens num_params to cover
  /// any new slot.
  Circuit& add(Gate gate);
  Circuit& append(const Circuit& other);

  Circuit& x(std::size_t q) { return add({GateKind::X, {q}, {}}); }
  Circuit& y(std::size_t q) { return add({GateKind::Y, {q}, {}}); }
  Circuit& z(std::size_t q) { return add({GateKind::Z, {q}, {}}); }
  Circuit& h(std::size_t q) { return add({GateKind::H, {q}, {}}); }
  Circuit& s(std::size_t q) { return add({GateKind::S, {q}, {}}); }
  Circuit& sdg(std::size_t q) { return add({GateKind::Sdg, {q}, {}}); }
  Circuit& rx(std::size_t q, Angle a) { return add({GateKind::Rx, {q}, a}); }
  Circuit& ry(std::size_t q, Angle a) { return add({GateKind::Ry, {q}, a}); }
  Circuit& rz(std::size_t q, Angle a) { return add({GateKind::Rz, {q}, a}); }
  Circuit& cnot(std::size_t c, std::size_t t) { return add({GateKind::CNOT, {c, t}, {}}); }
  Circuit& cz(std::size_t a, std::size_t b) { return add({GateKind::CZ, {a, b}, {}}); }

  /// One gate per line: `KIND q<i>[,q<j>][(angle)]`.
  std::string dump() const;
  /// Inverse of dump(); blank lines and '#' comments are skipped.
  static Circuit parse_dump(std::string_view text, std::size_t num_qubits,
                            std::size_t num_params = 0);

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t num_qubits_;
  std::size_t num_params_;
  std::vector<Gate> gates_;
};

/// Throws ArityMismatch unless values.size() == c.num_params().
Circuit bind_parameters(const Circuit& c, std::span<const double> values);

/// `a` followed by `b`. Throws WidthMismatch on differing registers.
Circuit compose(const Circuit& a, const Circuit& b);
Circuit inverse(const Circuit& c);

/**
 * exp(-i * theta * P) with Rz(phi) = exp(-i phi Z / 2): basis change to Z
 * (H for X, Sdg then H for Y), CNOT chain onto the highest support qubit,
 * Rz(2 theta), then the mirror image. Throws IdentityString for P = I.
 */
Circuit exp_pauli(const Angle& theta, const PauliString& p, std::size_t num_qubits);
inline Circuit exp_pauli(double theta, const PauliString& p) {
  return exp_pauli(Angle(theta), p, p.width());
}

/// Removes adjacent G, G^dagger pairs (adjacent on every wire they touch)
/// until none remain.
Circuit cancel_adjacent_inverses(const Circuit& c);

/// Gate counts keyed by gate name plus "total".
std::map<std::string, std::size_t> gate_counts(const Circuit& c);

/// Pluggable circuit rewriting pass, e.g. for QITE's growing circuits.
class CircuitOptimizer {
 public:
  virtual ~CircuitOptimizer() = default;
  virtual std::string name() const = 0;
  virtual Circuit optimize(const Circuit& c) const = 0;
};

class CancelInversesOptimizer final : public CircuitOptimizer {
 public:
  std::string name() const override { return "cancel-adjacent-inverses"; }
  Circuit optimize(const Circuit& c) const override { return cancel_adjacent_inverses(c); }
};

/// Built-in passes by name; throws BadConfig for unknown names.
std::shared_ptr<const CircuitOptimizer> create_circuit_optimizer(std::string_view name);

}  // namespace quasimo
