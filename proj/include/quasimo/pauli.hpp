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
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quasimo {

using Complex = std::complex<double>;

/// Non-identity single-qubit Pauli. The enumerator order (X < Y < Z) is the
/// axis order used by the canonical term ordering.
enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

char axis_letter(Axis a) noexcept;

/// Coefficients whose magnitude falls below this are pruned by simplify().
inline constexpr double kPruneThreshold = 1e-12;

/**
 * Tensor product of single-qubit Paulis, stored sparsely as (qubit, axis)
 * pairs sorted by qubit. Identity factors are never stored, so the empty
 * string is the identity.
 *
 * Comparison is lexicographic over the (qubit, axis) sequence. That order is
 * the canonical term order used for printing and for Trotter/QITE products.
 */
class PauliString {
 public:
  using Factor = std::pair<std::size_t, Axis>;

  PauliString() = default;
  PauliString(std::initializer_list<Factor> factors);

  static PauliString single(std::size_t qubit, Axis axis);
  /// Any order accepted; throws InvalidArgument on a repeated qubit.
  static PauliString from_factors(std::vector<Factor> factors);
  /// Builds a string from symplectic bit masks (bit q of `x`/`z`).
  static PauliString from_masks(std::uint64_t x, std::uint64_t z);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_identity() const noexcept { return factors_.empty(); }
  std::size_t weight() const noexcept { return factors_.size(); }
  /// 1 + highest qubit index referenced; 0 for the identity.
  std::size_t width() const noexcept;
  std::optional<Axis> axis_at(std::size_t qubit) const;
  std::vector<std::size_t> support() const;

  /// Symplectic masks; valid only while width() <= 64.
  std::uint64_t x_mask() const noexcept;
  std::uint64_t z_mask() const noexcept;

  bool commutes_with(const PauliString& other) const noexcept;

  /// "X(0)*Z(2)"; the identity prints as "I".
  std::string to_string() const;

  auto operator<=>(const PauliString&) const = default;
  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Product of two strings: returns (phase, string) with a*b = phase * string.
std::pair<Complex, PauliString> multiply(const PauliString& a,
                                         const PauliString& b);

/**
 * Weighted sum of Pauli strings. Every Hamiltonian and observable in the
 * library is one of these. The empty string carries the constant offset.
 *
 * All arithmetic returns simplified operators (no coefficient with magnitude
 * below kPruneThreshold).
 */
class PauliOperator {
 public:
  using TermMap = std::map<PauliString, Complex>;

  PauliOperator() = default;
  /// Constant operator c * I.
  PauliOperator(Complex constant);  // NOLINT(google-explicit-constructor)
  PauliOperator(double constant) : PauliOperator(Complex(constant)) {}  // NOLINT
  PauliOperator(const PauliString& string, Complex coeff = 1.0);

  static PauliOperator X(std::size_t q) { return {PauliString::single(q, Axis::X)}; }
  static PauliOperator Y(std::size_t q) { return {PauliString::single(q, Axis::Y)}; }
  static PauliOperator Z(std::size_t q) { return {PauliString::single(q, Axis::Z)}; }

  /// Parses the operator text grammar, e.g. "-0.5*Z(0)*Z(1) + 0.25*X(2) - 1.2".
  /// Throws ParseError with the offending position.
  static PauliOperator parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of the identity term (0 if absent).
  Complex constant() const;
  /// Coefficient of `s` (0 if absent).
  Complex coefficient(const PauliString& s) const;
  /// Operator without its identity term.
  PauliOperator without_constant() const;
  /// 1 + highest qubit index referenced by any term.
  std::size_t num_qubits() const noexcept;

  bool is_hermitian() const noexcept;
  /// Sum of |c_k| over non-identity terms.
  double l1_norm_without_constant() const noexcept;

  PauliOperator& simplify();

  PauliOperator& operator+=(const PauliOperator& rhs);
  PauliOperator& operator-=(const PauliOperator& rhs);
  PauliOperator& operator*=(Complex scalar);
  PauliOperator& operator*=(const PauliOperator& rhs);

  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
  friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }
  friend PauliOperator operator*(PauliOperator a, Complex s) { return a *= s; }
  friend PauliOperator operator*(Complex s, PauliOperator a) { return a *= s; }
  friend PauliOperator operator*(double s, PauliOperator a) { return a *= Complex(s); }
  friend PauliOperator operator*(PauliOperator a, double s) { return a *= Complex(s); }
  friend PauliOperator operator-(PauliOperator a) { return a *= Complex(-1.0); }
  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

  /// Exact structural equality of the simplified term maps.
  bool operator==(const PauliOperator& other) const = default;
  bool approx_equal(const PauliOperator& other, double tol = 1e-10) const;

  /// Canonical text: terms in canonical order, 17 significant digits.
  /// parse(to_string()) reproduces the operator exactly.
  std::string to_string() const;

 private:
  TermMap terms_;
};

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

/// Dense 2^n x 2^n matrix, qubit 0 the least-significant bit of the basis
/// index. Throws TooManyQubits for n > 12 and IndexTooLarge when a term
/// touches a qubit >= n.
Eigen::MatrixXcd to_matrix(const PauliOperator& op, std::size_t num_qubits);

/// Ascending eigenvalues of to_matrix(op, n). Requires a Hermitian operator.
Eigen::VectorXd eigenvalues(const PauliOperator& op, std::size_t num_qubits);

/// Reads an operator file in the text grammar. Lines starting with '#' are
/// comments; remaining lines are concatenated.
PauliOperator load_operator_file(const std::string& path);

}  // namespace quasimo
