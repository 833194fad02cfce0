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
#include <string_view>
#include <vector>

#include "quasimo/pauli.hpp"

namespace quasimo {

/**
 * Mutually commuting Pauli strings that commute with every term of `h`: a
 * maximal isotropic subspace of the GF(2) kernel of the symplectic product,
 * in reduced row-echelon form (pivot columns x_0..x_{n-1}, z_0..z_{n-1},
 * lowest first). Empty when there are none.
 */
std::vector<PauliString> find_z2_symmetries(const PauliOperator& h, std::size_t num_qubits);
inline std::vector<PauliString> find_z2_symmetries(const PauliOperator& h) {
  return find_z2_symmetries(h, h.num_qubits());
}

/// Single-qubit Pauli each symmetry is rotated onto, after the generators
/// have been recombined so every pivot anticommutes with exactly one.
struct TaperPivot {
  std::size_t qubit;
  Axis axis;
};

/**
 * Rotates each symmetry onto a single-qubit Pauli via (sigma + tau)/sqrt(2),
 * substitutes the sector eigenvalue, drops those qubits and renumbers the
 * rest in ascending order. Throws SectorArityMismatch, NotASymmetry,
 * InvalidArgument (sign other than +-1).
 */
PauliOperator taper(const PauliOperator& h, const std::vector<PauliString>& symmetries,
                    const std::vector<int>& sector);

/// Pivots chosen by taper(), in symmetry order.
std::vector<TaperPivot> taper_pivots(const std::vector<PauliString>& symmetries);

/// Sector whose tapered minimum equals the global minimum; ties within
/// 1e-12 prefer +1 in the earliest symmetry. Throws TooManyQubits above 10.
std::vector<int> auto_sector(const PauliOperator& h, const std::vector<PauliString>& symmetries);

/// Named operator transforms; "qubit-tapering" = find, auto_sector, taper.
/// Throws BadConfig for unknown names.
PauliOperator operator_transform(std::string_view name, const PauliOperator& h);

}  // namespace quasimo
