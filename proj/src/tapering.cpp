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


#include "quasimo/tapering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "quasimo/error.hpp"

namespace quasimo {

namespace {

// Symplectic vector: bits 0..n-1 are x, n..2n-1 are z.
using BitRow = std::vector<std::uint8_t>;

BitRow to_row(const PauliString& p, std::size_t n) {
  BitRow r(2 * n, 0);
  for (const auto& [q, a] : p.factors()) {
    if (a == Axis::X || a == Axis::Y) r[q] = 1;
    if (a == Axis::Z || a == Axis::Y) r[n + q] = 1;
  }
  return r;
}

PauliString from_row(const BitRow& r, std::size_t n) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (r[q]) x |= std::uint64_t{1} << q;
    if (r[n + q]) z |= std::uint64_t{1} << q;
  }
  return PauliString::from_masks(x, z);
}

int symplectic(const BitRow& a, const BitRow& b, std::size_t n) {
  int s = 0;
  for (std::size_t q = 0; q < n; ++q) s ^= (a[q] & b[n + q]) ^ (a[n + q] & b[q]);
  return s;
}

void add_into(BitRow& dst, const BitRow& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

bool is_zero(const BitRow& r) {
  return std::all_of(r.begin(), r.end(), [](auto b) { return b == 0; });
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<BitRow>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel][c]) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c]) add_into(rows[i], rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

void require_width(std::size_t n) {
  if (n > 64) throw Error(ErrorCode::TooManyQubits, "tapering supports at most 64 qubits");
}

}  // namespace

std::vector<PauliString> find_z2_symmetries(const PauliOperator& h, std::size_t n) {
  require_width(n);
  if (n == 0) return {};
  // v commutes with term t iff (t_z | t_x) . v = 0.
  std::vector<BitRow> rows;
  for (const auto& [p, c] : h.terms()) {
    if (p.is_identity()) continue;
    const BitRow t = to_row(p, n);
    BitRow swapped(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      swapped[q] = t[n + q];
      swapped[n + q] = t[q];
    }
    rows.push_back(std::move(swapped));
  }
  std::vector<std::size_t> pivots = rref(rows);
  std::vector<bool> is_pivot(2 * n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<BitRow> kernel;
  for (std::size_t f = 0; f < 2 * n; ++f) {
    if (is_pivot[f]) continue;
    BitRow v(2 * n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rows[i][f];
    kernel.push_back(std::move(v));
  }

  // Symplectic Gram-Schmidt: keep one member of every hyperbolic pair plus
  // the radical.
  std::vector<BitRow> isotropic;
  std::vector<BitRow> rest = kernel;
  while (!rest.empty()) {
    BitRow v = rest.front();
    rest.erase(rest.begin());
    if (is_zero(v)) continue;
    auto partner = std::find_if(rest.begin(), rest.end(),
                                [&](const BitRow& u) { return symplectic(u, v, n) == 1; });
    if (partner != rest.end()) {
      const BitRow w = *partner;
      rest.erase(partner);
      for (auto& u : rest) {
        const int uw = symplectic(u, w, n);
        const int uv = symplectic(u, v, n);
        if (uw) add_into(u, v);
        if (uv) add_into(u, w);
      }
    }
    isotropic.push_back(std::move(v));
  }
  rref(isotropic);

  std::vector<PauliString> out;
  for (const auto& r : isotropic) out.push_back(from_row(r, n));
  return out;
}

namespace {

struct Reduction {
  std::vector<PauliString> generators;  // recombined, same span
  std::vector<double> signs;
  std::vector<TaperPivot> pivots;
};

bool anticommutes(const PauliString& p, std::size_t q, Axis a) {
  const auto at = p.axis_at(q);
  return at && *at != a;
}

Reduction reduce(const std::vector<PauliString>& symmetries, const std::vector<double>& signs) {
  Reduction red{symmetries, signs, {}};
  const std::size_t k = symmetries.size();
  std::size_t n = 0;
  for (const auto& s : symmetries) n = std::max(n, s.width());
  std::vector<bool> used(n, false);

  for (std::size_t i = 0; i < k; ++i) {
    const PauliString& row = red.generators[i];
    if (row.is_identity()) {
      throw Error(ErrorCode::NotASymmetry,
                  "symmetry " + symmetries[i].to_string() + " depends on the others");
    }
    std::optional<TaperPivot> pivot;
    for (std::size_t q = 0; q < n && !pivot; ++q) {
      if (used[q]) continue;
      for (Axis a : {Axis::X, Axis::Z, Axis::Y}) {
        if (anticommutes(row, q, a)) {
          pivot = TaperPivot{q, a};
          break;
        }
      }
    }
    if (!pivot) {
      throw Error(ErrorCode::NotASymmetry,
                  "symmetry " + symmetries[i].to_string() + " depends on the others");
    }
    used[pivot->qubit] = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || !anticommutes(red.generators[j], pivot->qubit, pivot->axis)) continue;
      auto [phase, product] = multiply(red.generators[j], red.generators[i]);
      red.generators[j] = product;
      red.signs[j] *= red.signs[i] * phase.real();
    }
    red.pivots.push_back(*pivot);
  }
  return red;
}

void check_symmetries(const PauliOperator& h, const std::vector<PauliString>& symmetries) {
  for (std::size_t i = 0; i < symmetries.size(); ++i) {
    const auto& s = symmetries[i];
    if (s.is_identity()) throw Error(ErrorCode::NotASymmetry, "identity is not a usable symmetry");
    for (const auto& [p, c] : h.terms()) {
      if (!s.commutes_with(p)) {
        throw Error(ErrorCode::NotASymmetry,
                    s.to_string() + " anticommutes with term " + p.to_string());
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!s.commutes_with(symmetries[j])) {
        throw Error(ErrorCode::NotASymmetry,
                    s.to_string() + " anticommutes with " + symmetries[j].to_string());
      }
    }
  }
}

}  // namespace

std::vector<TaperPivot> taper_pivots(const std::vector<PauliString>& symmetries) {
  return reduce(symmetries, std::vector<double>(symmetries.size(), 1.0)).pivots;
}

PauliOperator taper(const PauliOperator& h, const std::vector<PauliString>& symmetries,
                    const std::vector<int>& sector) {
  if (sector.size() != symmetries.size()) {
    throw Error(ErrorCode::SectorArityMismatch,
                std::to_string(sector.size()) + " sector signs for " +
                    std::to_string(symmetries.size()) + " symmetries");
  }
  std::vector<double> signs;
  for (int s : sector) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "sector signs must be +1 or -1");
    signs.push_back(s);
  }
  if (!h.is_hermitian()) throw Error(ErrorCode::NonHermitian, "tapering a non-Hermitian operator");
  check_symmetries(h, symmetries);
  std::size_t n = h.num_qubits();
  for (const auto& s : symmetries) n = std::max(n, s.width());
  require_width(n);

  const Reduction red = reduce(symmetries, signs);

  PauliOperator rotated = h;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    const auto& pv = red.pivots[i];
    const PauliOperator u =
        (PauliOperator(PauliString::single(pv.qubit, pv.axis)) + PauliOperator(red.generators[i])) *
        inv_sqrt2;
    rotated = u * rotated * u;
  }

  std::map<std::size_t, std::pair<Axis, double>> fixed;
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    fixed[red.pivots[i].qubit] = {red.pivots[i].axis, red.signs[i]};
  }
  std::vector<std::size_t> relabel(n, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (!fixed.count(q)) relabel[q] = next++;
  }

  PauliOperator out;
  for (const auto& [p, c] : rotated.terms()) {
    Complex coeff = c;
    std::vector<PauliString::Factor> kept;
    for (const auto& [q, a] : p.factors()) {
      auto it = fixed.find(q);
      if (it == fixed.end()) {
        kept.emplace_back(relabel[q], a);
      } else if (it->second.first == a) {
        coeff *= it->second.second;
      } else {
        throw Error(ErrorCode::NotASymmetry, "rotated term " + p.to_string() +
                                                 " does not commute with the tapered qubit");
      }
    }
    out += PauliOperator(PauliString::from_factors(std::move(kept)), coeff);
  }
  PauliOperator cleaned;
  for (const auto& [p, c] : out.terms()) {
    cleaned += PauliOperator(p, std::abs(c.imag()) < kPruneThreshold ? Complex(c.real()) : c);
  }
  return cleaned;
}

std::vector<int> auto_sector(const PauliOperator& h, const std::vector<PauliString>& symmetries) {
  std::size_t n = h.num_qubits();
  for (const auto& s : symmetries) n = std::max(n, s.width());
  if (n > 10) {
    throw Error(ErrorCode::TooManyQubits,
                "auto_sector diagonalizes up to 10 qubits, got " + std::to_string(n));
  }
  const std::size_t k = symmetries.size();
  if (k == 0) return {};
  std::vector<int> best;
  double best_value = std::numeric_limits<double>::infinity();
  // Bit i of `mask` set means sign -1 for symmetry i; ascending masks visit
  // +1 before -1 in the earliest symmetry.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> sector(k);
    for (std::size_t i = 0; i < k; ++i) sector[i] = ((mask >> i) & 1U) ? -1 : 1;
    const PauliOperator t = taper(h, symmetries, sector);
    const std::size_t width = n - k;
    double value;
    if (width == 0) {
      value = t.constant().real();
    } else {
      value = eigenvalues(t, width).minCoeff();
    }
    if (value < best_value - 1e-12) {
      best_value = value;
      best = sector;
    }
  }
  return best;
}

PauliOperator operator_transform(std::string_view name, const PauliOperator& h) {
  if (name == "qubit-tapering") {
    const auto syms = find_z2_symmetries(h);
    return taper(h, syms, auto_sector(h, syms));
  }
  throw Error(ErrorCode::BadConfig, "unknown operator transform '" + std::string(name) + "'");
}

}  // namespace quasimo
