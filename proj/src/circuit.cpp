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


#include "quasimo/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "quasimo/error.hpp"

namespace quasimo {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 11> kGateNames{{
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::Sdg, "Sdg"},
    {GateKind::Rx, "Rx"},
    {GateKind::Ry, "Ry"},
    {GateKind::Rz, "Rz"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
}};

constexpr double kZeroAngle = 1e-12;

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) noexcept {
  for (const auto& [k, n] : kGateNames) {
    if (k == kind) return n;
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept {
  for (const auto& [k, n] : kGateNames) {
    if (n.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(n[i])) !=
          std::toupper(static_cast<unsigned char>(name[i]))) {
        same = false;
        break;
      }
    }
    if (same) return k;
  }
  return std::nullopt;
}

bool is_rotation(GateKind kind) noexcept {
  return kind == GateKind::Rx || kind == GateKind::Ry || kind == GateKind::Rz;
}

std::size_t gate_arity(GateKind kind) noexcept {
  return (kind == GateKind::CNOT || kind == GateKind::CZ) ? 2 : 1;
}

// --------------------------------------------------------------------- Angle

Angle Angle::negated() const { return scaled(-1.0); }

Angle Angle::scaled(double factor) const {
  Angle a = *this;
  a.offset *= factor;
  if (a.slot) a.scale *= factor;
  return a;
}

double Angle::bind(std::span<const double> params) const {
  if (!slot) return offset;
  if (*slot >= params.size()) {
    throw Error(ErrorCode::ArityMismatch,
                "parameter slot " + std::to_string(*slot) + " not provided");
  }
  return offset + scale * params[*slot];
}

std::optional<Angle> Angle::plus(const Angle& other) const {
  if (!slot && !other.slot) return Angle(offset + other.offset);
  if (slot && other.slot && *slot == *other.slot) {
    Angle a = *this;
    a.offset += other.offset;
    a.scale += other.scale;
    if (std::abs(a.scale) < kZeroAngle) return Angle(a.offset);
    return a;
  }
  return std::nullopt;
}

std::string Angle::to_string() const {
  if (!slot) return format_real(offset);
  std::string out;
  double s = scale;
  if (offset != 0.0) {
    out = format_real(offset);
    out += std::signbit(s) ? '-' : '+';
    s = std::abs(s);
  } else if (std::signbit(s)) {
    out = "-";
    s = -s;
  }
  if (s != 1.0) out += format_real(s) + "*";
  out += "$" + std::to_string(*slot);
  return out;
}

namespace {

Angle parse_angle(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  auto to_double = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw ParseError(0, "malformed angle '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dollar = t.find('$');
  if (dollar == std::string::npos) return Angle(to_double(t));
  const std::string slot_text = t.substr(dollar + 1);
  if (slot_text.empty() ||
      !std::all_of(slot_text.begin(), slot_text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(dollar, "malformed parameter slot in '" + std::string(text) + "'");
  }
  std::string prefix = t.substr(0, dollar);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  // Split "offset(+|-)scale" at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != 'e' &&
        prefix[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double offset = 0.0;
  std::string scale_text = prefix;
  if (split != std::string::npos) {
    offset = to_double(prefix.substr(0, split));
    scale_text = prefix.substr(split);
  }
  double scale = 1.0;
  if (scale_text == "-") scale = -1.0;
  else if (scale_text == "+" || scale_text.empty()) scale = 1.0;
  else scale = to_double(scale_text);
  Angle a = Angle::param(std::stoul(slot_text), scale);
  a.offset = offset;
  return a;
}

}  // namespace

// ---------------------------------------------------------------- gate maths

Eigen::MatrixXcd gate_matrix(const Gate& gate) {
  using namespace std::complex_literals;
  if (gate.angle.is_symbolic()) {
    throw Error(ErrorCode::UnboundParameters, "gate_matrix needs a bound angle");
  }
  const double t = gate.angle.offset;
  const double c = std::cos(t / 2);
  const double s = std::sin(t / 2);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m(2, 2);
  switch (gate.kind) {
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -1i, 1i, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::S: m << 1, 0, 0, 1i; break;
    case GateKind::Sdg: m << 1, 0, 0, -1i; break;
    case GateKind::Rx: m << c, -1i * s, -1i * s, c; break;
    case GateKind::Ry: m << c, -s, s, c; break;
    case GateKind::Rz: m << std::exp(-0.5i * t), 0, 0, std::exp(0.5i * t); break;
    case GateKind::CNOT:
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(2, 2) = 1;
      m(3, 1) = 1;
      m(1, 3) = 1;
      break;
    case GateKind::CZ:
      m = Eigen::MatrixXcd::Identity(4, 4);
      m(3, 3) = -1;
      break;
  }
  return m;
}

// ------------------------------------------------------------------- Circuit

Circuit::Circuit(std::size_t num_qubits, std::size_t num_params)
    : num_qubits_(num_qubits), num_params_(num_params) {}

Circuit& Circuit::add(Gate gate) {
  if (gate.qubits.size() != gate_arity(gate.kind)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(gate_name(gate.kind)) + " takes " +
                    std::to_string(gate_arity(gate.kind)) + " qubit(s)");
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] >= num_qubits_) {
      throw Error(ErrorCode::IndexTooLarge,
                  "qubit " + std::to_string(gate.qubits[i]) + " outside a " +
                      std::to_string(num_qubits_) + "-qubit circuit");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw Error(ErrorCode::InvalidArgument, "duplicate qubit in gate");
      }
    }
  }
  if (!is_rotation(gate.kind)) gate.angle = Angle{};
  if (gate.angle.slot) num_params_ = std::max(num_params_, *gate.angle.slot + 1);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw Error(ErrorCode::WidthMismatch,
                "cannot append a " + std::to_string(other.num_qubits_) +
                    "-qubit circuit to a " + std::to_string(num_qubits_) + "-qubit one");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  num_params_ = std::max(num_params_, other.num_params_);
  return *this;
}

std::string Circuit::dump() const {
  std::string out;
  for (const auto& g : gates_) {
    out += gate_name(g.kind);
    out += ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i) out += ',';
      out += 'q' + std::to_string(g.qubits[i]);
    }
    if (is_rotation(g.kind)) out += '(' + g.angle.to_string() + ')';
    out += '\n';
  }
  return out;
}

Circuit Circuit::parse_dump(std::string_view text, std::size_t num_qubits,
                            std::size_t num_params) {
  Circuit c(num_qubits, num_params);
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string line(text.substr(line_start, line_end - line_start));
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      if (line_end == text.size()) break;
      continue;
    }
    line = line.substr(first);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();

    const auto space = line.find_first_of(" \t");
    if (space == std::string::npos) throw ParseError(offset, "gate without qubits: '" + line + "'");
    const auto kind = gate_kind_from_name(line.substr(0, space));
    if (!kind) throw ParseError(offset, "unknown gate '" + line.substr(0, space) + "'");

    std::string rest = line.substr(space + 1);
    Angle angle;
    const auto paren = rest.find('(');
    if (paren != std::string::npos) {
      if (rest.back() != ')') throw ParseError(offset, "unterminated angle in '" + line + "'");
      angle = parse_angle(std::string_view(rest).substr(paren + 1, rest.size() - paren - 2));
      rest = rest.substr(0, paren);
    } else if (is_rotation(*kind)) {
      throw ParseError(offset, "rotation without angle: '" + line + "'");
    }

    std::vector<std::size_t> qubits;
    std::stringstream ss(rest);
    std::string token;
    while (std::getline(ss, token, ',')) {
      std::string t;
      for (char ch : token) {
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
      }
      if (t.size() < 2 || (t[0] != 'q' && t[0] != 'Q') ||
          !std::all_of(t.begin() + 1, t.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw ParseError(offset, "malformed qubit '" + token + "'");
      }
      qubits.push_back(std::stoul(t.substr(1)));
    }
    c.add({*kind, std::move(qubits), angle});
    if (line_end == text.size()) break;
  }
  return c;
}

// ---------------------------------------------------------------- operations

Circuit bind_parameters(const Circuit& c, std::span<const double> values) {
  if (values.size() != c.num_params()) {
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(c.num_params()) + " parameters, got " +
                    std::to_string(values.size()));
  }
  Circuit out(c.num_qubits());
  for (Gate g : c.gates()) {
    if (g.angle.slot) g.angle = Angle(g.angle.bind(values));
    out.add(std::move(g));
  }
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

namespace {

Gate inverse_gate(Gate g) {
  switch (g.kind) {
    case GateKind::S: g.kind = GateKind::Sdg; break;
    case GateKind::Sdg: g.kind = GateKind::S; break;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz: g.angle = g.angle.negated(); break;
    default: break;
  }
  return g;
}

bool same_wires(const Gate& a, const Gate& b) {
  if (a.kind == GateKind::CZ && b.kind == GateKind::CZ) {
    auto qa = a.qubits;
    auto qb = b.qubits;
    std::sort(qa.begin(), qa.end());
    std::sort(qb.begin(), qb.end());
    return qa == qb;
  }
  return a.qubits == b.qubits;
}

bool is_zero(const Angle& a) {
  return !a.slot && std::abs(a.offset) < kZeroAngle;
}

}  // namespace

Circuit inverse(const Circuit& c) {
  Circuit out(c.num_qubits(), c.num_params());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.add(inverse_gate(*it));
  }
  return out;
}

Circuit exp_pauli(const Angle& theta, const PauliString& p, std::size_t num_qubits) {
  if (p.is_identity()) {
    throw Error(ErrorCode::IdentityString, "exp_pauli needs a non-identity Pauli string");
  }
  if (p.width() > num_qubits) {
    throw Error(ErrorCode::WidthMismatch,
                "Pauli string " + p.to_string() + " does not fit " +
                    std::to_string(num_qubits) + " qubits");
  }
  Circuit basis(num_qubits);
  for (const auto& [q, a] : p.factors()) {
    if (a == Axis::X) {
      basis.h(q);
    } else if (a == Axis::Y) {
      basis.sdg(q);
      basis.h(q);
    }
  }
  Circuit ladder(num_qubits);
  const auto support = p.support();
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    ladder.cnot(support[i], support[i + 1]);
  }
  Circuit out = basis;
  out.append(ladder);
  out.rz(support.back(), theta.scaled(2.0));
  out.append(inverse(ladder));
  out.append(inverse(basis));
  return out;
}

Circuit cancel_adjacent_inverses(const Circuit& c) {
  std::vector<std::optional<Gate>> out;
  out.reserve(c.size());
  std::vector<std::vector<std::size_t>> wire(c.num_qubits());

  auto top_shared = [&](const Gate& g) -> std::optional<std::size_t> {
    std::optional<std::size_t> k;
    for (std::size_t q : g.qubits) {
      if (wire[q].empty()) return std::nullopt;
      if (k && *k != wire[q].back()) return std::nullopt;
      k = wire[q].back();
    }
    return k;
  };
  auto pop = [&](std::size_t k) {
    for (std::size_t q : out[k]->qubits) wire[q].pop_back();
    out[k].reset();
  };

  for (const Gate& g : c.gates()) {
    if (is_rotation(g.kind) && is_zero(g.angle)) continue;
    if (auto k = top_shared(g)) {
      Gate& prev = *out[*k];
      if (same_wires(prev, g)) {
        if (is_rotation(g.kind) && prev.kind == g.kind) {
          if (auto sum = prev.angle.plus(g.angle)) {
            if (is_zero(*sum)) pop(*k);
            else prev.angle = *sum;
            continue;
          }
        } else if (inverse_gate(prev) == Gate{g.kind, prev.qubits, g.angle} ||
                   (g.kind == GateKind::CZ && prev.kind == GateKind::CZ)) {
          pop(*k);
          continue;
        }
      }
    }
    for (std::size_t q : g.qubits) wire[q].push_back(out.size());
    out.emplace_back(g);
  }

  Circuit result(c.num_qubits(), c.num_params());
  for (auto& g : out) {
    if (g) result.add(std::move(*g));
  }
  return result;
}

std::map<std::string, std::size_t> gate_counts(const Circuit& c) {
  std::map<std::string, std::size_t> counts;
  for (const auto& g : c.gates()) ++counts[std::string(gate_name(g.kind))];
  counts["total"] = c.size();
  return counts;
}

std::shared_ptr<const CircuitOptimizer> create_circuit_optimizer(std::string_view name) {
  if (name == "cancel-adjacent-inverses") return std::make_shared<CancelInversesOptimizer>();
  throw Error(ErrorCode::BadConfig, "unknown circuit optimizer '" + std::string(name) + "'");
}

}  // namespace quasimo
