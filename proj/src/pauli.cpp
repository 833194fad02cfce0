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


#include "quasimo/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "quasimo/error.hpp"

namespace quasimo {

char axis_letter(Axis a) noexcept {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

// ---------------------------------------------------------------- PauliString

PauliString::PauliString(std::initializer_list<Factor> factors)
    : PauliString(from_factors(std::vector<Factor>(factors))) {}

PauliString PauliString::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].first == factors[i - 1].first) {
      throw Error(ErrorCode::InvalidArgument,
                  "qubit " + std::to_string(factors[i].first) +
                      " listed twice in Pauli string");
    }
  }
  PauliString s;
  s.factors_ = std::move(factors);
  return s;
}

PauliString PauliString::single(std::size_t qubit, Axis axis) {
  PauliString s;
  s.factors_.emplace_back(qubit, axis);
  return s;
}

PauliString PauliString::from_masks(std::uint64_t x, std::uint64_t z) {
  PauliString s;
  for (std::size_t q = 0; q < 64; ++q) {
    const bool xb = (x >> q) & 1U;
    const bool zb = (z >> q) & 1U;
    if (xb && zb) s.factors_.emplace_back(q, Axis::Y);
    else if (xb) s.factors_.emplace_back(q, Axis::X);
    else if (zb) s.factors_.emplace_back(q, Axis::Z);
  }
  return s;
}

std::size_t PauliString::width() const noexcept {
  return factors_.empty() ? 0 : factors_.back().first + 1;
}

std::optional<Axis> PauliString::axis_at(std::size_t qubit) const {
  for (const auto& [q, a] : factors_) {
    if (q == qubit) return a;
    if (q > qubit) break;
  }
  return std::nullopt;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.first);
  return out;
}

std::uint64_t PauliString::x_mask() const noexcept {
  std::uint64_t m = 0;
  for (const auto& [q, a] : factors_) {
    if (a != Axis::Z) m |= std::uint64_t{1} << q;
  }
  return m;
}

std::uint64_t PauliString::z_mask() const noexcept {
  std::uint64_t m = 0;
  for (const auto& [q, a] : factors_) {
    if (a != Axis::X) m |= std::uint64_t{1} << q;
  }
  return m;
}

bool PauliString::commutes_with(const PauliString& other) const noexcept {
  std::size_t anti = 0;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      if (i->second != j->second) ++anti;
      ++i;
      ++j;
    }
  }
  return anti % 2 == 0;
}

std::string PauliString::to_string() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (const auto& [q, a] : factors_) {
    if (!out.empty()) out += '*';
    out += axis_letter(a);
    out += '(' + std::to_string(q) + ')';
  }
  return out;
}

namespace {

// Single-qubit product a*b = phase * c, with c absent when a == b.
std::pair<Complex, std::optional<Axis>> multiply_axes(Axis a, Axis b) {
  if (a == b) return {1.0, std::nullopt};
  const int ai = static_cast<int>(a);
  const int bi = static_cast<int>(b);
  const auto c = static_cast<Axis>(6 - ai - bi);
  // XY = iZ, YZ = iX, ZX = iY; reversed order flips the sign.
  const bool cyclic = ((bi - ai + 3) % 3) == 1;
  return {cyclic ? Complex(0, 1) : Complex(0, -1), c};
}

}  // namespace

std::pair<Complex, PauliString> multiply(const PauliString& a,
                                         const PauliString& b) {
  Complex phase = 1.0;
  std::vector<PauliString::Factor> out;
  out.reserve(a.weight() + b.weight());
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  const auto ie = a.factors().end();
  const auto je = b.factors().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == ie || j->first < i->first) {
      out.push_back(*j++);
    } else {
      auto [p, axis] = multiply_axes(i->second, j->second);
      phase *= p;
      if (axis) out.emplace_back(i->first, *axis);
      ++i;
      ++j;
    }
  }
  return {phase, PauliString::from_factors(std::move(out))};
}

// -------------------------------------------------------------- PauliOperator

PauliOperator::PauliOperator(Complex constant) {
  terms_.emplace(PauliString{}, constant);
  simplify();
}

PauliOperator::PauliOperator(const PauliString& string, Complex coeff) {
  terms_.emplace(string, coeff);
  simplify();
}

Complex PauliOperator::constant() const { return coefficient(PauliString{}); }

Complex PauliOperator::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

PauliOperator PauliOperator::without_constant() const {
  PauliOperator out = *this;
  out.terms_.erase(PauliString{});
  return out;
}

std::size_t PauliOperator::num_qubits() const noexcept {
  std::size_t n = 0;
  for (const auto& [s, c] : terms_) n = std::max(n, s.width());
  return n;
}

bool PauliOperator::is_hermitian() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::abs(t.second.imag()) < kPruneThreshold;
  });
}

double PauliOperator::l1_norm_without_constant() const noexcept {
  double sum = 0.0;
  for (const auto& [s, c] : terms_) {
    if (!s.is_identity()) sum += std::abs(c);
  }
  return sum;
}

PauliOperator& PauliOperator::simplify() {
  std::erase_if(terms_, [](const auto& t) {
    return std::abs(t.second) < kPruneThreshold;
  });
  return *this;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& rhs) {
  for (const auto& [s, c] : rhs.terms_) terms_[s] += c;
  return simplify();
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& rhs) {
  for (const auto& [s, c] : rhs.terms_) terms_[s] -= c;
  return simplify();
}

PauliOperator& PauliOperator::operator*=(Complex scalar) {
  for (auto& [s, c] : terms_) c *= scalar;
  return simplify();
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
  *this = *this * rhs;
  return *this;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  PauliOperator out;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      auto [phase, s] = multiply(sa, sb);
      out.terms_[s] += ca * cb * phase;
    }
  }
  out.simplify();
  return out;
}

bool PauliOperator::approx_equal(const PauliOperator& other, double tol) const {
  PauliOperator diff = *this - other;
  return std::all_of(diff.terms_.begin(), diff.terms_.end(),
                     [tol](const auto& t) { return std::abs(t.second) <= tol; });
}

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string PauliOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    std::string coeff;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = std::signbit(c.real());
      const double mag = std::abs(c.real());
      if (!(mag == 1.0 && !s.is_identity())) coeff = format_real(mag);
    } else {
      coeff = "(" + format_real(c.real()) + "," + format_real(c.imag()) + ")";
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (s.is_identity()) {
      out += coeff;
    } else if (coeff.empty()) {
      out += s.to_string();
    } else {
      out += coeff + "*" + s.to_string();
    }
  }
  return out;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  return a * b - b * a;
}

// ------------------------------------------------------------------- parsing

namespace {

class OperatorParser {
 public:
  explicit OperatorParser(std::string_view text) : text_(text) {}

  PauliOperator parse_all() {
    PauliOperator result = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  PauliOperator expression() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    PauliOperator result;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    PauliOperator t = term();
    result += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        break;
      }
    }
    return result;
  }

  PauliOperator term() {
    PauliOperator result = factor();
    while (accept('*')) result = result * factor();
    return result;
  }

  // Unsigned real literal, optionally followed by 'j' for imaginary.
  std::optional<Complex> number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size()) {
      pos_ = start;
      fail("malformed number '" + literal + "'");
    }
    if (pos_ < text_.size() && text_[pos_] == 'j') {
      ++pos_;
      return Complex(0.0, v);
    }
    return Complex(v, 0.0);
  }

  std::optional<double> signed_real() {
    skip_ws();
    const std::size_t save = pos_;
    double sign = 1.0;
    if (accept('-')) sign = -1.0;
    else accept('+');
    auto v = number();
    if (!v || v->imag() != 0.0) {
      pos_ = save;
      return std::nullopt;
    }
    return sign * v->real();
  }

  std::size_t qubit_index() {
    expect('(');
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected qubit index");
    expect(')');
    return value;
  }

  PauliOperator factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected factor");
    const char c = text_[pos_];
    if (c == 'X' || c == 'Y' || c == 'Z') {
      ++pos_;
      const Axis a = c == 'X' ? Axis::X : (c == 'Y' ? Axis::Y : Axis::Z);
      return PauliOperator(PauliString::single(qubit_index(), a));
    }
    if (c == 'I') {
      ++pos_;
      if (peek('(')) (void)qubit_index();
      return PauliOperator(1.0);
    }
    if (c == '(') {
      ++pos_;
      // Complex pair "(re,im)" or parenthesized sub-expression.
      const std::size_t save = pos_;
      if (auto re = signed_real()) {
        if (accept(',')) {
          auto im = signed_real();
          if (!im) fail("expected imaginary part");
          expect(')');
          return PauliOperator(Complex(*re, *im));
        }
      }
      pos_ = save;
      PauliOperator inner = expression();
      expect(')');
      return inner;
    }
    if (auto v = number()) return PauliOperator(*v);
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

PauliOperator PauliOperator::parse(std::string_view text) {
  return OperatorParser(text).parse_all();
}

PauliOperator load_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open operator file '" + path + "'");
  std::string line;
  std::string body;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body += line + '\n';
  }
  return PauliOperator::parse(body);
}

// --------------------------------------------------------------- dense forms

namespace {

Eigen::Matrix2cd single_qubit_matrix(std::optional<Axis> a) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  if (!a) {
    m << 1, 0, 0, 1;
  } else if (*a == Axis::X) {
    m << 0, 1, 1, 0;
  } else if (*a == Axis::Y) {
    m << 0, -1i, 1i, 0;
  } else {
    m << 1, 0, 0, -1;
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd to_matrix(const PauliOperator& op, std::size_t num_qubits) {
  if (num_qubits > 12) {
    throw Error(ErrorCode::TooManyQubits,
                "to_matrix supports at most 12 qubits, got " + std::to_string(num_qubits));
  }
  if (op.num_qubits() > num_qubits) {
    throw Error(ErrorCode::IndexTooLarge,
                "operator references qubit " + std::to_string(op.num_qubits() - 1) +
                    " but n = " + std::to_string(num_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [s, c] : op.terms()) {
    // Highest qubit is the leftmost Kronecker factor.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = num_qubits; q-- > 0;) {
      Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, single_qubit_matrix(s.axis_at(q))).eval();
      m = std::move(next);
    }
    out += c * m;
  }
  return out;
}

Eigen::VectorXd eigenvalues(const PauliOperator& op, std::size_t num_qubits) {
  if (!op.is_hermitian()) {
    throw Error(ErrorCode::NonHermitian, "eigenvalues require a Hermitian operator");
  }
  const Eigen::MatrixXcd m = to_matrix(op, num_qubits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace quasimo
