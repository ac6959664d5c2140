// Copyright 2026 The hqsa Authors
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

#include "hqsa/pauli.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hqsa/errors.hpp"

namespace hqsa {

namespace {

using cd = std::complex<double>;

constexpr cd kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

char to_char(PauliLetter p) noexcept { return "IXYZ"[static_cast<int>(p)]; }

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
  }
}

Eigen::Matrix2cd letter_matrix(PauliLetter p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

LetterProduct multiply(PauliLetter a, PauliLetter b) noexcept {
  if (a == PauliLetter::I) return {0, b};
  if (b == PauliLetter::I) return {0, a};
  if (a == b) return {0, PauliLetter::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto third = static_cast<PauliLetter>(6 - ia - ib);
  // Cyclic order X -> Y -> Z -> X gives +i, anticyclic gives -i.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {static_cast<std::uint8_t>(cyclic ? 1 : 3), third};
}

SignedLetter conjugate_letter(PauliLetter target, PauliLetter by) noexcept {
  const bool anticommute =
      target != PauliLetter::I && by != PauliLetter::I && target != by;
  return {anticommute ? -1 : 1, target};
}

PauliString::PauliString(std::vector<PauliLetter> letters, std::uint8_t phase)
    : letters_(std::move(letters)), phase_(static_cast<std::uint8_t>(phase & 3U)) {}

PauliString PauliString::parse(std::string_view text) {
  text = trim(text);
  std::uint8_t phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = static_cast<std::uint8_t>((phase + 1) & 3U);
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  std::vector<PauliLetter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c));
  return PauliString(std::move(letters), phase);
}

PauliString PauliString::identity(std::size_t n) {
  return PauliString(std::vector<PauliLetter>(n, PauliLetter::I));
}

PauliString PauliString::single(std::size_t n, std::size_t pos, PauliLetter p) {
  if (pos >= n) throw DimensionError("Pauli position out of range");
  std::vector<PauliLetter> letters(n, PauliLetter::I);
  letters[pos] = p;
  return PauliString(std::move(letters));
}

std::complex<double> PauliString::phase_value() const noexcept { return kPhases[phase_]; }

PauliString PauliString::with_phase(std::uint8_t k) const { return PauliString(letters_, k); }

PauliString PauliString::adjoint() const {
  // Letters are Hermitian, so only the phase conjugates.
  return PauliString(letters_, static_cast<std::uint8_t>((4 - phase_) & 3U));
}

bool PauliString::is_identity() const noexcept { return weight() == 0; }

std::size_t PauliString::weight() const noexcept {
  std::size_t w = 0;
  for (auto p : letters_) w += p != PauliLetter::I;
  return w;
}

std::string PauliString::letters_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto p : letters_) s.push_back(to_char(p));
  return s;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  return kPrefix[phase_] + letters_string();
}

Eigen::MatrixXcd PauliString::to_matrix() const {
  if (letters_.size() > kMatrixQubitCap) {
    throw CapacityError("Pauli string matrix", letters_.size(), kMatrixQubitCap);
  }
  // Each row of a Pauli string matrix has exactly one nonzero entry.
  const std::size_t dim = std::size_t{1} << letters_.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    std::size_t col = 0;
    cd value = phase_value();
    for (std::size_t q = 0; q < letters_.size(); ++q) {
      const std::size_t shift = letters_.size() - 1 - q;
      const std::size_t bit = (row >> shift) & 1U;
      std::size_t cbit = bit;
      switch (letters_[q]) {
        case PauliLetter::I: break;
        case PauliLetter::X: cbit ^= 1U; break;
        case PauliLetter::Y:
          cbit ^= 1U;
          value *= bit == 0 ? cd(0, -1) : cd(0, 1);
          break;
        case PauliLetter::Z:
          if (bit == 1) value = -value;
          break;
      }
      col |= cbit << shift;
    }
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
  }
  return m;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw DimensionError("Pauli string length mismatch");
  std::vector<PauliLetter> letters(a.size());
  unsigned phase = a.phase_ + b.phase_;
  for (std::size_t q = 0; q < a.size(); ++q) {
    const auto prod = multiply(a.letters_[q], b.letters_[q]);
    letters[q] = prod.letter;
    phase += prod.phase;
  }
  return PauliString(std::move(letters), static_cast<std::uint8_t>(phase & 3U));
}

PauliString conjugate_string(const PauliString& target, const PauliString& by) {
  if (target.size() != by.size()) throw DimensionError("Pauli string length mismatch");
  int sign = 1;
  for (std::size_t q = 0; q < target.size(); ++q) {
    sign *= conjugate_letter(target[q], by[q]).sign;
  }
  const unsigned phase = target.phase() + (sign < 0 ? 2U : 0U);
  return target.with_phase(static_cast<std::uint8_t>(phase & 3U));
}

bool commutes(const PauliString& a, const PauliString& b) {
  return conjugate_string(a, b).phase() == a.phase();
}

WeightedPauliSum::WeightedPauliSum(std::size_t qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count == 0) throw DimensionError("Pauli sum needs at least one qubit");
}

void WeightedPauliSum::add(double coefficient, const PauliString& string) {
  if (string.size() != qubit_count_) throw DimensionError("Pauli string length mismatch");
  if (!std::isfinite(coefficient)) throw std::invalid_argument("non-finite coefficient");
  if (string.phase() % 2 != 0) {
    throw std::invalid_argument("imaginary phase on a Hermitian sum term: " +
                                string.to_string());
  }
  if (string.phase() == 2) coefficient = -coefficient;
  const auto key = string.letters_string();
  const double merged = terms_[key] + coefficient;
  if (std::abs(merged) <= merge_tolerance) {
    terms_.erase(key);
  } else {
    terms_[key] = merged;
  }
}

void WeightedPauliSum::add(double coefficient, std::string_view letters) {
  add(coefficient, PauliString::parse(letters));
}

double WeightedPauliSum::coefficient(std::string_view letters) const {
  const auto it = terms_.find(std::string(letters));
  return it == terms_.end() ? 0.0 : it->second;
}

std::vector<WeightedPauliSum::Term> WeightedPauliSum::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, PauliString::parse(key)});
  return out;
}

WeightedPauliSum WeightedPauliSum::operator-() const { return scaled(-1.0); }

WeightedPauliSum& WeightedPauliSum::operator+=(const WeightedPauliSum& other) {
  if (other.qubit_count_ != qubit_count_) throw DimensionError("Pauli sum size mismatch");
  for (const auto& [key, c] : other.terms_) add(c, PauliString::parse(key));
  return *this;
}

WeightedPauliSum WeightedPauliSum::scaled(double factor) const {
  WeightedPauliSum out(qubit_count_);
  for (const auto& [key, c] : terms_) {
    if (std::abs(c * factor) > merge_tolerance) out.terms_[key] = c * factor;
  }
  return out;
}

bool WeightedPauliSum::approx_equal(const WeightedPauliSum& other, double tol) const {
  if (other.qubit_count_ != qubit_count_) return false;
  for (const auto& [key, c] : terms_) {
    if (std::abs(c - other.coefficient(key)) > tol) return false;
  }
  for (const auto& [key, c] : other.terms_) {
    if (std::abs(c - coefficient(key)) > tol) return false;
  }
  return true;
}

std::string WeightedPauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    os << std::abs(c) << "*" << key;
    first = false;
  }
  return os.str();
}

WeightedPauliSum conjugate_sum(const WeightedPauliSum& h, const PauliString& by) {
  if (by.size() != h.qubit_count()) throw DimensionError("conjugator length mismatch");
  WeightedPauliSum out(h.qubit_count());
  for (const auto& term : h.terms()) {
    out.add(term.coefficient, conjugate_string(term.string, by));
  }
  return out;
}

Eigen::MatrixXcd to_matrix(const WeightedPauliSum& h) {
  const std::size_t n = h.qubit_count();
  if (n > kMatrixQubitCap) throw CapacityError("Pauli sum matrix", n, kMatrixQubitCap);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms()) m += term.coefficient * term.string.to_matrix();
  return m;
}

WeightedPauliSum parse_pauli_sum(std::string_view text) {
  WeightedPauliSum out;
  bool sized = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto body = trim(line);
    if (body.empty()) continue;
    const std::size_t column = static_cast<std::size_t>(body.data() - line.data()) + 1;

    const auto split = body.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError("expected '<coeff> <letters>'", line_no, column);
    }
    const auto coeff_text = body.substr(0, split);
    const auto letters = trim(body.substr(split));
    double coeff = 0.0;
    const auto [ptr, ec] =
        std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
    if (ec != std::errc() || ptr != coeff_text.data() + coeff_text.size()) {
      throw ParseError("bad coefficient '" + std::string(coeff_text) + "'", line_no, column);
    }
    const std::size_t letters_column =
        static_cast<std::size_t>(letters.data() - line.data()) + 1;
    PauliString string;
    try {
      string = PauliString::parse(letters);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, letters_column);
    }
    if (!sized) {
      out = WeightedPauliSum(string.size());
      sized = true;
    } else if (string.size() != out.qubit_count()) {
      throw ParseError("inconsistent Pauli string length", line_no, letters_column);
    }
    try {
      out.add(coeff, string);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, letters_column);
    }
  }
  if (!sized) throw ParseError("Pauli sum has no terms", 0, 0);
  return out;
}

std::string format_pauli_sum(const WeightedPauliSum& h) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& term : h.terms()) {
    os << term.coefficient << ' ' << term.string.letters_string() << '\n';
  }
  return os.str();
}

}  // namespace hqsa
