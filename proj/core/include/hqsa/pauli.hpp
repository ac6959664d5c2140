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

/**
 * @file    pauli.hpp
 * @brief   Symbolic Pauli strings and real-weighted Pauli sums.
 *
 * Positions inside a PauliString are 0-based: position q-1 holds the letter
 * acting on qubit q. Qubit 1 is the most significant bit of a computational
 * basis index, so to_matrix() is letter(0) ⊗ letter(1) ⊗ ... .
 */

#ifndef HQSA_PAULI_HPP_
#define HQSA_PAULI_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hqsa {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter p) noexcept;
PauliLetter letter_from_char(char c);  // throws std::invalid_argument

// 2x2 matrix of a single letter.
Eigen::Matrix2cd letter_matrix(PauliLetter p);

// Product a*b = i^phase * letter, phase in {0,1,2,3}.
struct LetterProduct {
  std::uint8_t phase;
  PauliLetter letter;
};
LetterProduct multiply(PauliLetter a, PauliLetter b) noexcept;

struct SignedLetter {
  int sign;  // +1 or -1
  PauliLetter letter;
};

// by * target * by^dagger. Distinct non-identity letters anticommute and
// pick up a -1; everything else commutes.
SignedLetter conjugate_letter(PauliLetter target, PauliLetter by) noexcept;

// Phase i^k times a tensor product of letters.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<PauliLetter> letters, std::uint8_t phase = 0);

  // Parses "XXI", optionally prefixed by "+", "-", "i", "+i" or "-i".
  static PauliString parse(std::string_view text);
  static PauliString identity(std::size_t n);
  // Single letter at 0-based position pos, identity elsewhere.
  static PauliString single(std::size_t n, std::size_t pos, PauliLetter p);

  std::size_t size() const noexcept { return letters_.size(); }
  PauliLetter operator[](std::size_t pos) const { return letters_[pos]; }
  const std::vector<PauliLetter>& letters() const noexcept { return letters_; }

  // Exponent k of the phase i^k, k in {0,1,2,3}.
  std::uint8_t phase() const noexcept { return phase_; }
  std::complex<double> phase_value() const noexcept;

  PauliString with_phase(std::uint8_t k) const;
  PauliString adjoint() const;
  bool is_identity() const noexcept;
  std::size_t weight() const noexcept;

  // Letters only, no phase ("XIZ").
  std::string letters_string() const;
  // Phase-prefixed form, e.g. "-iXIZ".
  std::string to_string() const;

  Eigen::MatrixXcd to_matrix() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<PauliLetter> letters_;
  std::uint8_t phase_ = 0;
};

// by * target * by^dagger, with the phase tracked exactly.
PauliString conjugate_string(const PauliString& target, const PauliString& by);

// True iff the two strings commute (phases ignored).
bool commutes(const PauliString& a, const PauliString& b);

// Hermitian operator sum_k c_k P_k with real c_k and phase-free P_k.
// Terms are keyed by their letter sequence and kept in lexicographic order
// (I < X < Y < Z); coefficients with |c| <= merge_tolerance are dropped.
class WeightedPauliSum {
 public:
  static constexpr double merge_tolerance = 1e-12;

  struct Term {
    double coefficient;
    PauliString string;
  };

  WeightedPauliSum() = default;
  explicit WeightedPauliSum(std::size_t qubit_count);

  std::size_t qubit_count() const noexcept { return qubit_count_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // Adds coefficient * string. A string phase of +-1 folds into the
  // coefficient; a phase of +-i would make the sum non-Hermitian and throws.
  void add(double coefficient, const PauliString& string);
  void add(double coefficient, std::string_view letters);

  // Coefficient of the given letter sequence (0 if absent).
  double coefficient(std::string_view letters) const;

  std::vector<Term> terms() const;

  WeightedPauliSum operator-() const;
  WeightedPauliSum& operator+=(const WeightedPauliSum& other);
  WeightedPauliSum scaled(double factor) const;

  // Exact term-for-term equality (same keys, bitwise-equal coefficients).
  friend bool operator==(const WeightedPauliSum&, const WeightedPauliSum&) = default;
  bool approx_equal(const WeightedPauliSum& other, double tol) const;

  std::string to_string() const;

 private:
  std::size_t qubit_count_ = 0;
  std::map<std::string, double> terms_;
};

WeightedPauliSum conjugate_sum(const WeightedPauliSum& h, const PauliString& by);

// Qubit cap for symbolic-to-matrix realization.
inline constexpr std::size_t kMatrixQubitCap = 12;

// Dense 2^N x 2^N Hermitian matrix. Throws CapacityError above the cap.
Eigen::MatrixXcd to_matrix(const WeightedPauliSum& h);

// Parses the textual fixture format: one "<coeff> <letters>" term per line,
// '#' starts a comment, blank lines ignored. All strings must share a length.
WeightedPauliSum parse_pauli_sum(std::string_view text);
std::string format_pauli_sum(const WeightedPauliSum& h);

}  // namespace hqsa

#endif  // HQSA_PAULI_HPP_
