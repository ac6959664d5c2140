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

#ifndef HQSA_ERRORS_HPP_
#define HQSA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqsa {

// Operand shapes disagree (qubit counts, matrix sizes, layer lengths).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense representation would exceed the configured qubit cap.
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, std::size_t requested, std::size_t cap)
      : std::length_error(what + " (requested " + std::to_string(requested) +
                          " qubits, cap " + std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// Input is well-formed but violates a domain constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The interaction graph contains an odd cycle. The witness lists the cycle's
// vertices (1-based) in traversal order; consecutive entries and the
// last/first pair are edges.
class NotTwoColourable : public ValidationError {
 public:
  explicit NotTwoColourable(std::vector<int> odd_cycle);

  const std::vector<int>& odd_cycle() const noexcept { return odd_cycle_; }

 private:
  std::vector<int> odd_cycle_;
};

// Text input failed to parse. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hqsa

#endif  // HQSA_ERRORS_HPP_
