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

#ifndef HQSA_TRAP_TARGET_HPP_
#define HQSA_TRAP_TARGET_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hqsa/hamiltonian.hpp"
#include "hqsa/hqs_model.hpp"
#include "hqsa/inversion.hpp"
#include "hqsa/rng.hpp"

namespace hqsa {

// Input-preparation and measurement-basis gates of the simulation of
// interest. a_prime[k] and d_prime[k] act on qubit k+1.
struct TargetSpec {
  std::vector<Gate> a_prime;
  std::vector<Gate> d_prime;
  WeightedPauliSum hamiltonian;
  double t = 0.0;
};

// Identity B and C slots, identity encoding.
HqsCircuit build_target(const TargetSpec& spec);

// Randomness of one trap: shared Hadamard bit, a Pauli per qubit and two
// independent layers of optional Z gates.
struct TrapRandomness {
  bool h = false;
  std::vector<PauliLetter> p;
  std::vector<bool> z_prep;
  std::vector<bool> z_meas;

  std::size_t qubit_count() const noexcept { return p.size(); }

  // Packs the draw into an integer: bit 0 = h, then 2 bits per Pauli, then
  // z_prep and z_meas bits. Unique for n <= 15.
  std::uint64_t index() const;
  static TrapRandomness from_index(std::uint64_t index, std::size_t n);

  // Human-readable form, e.g. "h=1 P=XIZ zp=010 zm=001".
  std::string digest() const;

  friend bool operator==(const TrapRandomness&, const TrapRandomness&) = default;
};

TrapRandomness draw_trap_randomness(std::size_t n, CounterRng& rng);

// Number of distinct draws, 2 * 4^n * 2^n * 2^n; each has probability
// 1 / trap_randomness_count(n).
std::uint64_t trap_randomness_count(std::size_t n);

// A_j = P_j H^h Z^zp_j, B_j = C_j = inversion letter, D_j = Z^zm_j H^h P_j
// (Z' acts first in A, last in D).
HqsCircuit build_trap(const AccreditableHamiltonian& h, double t, const TrapRandomness& r);
HqsCircuit build_trap(const AccreditableHamiltonian& h, const InversionCircuit& inversion, double t,
                      const TrapRandomness& r, std::shared_ptr<const Matrix> half_step = nullptr);

// The correct trap outcome is all zeros.
bool trap_is_correct(std::uint64_t outcome) noexcept;
bool trap_is_correct(const std::string& bits);

}  // namespace hqsa

#endif  // HQSA_TRAP_TARGET_HPP_
