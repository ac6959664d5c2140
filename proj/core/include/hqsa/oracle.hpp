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
 * @file    oracle.hpp
 * @brief   Brute-force ground truth for the accreditation checks.
 *
 * Trap and target circuits are re-simulated here directly from engine
 * primitives, one gate at a time, without going through hqs_model or
 * trap_target builders.
 */

#ifndef HQSA_ORACLE_HPP_
#define HQSA_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hqsa/engine.hpp"
#include "hqsa/hamiltonian.hpp"
#include "hqsa/hqs_model.hpp"
#include "hqsa/inversion.hpp"
#include "hqsa/trap_target.hpp"

namespace hqsa {

// Largest register for which the trap randomness is enumerated exactly.
inline constexpr std::size_t kEnumerationQubitCap = 3;

// 1/2 * L1 distance. Throws DimensionError on length mismatch.
double variation_distance(std::span<const double> p, std::span<const double> q);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

class TrapOracle {
 public:
  TrapOracle(const AccreditableHamiltonian& h, double t, ErrorConfig error);

  std::size_t qubit_count() const noexcept { return n_; }

  // Output distribution of the trap for one randomness draw.
  std::vector<double> distribution(const TrapRandomness& r) const;
  // Probability of a non-zero outcome for one draw.
  double incorrect_probability(const TrapRandomness& r) const;

  // Expectation over all draws; requires n <= kEnumerationQubitCap.
  double p_inco_exact(unsigned threads = 1) const;
  // Exact per-draw probability averaged over `samples` random draws.
  Estimate p_inco_monte_carlo(std::size_t samples, std::uint64_t seed, unsigned threads = 1) const;
  // Fraction of sampled traps whose sampled outcome is non-zero.
  Estimate detection_rate(std::size_t samples, std::uint64_t seed, unsigned threads = 1) const;

 private:
  std::size_t n_;
  PauliString inversion_;
  Matrix half_step_;
  ErrorConfig error_;
};

// Target output distribution (A', D' layers, identity B/C), simulated
// gate by gate. Pass an error-free config for the ideal distribution.
std::vector<double> target_distribution(const TargetSpec& spec, const ErrorConfig& error);

// E over trap randomness of P(outcome != 0). Throws CapacityError above
// kEnumerationQubitCap.
double exact_p_inco(const AccreditableHamiltonian& h, double t, const ErrorConfig& error,
                    unsigned threads = 1);

// Monte-Carlo over trap randomness and measurement outcomes.
Estimate detection_rate_empirical(const AccreditableHamiltonian& h, double t,
                                  const ErrorConfig& error, std::size_t n_samples,
                                  std::uint64_t seed, unsigned threads = 1);

// Chi matrix: E(rho) = sum_mn chi_mn P_m rho P_n, Paulis ordered I,X,Y,Z per
// qubit with the first support qubit most significant. register_size
// resolves full-register channels; 0 uses the channel's explicit qubits.
Matrix process_matrix(const ErrorChannel& e, std::size_t register_size = 0);

// Uniform average of P E(P . P) P over the Paulis on the channel's support.
ErrorChannel twirl(const ErrorChannel& e, std::size_t register_size = 0);

// Largest |chi_mn| with m != n.
double max_off_diagonal(const Matrix& chi);

// Twirled-channel detection prediction: for a Pauli-diagonal chi on the
// whole register, 1/2 (P[x part != 0] + P[z part != 0]).
double predicted_detection(const Matrix& chi, std::size_t n);

struct TrapTargetComparison {
  double target_vd = 0.0;
  double min_trap_vd = 0.0;
  std::uint64_t worst_draw = 0;
  bool holds = false;  // every draw's trap VD >= target VD
};

// Per-draw comparison of trap-side and target-side variation distances.
TrapTargetComparison compare_trap_target(const AccreditableHamiltonian& h, const TargetSpec& target,
                                         const ErrorConfig& error, unsigned threads = 1);

}  // namespace hqsa

#endif  // HQSA_ORACLE_HPP_
