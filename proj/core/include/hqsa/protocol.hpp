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
 * @file    protocol.hpp
 * @brief   Trap-based accreditation runs: trap count, scheduling, tally and epsilon.
 */
#ifndef HQSA_PROTOCOL_HPP_
#define HQSA_PROTOCOL_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hqsa/hamiltonian.hpp"
#include "hqsa/hqs_model.hpp"
#include "hqsa/inversion.hpp"
#include "hqsa/trap_target.hpp"

namespace hqsa {

// ceil((2 / theta^2) ln(2 / (1 - alpha))) + 1. Requires 0 < theta < 1 and
// 0 <= alpha < 1; throws ValidationError otherwise.
std::uint64_t compute_n_traps(double theta, double alpha);

struct ProtocolConfig {
  AccreditableHamiltonian hamiltonian;
  TargetSpec target;
  double theta = 0.1;
  double alpha = 0.9;
  std::uint64_t seed = 0;
  ErrorConfig error;
};

enum class RunKind { trap, target };
std::string to_string(RunKind k);

struct RunRecord {
  std::uint64_t index = 0;  // 1-based position in the schedule
  RunKind kind = RunKind::trap;
  std::string randomness;   // trap draw digest, empty for the target
  std::string outcome;
  bool correct = true;      // traps only; the target is always marked correct
};

struct ProtocolResult {
  std::string target_outcome;
  std::uint64_t target_index = 0;
  std::uint64_t n_traps = 0;
  std::uint64_t n_incorrect = 0;
  double epsilon = 0.0;       // min(1, 2 n_incorrect / n_traps + theta)
  double raw_estimate = 0.0;  // 2 n_incorrect / n_traps
  double theta = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::vector<RunRecord> runs;

  friend bool operator==(const ProtocolResult&, const ProtocolResult&) = default;
};

bool operator==(const RunRecord& a, const RunRecord& b);

// Uniform over [1, n_traps + 1], drawn from substream 0 of the seed.
std::uint64_t choose_target_index(std::uint64_t seed, std::uint64_t n_traps);

struct RunOptions {
  unsigned threads = 1;
  bool keep_log = true;
};

// Validates once, then runs any number of executions sharing the exact
// trap and target distributions.
class ProtocolRunner {
 public:
  explicit ProtocolRunner(ProtocolConfig cfg);

  const ProtocolConfig& config() const noexcept { return cfg_; }
  std::uint64_t n_traps() const noexcept { return n_traps_; }
  const std::vector<double>& target_distribution() const noexcept { return target_dist_; }

  // Exact output distribution of one trap under the configured error.
  std::shared_ptr<const std::vector<double>> trap_distribution(const TrapRandomness& r) const;

  ProtocolResult run(std::uint64_t seed, const RunOptions& opt = {}) const;

 private:
  ProtocolConfig cfg_;
  std::size_t n_ = 0;
  std::uint64_t n_traps_ = 0;
  InversionCircuit inversion_;
  std::shared_ptr<const Matrix> half_step_;
  std::vector<double> target_dist_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const std::vector<double>>> memo_;
};

ProtocolResult run_protocol(const ProtocolConfig& cfg, const RunOptions& opt = {});

// Repetition k uses seed + k, so repetition 0 reproduces run_protocol.
std::vector<ProtocolResult> run_batch(const ProtocolConfig& cfg, std::size_t repetitions,
                                      const RunOptions& opt = {});

struct BoundReport {
  double vd_exact = 0.0;
  double p_inco = 0.0;
  double epsilon_exact = 0.0;  // 2 p_inco
  bool holds = false;          // vd_exact <= epsilon_exact
};

// Brute force; requires n <= kEnumerationQubitCap.
BoundReport validate_bound(const ProtocolConfig& cfg, unsigned threads = 1);

}  // namespace hqsa

#endif  // HQSA_PROTOCOL_HPP_
