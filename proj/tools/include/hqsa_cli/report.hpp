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
 * @file    report.hpp
 * @brief   JSON run reports.
 *
 * Schema (top-level object, keys in this order):
 *   tool: "hqsa", version: string, config: object (parsed config echo),
 *   seed: integer, repetitions: integer, results: [ProtocolResult...],
 *   duration_seconds: number
 * ProtocolResult: target_outcome, target_index, n_traps, n_incorrect,
 *   epsilon, raw_estimate, theta, alpha, seed, runs: [{index, kind,
 *   randomness, outcome, correct}]
 */
#ifndef HQSA_CLI_REPORT_HPP_
#define HQSA_CLI_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "hqsa/protocol.hpp"

namespace hqsa::cli {

inline constexpr const char* kToolVersion = "0.3.0";

struct RunReport {
  std::string version = kToolVersion;
  nlohmann::ordered_json config;
  std::uint64_t seed = 0;
  std::vector<ProtocolResult> results;
  double duration_seconds = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::ordered_json to_json(const ProtocolResult& r);
ProtocolResult result_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::ordered_json& j);

// Report text with the timing field removed, for reproducibility checks.
std::string canonical_dump(const RunReport& r);

}  // namespace hqsa::cli

#endif  // HQSA_CLI_REPORT_HPP_
