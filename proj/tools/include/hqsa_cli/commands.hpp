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
#ifndef HQSA_CLI_COMMANDS_HPP_
#define HQSA_CLI_COMMANDS_HPP_

#include <exception>
#include <filesystem>
#include <optional>

#include <json.hpp>

#include "hqsa_cli/report.hpp"

namespace hqsa::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kValidationError = 3,
  kCapacityError = 4,
  kIoError = 5,
};

int exit_code_for(const std::exception& e) noexcept;

// HQSA_THREADS if set to a positive integer, otherwise 1.
unsigned default_threads();

struct RunCommand {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::size_t repetitions = 1;
  bool keep_log = true;
};

RunReport cmd_run(const RunCommand& c);
nlohmann::ordered_json cmd_ntraps(double theta, double alpha);
nlohmann::ordered_json cmd_invert_check(const std::filesystem::path& fixture, double t);

nlohmann::ordered_json cmd_oracle_vd(const std::filesystem::path& a, const std::filesystem::path& b);
// Exact enumeration when the register allows it and samples == 0.
nlohmann::ordered_json cmd_oracle_p_inco(const std::filesystem::path& config, std::size_t samples,
                                         std::uint64_t seed, unsigned threads);
nlohmann::ordered_json cmd_oracle_detect(const std::filesystem::path& config, std::size_t samples,
                                         std::uint64_t seed, unsigned threads);
nlohmann::ordered_json cmd_oracle_twirl(const std::filesystem::path& channel);
nlohmann::ordered_json cmd_oracle_bound(const std::filesystem::path& config, unsigned threads);
nlohmann::ordered_json cmd_oracle_dist(const std::filesystem::path& config, bool ideal);

}  // namespace hqsa::cli

#endif  // HQSA_CLI_COMMANDS_HPP_
