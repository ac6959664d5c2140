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
 * @file    config.hpp
 * @brief   YAML run configuration and fixture loading.
 *
 * Grammar (all sections are mappings):
 *
 *   hamiltonian:
 *     lattice: [rows, cols]            # or graph: {vertices: n, edges: [[u, v], ...]}
 *     couplings: 1.0                   # or [{edge: [u, v], J: 0.5}, ...]
 *     onsite: 1.0                      # optional, XY model (inversion checks only)
 *   target:
 *     t: 0.8
 *     a_prime: [X, I, {theta: 1.0, phi: 0.0, lambda: 0.0}, ...]   # default all I
 *     d_prime: [...]
 *   protocol: {theta: 0.1, alpha: 0.9}
 *   error:
 *     mode: model_compliant            # or unconstrained
 *     channels:
 *       - {attach: evolution_2, kind: depolarizing, qubits: [1, 2], p: 0.1}
 *   seed: 42
 */
#ifndef HQSA_CLI_CONFIG_HPP_
#define HQSA_CLI_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include "hqsa/engine.hpp"
#include "hqsa/hamiltonian.hpp"
#include "hqsa/protocol.hpp"

namespace hqsa::cli {

struct LoadedConfig {
  ProtocolConfig protocol;
  nlohmann::ordered_json echo;  // the parsed document, for reports
};

// Throws ParseError (with line/column) on malformed documents and
// ValidationError on values outside their domain.
LoadedConfig parse_config(std::string_view text);
LoadedConfig load_config(const std::filesystem::path& path);

// Hamiltonian section alone; onsite selects the XY model.
AccreditableHamiltonian parse_hamiltonian(const YAML::Node& node);

// One channel entry (the attach key is ignored). n is the register size.
ErrorChannel parse_channel(const YAML::Node& node, std::size_t n,
                           const AccreditableHamiltonian* h = nullptr, double t = 0.0);

// Loads a Hamiltonian from a .paulis, .graph (uniform J = 1) or YAML file.
AccreditableHamiltonian load_hamiltonian_fixture(const std::filesystem::path& path);

// One probability per line, optionally preceded by its bitstring.
std::vector<double> parse_distribution(std::string_view text);
std::vector<double> load_distribution(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

nlohmann::ordered_json yaml_to_json(const YAML::Node& node);

}  // namespace hqsa::cli

#endif  // HQSA_CLI_CONFIG_HPP_
