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
#include "hqsa_cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <string>

#include <yaml-cpp/yaml.h>

#include "hqsa/errors.hpp"
#include "hqsa/inversion.hpp"
#include "hqsa/oracle.hpp"
#include "hqsa_cli/config.hpp"

namespace hqsa::cli {

namespace {

using json = nlohmann::ordered_json;

std::string pauli_label(std::size_t index, std::size_t k) {
  std::string s;
  for (std::size_t a = 0; a < k; ++a) s += "IXYZ"[(index >> (2 * (k - 1 - a))) & 3U];
  return s;
}

json chi_to_json(const Matrix& chi, std::size_t k) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < chi.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < chi.cols(); ++j) row.push_back({chi(i, j).real(), chi(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json labels = json::array();
  for (Eigen::Index i = 0; i < chi.rows(); ++i) labels.push_back(pauli_label(static_cast<std::size_t>(i), k));
  return {{"basis", std::move(labels)}, {"entries", std::move(rows)}};
}

json distribution_json(const std::vector<double>& p, std::size_t n) {
  json out = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) out[bitstring(i, n)] = p[i];
  return out;
}

}  // namespace

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const YAML::Exception*>(&e)) {
    return kParseError;
  }
  if (dynamic_cast<const CapacityError*>(&e)) return kCapacityError;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kValidationError;
  if (dynamic_cast<const std::runtime_error*>(&e)) return kIoError;
  return kCheckFailed;
}

unsigned default_threads() {
  if (const char* env = std::getenv("HQSA_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

RunReport cmd_run(const RunCommand& c) {
  const auto start = std::chrono::steady_clock::now();
  LoadedConfig loaded = load_config(c.config);
  if (c.seed) loaded.protocol.seed = *c.seed;
  if (c.repetitions == 0) throw ValidationError("repetitions must be positive");

  RunReport report;
  report.config = loaded.echo;
  report.seed = loaded.protocol.seed;
  report.results = run_batch(loaded.protocol, c.repetitions, {c.threads, c.keep_log});
  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json cmd_ntraps(double theta, double alpha) {
  return {{"theta", theta}, {"alpha", alpha}, {"n_traps", compute_n_traps(theta, alpha)}};
}

json cmd_invert_check(const std::filesystem::path& fixture, double t) {
  const auto h = load_hamiltonian_fixture(fixture);
  const auto circuit = synthesize_for(h);
  const bool symbolic = verify_inversion_symbolic(h.sum(), circuit);
  const double max_error = verify_inversion_numeric(h.sum(), circuit, t);
  return {{"fixture", fixture.filename().string()},
          {"qubits", h.qubit_count()},
          {"family", h.family() == HamiltonianFamily::xy ? "xy" : "xy_onsite"},
          {"hamiltonian", h.sum().to_string()},
          {"circuit", circuit.string.to_string()},
          {"basis", to_string(circuit.basis)},
          {"symbolic", symbolic},
          {"t", t},
          {"max_error", max_error},
          {"pass", symbolic && max_error <= 1e-9}};
}

json cmd_oracle_vd(const std::filesystem::path& a, const std::filesystem::path& b) {
  return {{"vd", variation_distance(load_distribution(a), load_distribution(b))}};
}

json cmd_oracle_p_inco(const std::filesystem::path& config, std::size_t samples,
                       std::uint64_t seed, unsigned threads) {
  const auto cfg = load_config(config).protocol;
  const TrapOracle oracle(cfg.hamiltonian, cfg.target.t, cfg.error);
  if (samples == 0 && oracle.qubit_count() <= kEnumerationQubitCap) {
    return {{"method", "enumeration"},
            {"draws", trap_randomness_count(oracle.qubit_count())},
            {"p_inco", oracle.p_inco_exact(threads)},
            {"std_error", 0.0}};
  }
  const std::size_t n_samples = samples == 0 ? 2000 : samples;
  const auto est = oracle.p_inco_monte_carlo(n_samples, seed, threads);
  return {{"method", "monte_carlo"},
          {"draws", n_samples},
          {"seed", seed},
          {"p_inco", est.value},
          {"std_error", est.std_error}};
}

json cmd_oracle_detect(const std::filesystem::path& config, std::size_t samples,
                       std::uint64_t seed, unsigned threads) {
  const auto cfg = load_config(config).protocol;
  const auto est =
      detection_rate_empirical(cfg.hamiltonian, cfg.target.t, cfg.error, samples, seed, threads);
  return {{"samples", samples}, {"seed", seed}, {"rate", est.value}, {"std_error", est.std_error}};
}

json cmd_oracle_twirl(const std::filesystem::path& channel) {
  const YAML::Node doc = YAML::Load(read_file(channel));
  std::size_t n = 0;
  if (const auto reg = doc["register"]) {
    n = reg.as<std::size_t>();
  } else if (const auto qs = doc["qubits"]; qs && qs.IsSequence()) {
    for (const auto& q : qs) n = std::max(n, q.as<std::size_t>());
  }
  if (n == 0) throw ValidationError("channel fixture needs 'qubits' or 'register'");
  YAML::Node entry = YAML::Clone(doc);
  entry.remove("register");
  const auto e = parse_channel(entry, n);
  const auto support = e.support(n);
  const std::size_t k = std::max<std::size_t>(support.size(), 1);
  const Matrix before = process_matrix(e, n);
  const Matrix after = process_matrix(twirl(e, n), n);
  json probs = json::object();
  for (Eigen::Index m = 0; m < after.rows(); ++m) {
    probs[pauli_label(static_cast<std::size_t>(m), k)] = after(m, m).real();
  }
  return {{"channel", e.label()},
          {"support", support},
          {"max_off_diagonal_before", max_off_diagonal(before)},
          {"max_off_diagonal_after", max_off_diagonal(after)},
          {"diagonal", max_off_diagonal(after) <= 1e-9},
          {"pauli_probabilities", std::move(probs)},
          {"chi_before", chi_to_json(before, k)},
          {"chi_after", chi_to_json(after, k)}};
}

json cmd_oracle_bound(const std::filesystem::path& config, unsigned threads) {
  const auto cfg = load_config(config).protocol;
  const auto r = validate_bound(cfg, threads);
  return {{"vd_exact", r.vd_exact},
          {"p_inco", r.p_inco},
          {"epsilon_exact", r.epsilon_exact},
          {"holds", r.holds}};
}

json cmd_oracle_dist(const std::filesystem::path& config, bool ideal) {
  const auto cfg = load_config(config).protocol;
  const auto n = cfg.hamiltonian.qubit_count();
  const auto p = target_distribution(cfg.target, ideal ? ErrorConfig(cfg.error.mode()) : cfg.error);
  return {{"qubits", n}, {"ideal", ideal}, {"distribution", distribution_json(p, n)}};
}

}  // namespace hqsa::cli
