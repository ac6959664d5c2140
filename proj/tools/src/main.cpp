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
// hqsa: accreditation runs, inversion checks and brute-force oracles.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hqsa/engine.hpp"
#include "hqsa_cli/commands.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace cli = hqsa::cli;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text << '\n';
}

std::string as_dist_text(const json& report) {
  std::ostringstream ss;
  ss << std::setprecision(17);
  for (const auto& [bits, p] : report.at("distribution").items()) ss << bits << ' ' << p.get<double>() << '\n';
  std::string s = ss.str();
  if (!s.empty()) s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hqsa: trap-based accreditation of analogue quantum simulators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kToolVersion);

  std::string out_path;
  unsigned threads = cli::default_threads();
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
    sub->add_option("--threads", threads, "Worker threads (default: HQSA_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));
  };

  cli::RunCommand run;
  std::uint64_t seed_override = 0;
  bool no_log = false;
  auto* run_cmd = app.add_subcommand("run", "Execute the protocol from a config file");
  run_cmd->add_option("--config", run.config, "YAML configuration")->required()->check(CLI::ExistingFile);
  auto* seed_opt = run_cmd->add_option("--seed", seed_override, "Master seed (overrides the config)");
  run_cmd->add_option("--repetitions", run.repetitions, "Independent protocol executions")
      ->check(CLI::PositiveNumber);
  run_cmd->add_flag("--no-log", no_log, "Omit the per-run log from the report");
  add_common(run_cmd);

  double theta = 0.0;
  double alpha = 0.0;
  auto* ntraps_cmd = app.add_subcommand("ntraps", "Print the number of trap runs");
  ntraps_cmd->add_option("theta", theta, "Accuracy")->required();
  ntraps_cmd->add_option("alpha", alpha, "Confidence")->required();
  add_common(ntraps_cmd);

  std::string fixture;
  double check_time = 0.7;
  auto* invert_cmd = app.add_subcommand("invert-check", "Synthesize and verify the inversion circuit");
  invert_cmd->add_option("fixture", fixture, ".paulis, .graph or YAML Hamiltonian")
      ->required()
      ->check(CLI::ExistingFile);
  invert_cmd->add_option("--time", check_time, "Evolution time for the numeric check");
  add_common(invert_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle_cmd->require_subcommand(1);

  std::string dist_a;
  std::string dist_b;
  auto* vd_cmd = oracle_cmd->add_subcommand("vd", "Variation distance between two .dist files");
  vd_cmd->add_option("a", dist_a)->required()->check(CLI::ExistingFile);
  vd_cmd->add_option("b", dist_b)->required()->check(CLI::ExistingFile);
  add_common(vd_cmd);

  std::string oracle_config;
  std::size_t samples = 0;
  std::uint64_t oracle_seed = 1;
  auto* pinco_cmd = oracle_cmd->add_subcommand("p-inco", "Trap failure probability");
  pinco_cmd->add_option("--config", oracle_config)->required()->check(CLI::ExistingFile);
  pinco_cmd->add_option("--samples", samples, "Monte-Carlo draws (0: enumerate when possible)");
  pinco_cmd->add_option("--seed", oracle_seed);
  add_common(pinco_cmd);

  std::size_t detect_samples = 10000;
  auto* detect_cmd = oracle_cmd->add_subcommand("detect", "Empirical detection rate of trap runs");
  detect_cmd->add_option("--config", oracle_config)->required()->check(CLI::ExistingFile);
  detect_cmd->add_option("--samples", detect_samples)->check(CLI::PositiveNumber);
  detect_cmd->add_option("--seed", oracle_seed);
  add_common(detect_cmd);

  std::string channel_path;
  auto* twirl_cmd = oracle_cmd->add_subcommand("twirl", "Process matrix before and after Pauli twirling");
  twirl_cmd->add_option("channel", channel_path, "YAML channel fixture")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(twirl_cmd);

  auto* bound_cmd = oracle_cmd->add_subcommand("bound", "Exact VD against 2 p_inco for the target");
  bound_cmd->add_option("--config", oracle_config)->required()->check(CLI::ExistingFile);
  add_common(bound_cmd);

  bool ideal = false;
  bool dist_format = false;
  auto* dist_cmd = oracle_cmd->add_subcommand("dist", "Exact target output distribution");
  dist_cmd->add_option("--config", oracle_config)->required()->check(CLI::ExistingFile);
  dist_cmd->add_flag("--ideal", ideal, "Ignore the configured errors");
  dist_cmd->add_flag("--as-dist", dist_format, "Print in .dist format");
  add_common(dist_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kParseError;
  }

  try {
    if (run_cmd->parsed()) {
      if (seed_opt->count() > 0) run.seed = seed_override;
      run.threads = threads;
      run.keep_log = !no_log;
      emit(cli::to_json(cli::cmd_run(run)).dump(2), out_path);
    } else if (ntraps_cmd->parsed()) {
      emit(cli::cmd_ntraps(theta, alpha).dump(2), out_path);
    } else if (invert_cmd->parsed()) {
      const auto report = cli::cmd_invert_check(fixture, check_time);
      emit(report.dump(2), out_path);
      return report.at("pass").get<bool>() ? cli::kOk : cli::kCheckFailed;
    } else if (vd_cmd->parsed()) {
      emit(cli::cmd_oracle_vd(dist_a, dist_b).dump(2), out_path);
    } else if (pinco_cmd->parsed()) {
      emit(cli::cmd_oracle_p_inco(oracle_config, samples, oracle_seed, threads).dump(2), out_path);
    } else if (detect_cmd->parsed()) {
      emit(cli::cmd_oracle_detect(oracle_config, detect_samples, oracle_seed, threads).dump(2),
           out_path);
    } else if (twirl_cmd->parsed()) {
      emit(cli::cmd_oracle_twirl(channel_path).dump(2), out_path);
    } else if (bound_cmd->parsed()) {
      emit(cli::cmd_oracle_bound(oracle_config, threads).dump(2), out_path);
    } else if (dist_cmd->parsed()) {
      const auto report = cli::cmd_oracle_dist(oracle_config, ideal);
      emit(dist_format ? as_dist_text(report) : report.dump(2), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "hqsa: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
  return cli::kOk;
}
