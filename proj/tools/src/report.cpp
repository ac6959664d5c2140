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
#include "hqsa_cli/report.hpp"

#include <stdexcept>

namespace hqsa::cli {

using json = nlohmann::ordered_json;

json to_json(const ProtocolResult& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"index", run.index},
                    {"kind", to_string(run.kind)},
                    {"randomness", run.randomness},
                    {"outcome", run.outcome},
                    {"correct", run.correct}});
  }
  return {{"target_outcome", r.target_outcome},
          {"target_index", r.target_index},
          {"n_traps", r.n_traps},
          {"n_incorrect", r.n_incorrect},
          {"epsilon", r.epsilon},
          {"raw_estimate", r.raw_estimate},
          {"theta", r.theta},
          {"alpha", r.alpha},
          {"seed", r.seed},
          {"runs", std::move(runs)}};
}

ProtocolResult result_from_json(const json& j) {
  ProtocolResult r;
  j.at("target_outcome").get_to(r.target_outcome);
  j.at("target_index").get_to(r.target_index);
  j.at("n_traps").get_to(r.n_traps);
  j.at("n_incorrect").get_to(r.n_incorrect);
  j.at("epsilon").get_to(r.epsilon);
  j.at("raw_estimate").get_to(r.raw_estimate);
  j.at("theta").get_to(r.theta);
  j.at("alpha").get_to(r.alpha);
  j.at("seed").get_to(r.seed);
  for (const auto& run : j.at("runs")) {
    RunRecord rec;
    run.at("index").get_to(rec.index);
    const auto kind = run.at("kind").get<std::string>();
    if (kind != "trap" && kind != "target") throw std::invalid_argument("bad run kind " + kind);
    rec.kind = kind == "trap" ? RunKind::trap : RunKind::target;
    run.at("randomness").get_to(rec.randomness);
    run.at("outcome").get_to(rec.outcome);
    run.at("correct").get_to(rec.correct);
    r.runs.push_back(std::move(rec));
  }
  return r;
}

json to_json(const RunReport& r) {
  json results = json::array();
  for (const auto& res : r.results) results.push_back(to_json(res));
  return {{"tool", "hqsa"},
          {"version", r.version},
          {"config", r.config},
          {"seed", r.seed},
          {"repetitions", r.results.size()},
          {"results", std::move(results)},
          {"duration_seconds", r.duration_seconds}};
}

RunReport report_from_json(const json& j) {
  if (j.at("tool") != "hqsa") throw std::invalid_argument("not an hqsa report");
  RunReport r;
  j.at("version").get_to(r.version);
  r.config = j.at("config");
  j.at("seed").get_to(r.seed);
  for (const auto& res : j.at("results")) r.results.push_back(result_from_json(res));
  if (j.at("repetitions").get<std::size_t>() != r.results.size()) {
    throw std::invalid_argument("repetition count does not match results");
  }
  j.at("duration_seconds").get_to(r.duration_seconds);
  return r;
}

std::string canonical_dump(const RunReport& r) {
  json j = to_json(r);
  j.erase("duration_seconds");
  return j.dump(2);
}

}  // namespace hqsa::cli
