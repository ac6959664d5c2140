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
#include "hqsa/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "hqsa/errors.hpp"
#include "hqsa/oracle.hpp"
#include "hqsa/parallel.hpp"

namespace hqsa {

std::uint64_t compute_n_traps(double theta, double alpha) {
  if (!(theta > 0.0 && theta < 1.0)) throw ValidationError("theta must lie in (0, 1)");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in [0, 1)");
  const double bound = 2.0 / (theta * theta) * std::log(2.0 / (1.0 - alpha));
  return static_cast<std::uint64_t>(std::ceil(bound)) + 1;
}

std::string to_string(RunKind k) { return k == RunKind::trap ? "trap" : "target"; }

bool operator==(const RunRecord& a, const RunRecord& b) {
  return a.index == b.index && a.kind == b.kind && a.randomness == b.randomness &&
         a.outcome == b.outcome && a.correct == b.correct;
}

std::uint64_t choose_target_index(std::uint64_t seed, std::uint64_t n_traps) {
  CounterRng rng(seed, 0);
  return 1 + rng.uniform_int(n_traps + 1);
}

ProtocolRunner::ProtocolRunner(ProtocolConfig cfg) : cfg_(std::move(cfg)) {
  n_traps_ = compute_n_traps(cfg_.theta, cfg_.alpha);
  n_ = cfg_.hamiltonian.qubit_count();
  if (n_ > kDensityQubitCap) throw CapacityError("protocol register", n_, kDensityQubitCap);
  if (cfg_.hamiltonian.family() != HamiltonianFamily::xy) {
    throw ValidationError("protocol runs accept only the pure XY family");
  }
  two_color(cfg_.hamiltonian.graph());
  if (!cfg_.target.hamiltonian.approx_equal(cfg_.hamiltonian.sum(), 1e-12)) {
    throw ValidationError("target Hamiltonian differs from the configured Hamiltonian");
  }
  if (!std::isfinite(cfg_.target.t)) throw ValidationError("evolution time must be finite");
  inversion_ = synthesize_for(cfg_.hamiltonian);
  half_step_ = make_half_step(cfg_.hamiltonian.sum(), cfg_.target.t);

  HqsCircuit target = build_target(cfg_.target);
  target.half_step = half_step_;
  target_dist_ = exact_output_distribution(target, cfg_.error);
}

std::shared_ptr<const std::vector<double>> ProtocolRunner::trap_distribution(
    const TrapRandomness& r) const {
  const std::uint64_t key = r.index();
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const HqsCircuit trap = build_trap(cfg_.hamiltonian, inversion_, cfg_.target.t, r, half_step_);
  auto dist = std::make_shared<const std::vector<double>>(exact_output_distribution(trap, cfg_.error));
  std::lock_guard lock(memo_mutex_);
  return memo_.try_emplace(key, std::move(dist)).first->second;
}

ProtocolResult ProtocolRunner::run(std::uint64_t seed, const RunOptions& opt) const {
  ProtocolResult out;
  out.n_traps = n_traps_;
  out.theta = cfg_.theta;
  out.alpha = cfg_.alpha;
  out.seed = seed;
  out.target_index = choose_target_index(seed, n_traps_);

  const std::uint64_t total = n_traps_ + 1;
  std::vector<std::uint64_t> outcomes(total);
  std::vector<std::uint64_t> draws(total);
  parallel_for(total, opt.threads, [&](std::size_t slot) {
    const std::uint64_t index = slot + 1;
    CounterRng rng(seed, index);
    if (index == out.target_index) {
      outcomes[slot] = sample(target_dist_, rng);
      return;
    }
    const TrapRandomness r = draw_trap_randomness(n_, rng);
    draws[slot] = r.index();
    outcomes[slot] = sample(*trap_distribution(r), rng);
  });

  if (opt.keep_log) out.runs.reserve(total);
  for (std::uint64_t slot = 0; slot < total; ++slot) {
    const std::uint64_t index = slot + 1;
    const bool is_target = index == out.target_index;
    const bool correct = is_target || trap_is_correct(outcomes[slot]);
    if (is_target) out.target_outcome = bitstring(outcomes[slot], n_);
    if (!correct) ++out.n_incorrect;
    if (opt.keep_log) {
      RunRecord rec;
      rec.index = index;
      rec.kind = is_target ? RunKind::target : RunKind::trap;
      rec.randomness = is_target ? "" : TrapRandomness::from_index(draws[slot], n_).digest();
      rec.outcome = bitstring(outcomes[slot], n_);
      rec.correct = correct;
      out.runs.push_back(std::move(rec));
    }
  }
  const double fraction = static_cast<double>(out.n_incorrect) / static_cast<double>(n_traps_);
  out.raw_estimate = 2.0 * fraction;
  out.epsilon = std::min(1.0, out.raw_estimate + cfg_.theta);
  return out;
}

ProtocolResult run_protocol(const ProtocolConfig& cfg, const RunOptions& opt) {
  return ProtocolRunner(cfg).run(cfg.seed, opt);
}

std::vector<ProtocolResult> run_batch(const ProtocolConfig& cfg, std::size_t repetitions,
                                      const RunOptions& opt) {
  const ProtocolRunner runner(cfg);
  std::vector<ProtocolResult> out;
  out.reserve(repetitions);
  for (std::size_t k = 0; k < repetitions; ++k) out.push_back(runner.run(cfg.seed + k, opt));
  return out;
}

BoundReport validate_bound(const ProtocolConfig& cfg, unsigned threads) {
  const std::size_t n = cfg.hamiltonian.qubit_count();
  if (n > kEnumerationQubitCap) throw CapacityError("bound validation", n, kEnumerationQubitCap);
  BoundReport out;
  const ErrorConfig clean(cfg.error.mode());
  out.vd_exact = variation_distance(target_distribution(cfg.target, clean),
                                    target_distribution(cfg.target, cfg.error));
  out.p_inco = exact_p_inco(cfg.hamiltonian, cfg.target.t, cfg.error, threads);
  out.epsilon_exact = 2.0 * out.p_inco;
  out.holds = out.vd_exact <= out.epsilon_exact + 1e-12;
  return out;
}

}  // namespace hqsa
