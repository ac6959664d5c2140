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
// Acceptance harness. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hqsa/errors.hpp"
#include "hqsa/hqs_model.hpp"
#include "hqsa/inversion.hpp"
#include "hqsa/oracle.hpp"
#include "hqsa/protocol.hpp"
#include "support/random_models.hpp"

namespace hqsa {
namespace {

namespace t = testing;

constexpr double kInversionTol = 1e-9;
constexpr double kTrapTol = 1e-9;
constexpr double kEnumTol = 1e-9;
constexpr double kTwirlTol = 1e-9;
constexpr double kCanonicalTol = 1e-9;
constexpr double kBoundSlack = 1e-12;
constexpr double kSigmas = 3.0;
constexpr std::size_t kBoundFixtures = 24;
constexpr std::size_t kRepetitions = 500;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

AccreditableHamiltonian lattice_xy(int rows, int cols, t::Rng& rng) {
  const auto g = square_lattice(rows, cols);
  return build_accreditable(g, t::random_couplings(g, rng, -1.5, 1.5));
}

ErrorConfig single(AttachPoint p, ErrorChannel e) {
  ErrorConfig cfg;
  cfg.attach(p, std::move(e));
  return cfg;
}

ErrorChannel pauli(const std::string& letter, std::size_t q) {
  return ErrorChannel::pauli_mixture({{letter, 1.0}}, {q});
}

double identity_weight(const ErrorChannel& e, std::size_t n) {
  return process_matrix(e, n)(0, 0).real();
}

Outcome inversion_random_graphs() {
  Outcome out;
  t::Rng rng(1001);
  int numeric = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = t::random_two_colourable(12, rng);
    const auto h = build_accreditable(g, t::random_couplings(g, rng));
    const auto c = synthesize_inversion(h);
    out.require(verify_inversion_symbolic(h.sum(), c), "symbolic check failed on " + format_graph(g));
    if (h.qubit_count() <= 6) {
      const double err = verify_inversion_numeric(h.sum(), c, t::uniform(rng, -10, 10));
      worst = std::max(worst, err);
      out.require(err <= kInversionTol, "numeric check failed on " + format_graph(g));
      ++numeric;
    }
  }
  if (out.pass) {
    out.detail = "200 symbolic, " + std::to_string(numeric) + " numeric, max error " +
                 sci(worst);
  }
  return out;
}

Outcome worked_fixtures() {
  Outcome out;
  const auto g2 = square_lattice(1, 2);
  const auto two = build_accreditable(g2, CouplingTable::uniform(g2, 1.0));
  const auto c2 = synthesize_for(two);
  out.require(c2.string == PauliString::parse("ZI"), "2-site conjugator is " + c2.string.to_string());
  out.require(verify_inversion_symbolic(two.sum(), c2), "2-site symbolic");
  for (double time : {-10.0, 0.7, 10.0}) {
    out.require(verify_inversion_numeric(two.sum(), c2, time) <= kInversionTol, "2-site numeric");
  }

  const auto g9 = square_lattice(3, 3);
  const auto model = build_xy_model(g9, CouplingTable::uniform(g9, 1.0, 1.0));
  const auto c9 = synthesize_for(model);
  out.require(c9.basis == InversionBasis::composite_iy_x, "3x3 basis");
  out.require(c9.string.letters_string() == "YXYXYXYXY", "3x3 letters " + c9.string.letters_string());
  out.require(verify_inversion_symbolic(model.sum(), c9), "3x3 symbolic");
  const double err = verify_inversion_numeric(model.sum(), c9, 1.3);
  out.require(err <= kInversionTol, "3x3 numeric error " + sci(err));
  if (out.pass) out.detail = "ZI and " + c9.string.to_string() + ", 3x3 error " + sci(err);
  return out;
}

Outcome error_free_traps() {
  Outcome out;
  t::Rng rng(1003);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = lattice_xy(t::uniform_int(rng, 1, 2), t::uniform_int(rng, 1, 3), rng);
    const auto r = t::random_trap_randomness(h.qubit_count(), rng);
    const double p0 = exact_output_distribution(build_trap(h, t::uniform(rng, -5, 5), r), {})[0];
    worst = std::max(worst, std::abs(p0 - 1.0));
    out.require(std::abs(p0 - 1.0) <= kTrapTol, "trap " + r.digest());
  }
  if (out.pass) out.detail = "100 traps, max |P(0..0) - 1| = " + sci(worst);
  return out;
}

Outcome detection_probability() {
  Outcome out;
  t::Rng rng(1004);
  const unsigned threads = worker_count();

  // Second evolution slot: a single Pauli reaches the measurement unchanged.
  for (int cols : {2, 3}) {
    const auto h = lattice_xy(1, cols, rng);
    const double time = t::uniform(rng, -3, 3);
    for (std::size_t q = 1; q <= h.qubit_count(); ++q) {
      for (const auto& [letter, expected] :
           std::vector<std::pair<std::string, double>>{{"X", 0.5}, {"Z", 0.5}, {"Y", 1.0}}) {
        const double p =
            exact_p_inco(h, time, single(AttachPoint::evolution_2, pauli(letter, q)), threads);
        out.require(std::abs(p - expected) <= kEnumTol,
                    "evolution_2 " + letter + " on qubit " + std::to_string(q) + ": " +
                        sci(p));
      }
    }
  }

  // First evolution slot: the trap sees U^dagger E U; compare with the chi
  // prediction of the dressed channel and the 1/2 floor.
  double first_min = 1.0;
  double first_max = 0.0;
  for (int cols : {2, 3}) {
    const auto h = lattice_xy(1, cols, rng);
    const double time = t::uniform(rng, -3, 3);
    const Matrix u = evolution_operator(h.sum(), time / 2);
    const std::size_t n = h.qubit_count();
    for (std::size_t q = 1; q <= n; ++q) {
      for (const char* letter : {"X", "Y", "Z"}) {
        const auto e = pauli(letter, q);
        const double p = exact_p_inco(h, time, single(AttachPoint::evolution_1, e), threads);
        const auto dressed =
            ErrorChannel::unitary(u, {}).then(e).then(ErrorChannel::unitary(u.adjoint(), {}));
        const double predicted = predicted_detection(process_matrix(dressed, n), n);
        out.require(std::abs(p - predicted) <= kEnumTol, std::string("evolution_1 prediction ") + letter);
        out.require(p >= 0.5 - kEnumTol, std::string("evolution_1 floor ") + letter);
        if (std::string(letter) == "Y") out.require(std::abs(p - 1.0) <= kEnumTol, "evolution_1 Y");
        first_min = std::min(first_min, p);
        first_max = std::max(first_max, p);
      }
    }
  }

  // Random Pauli mixtures: detection given that an error occurred.
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = lattice_xy(1, t::uniform_int(rng, 2, 3), rng);
    const std::size_t n = h.qubit_count();
    std::vector<std::size_t> support;
    for (std::size_t q = 1; q <= n; ++q) {
      if (support.empty() || t::uniform(rng, 0, 1) < 0.5) support.push_back(q);
    }
    const auto e = t::random_pauli_mixture(support, rng, t::uniform(rng, 0.05, 1.0));
    const auto slot = trial % 2 == 0 ? AttachPoint::evolution_1 : AttachPoint::evolution_2;
    const double weight = 1.0 - identity_weight(e, n);
    const double p = exact_p_inco(h, t::uniform(rng, -3, 3), single(slot, e), threads);
    out.require(p >= 0.5 * weight - kEnumTol,
                "mixture " + std::to_string(trial) + ": " + sci(p) + " < half of " +
                    sci(weight));
  }

  // Monte-Carlo beyond the enumeration cap.
  std::string mc;
  for (const auto& [rows, cols] : std::vector<std::pair<int, int>>{{2, 2}, {1, 5}, {2, 3}}) {
    const auto h = lattice_xy(rows, cols, rng);
    for (const auto& [letter, expected] :
         std::vector<std::pair<std::string, double>>{{"X", 0.5}, {"Z", 0.5}, {"Y", 1.0}}) {
      const auto est = detection_rate_empirical(
          h, 0.9, single(AttachPoint::evolution_2, pauli(letter, 2)), 4000, 1004, threads);
      out.require(std::abs(est.value - expected) <= kSigmas * est.std_error + 1e-15,
                  "Monte-Carlo N=" + std::to_string(h.qubit_count()) + " " + letter + ": " +
                      sci(est.value));
      if (letter == "X") mc += " N=" + std::to_string(h.qubit_count()) + ":" + sci(est.value);
    }
  }
  if (out.pass) {
    out.detail = "evolution_2 exact; evolution_1 in [" + sci(first_min) + ", " +
                 sci(first_max) + "] matching chi prediction; MC X" + mc;
  }
  return out;
}

Outcome twirl_diagonal() {
  Outcome out;
  t::Rng rng(1005);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = trial % 2 == 0 ? t::random_channel({1}, rng, 2) : t::random_channel({1, 2}, rng, 2);
    const double off = max_off_diagonal(process_matrix(twirl(e)));
    worst = std::max(worst, off);
    out.require(off <= kTwirlTol, "channel " + std::to_string(trial));
  }
  if (out.pass) out.detail = "50 channels, max off-diagonal " + sci(worst);
  return out;
}

ProtocolConfig bound_fixture(std::size_t index, t::Rng& rng) {
  const int cols = index % 2 == 0 ? 2 : 3;
  ProtocolConfig cfg;
  cfg.hamiltonian = lattice_xy(1, cols, rng);
  const std::size_t n = cfg.hamiltonian.qubit_count();
  cfg.target = {t::random_layer(n, rng), t::random_layer(n, rng), cfg.hamiltonian.sum(),
                t::uniform(rng, -2, 2)};
  cfg.theta = 0.1;
  cfg.alpha = 0.9;
  cfg.seed = 5000 + 1000 * index;
  const std::size_t q = static_cast<std::size_t>(t::uniform_int(rng, 1, cols));
  switch (index % 8) {
    case 0:
      cfg.error.attach(AttachPoint::evolution_2,
                       ErrorChannel::depolarizing(t::uniform(rng, 0.05, 0.4), {}, n));
      break;
    case 1:
      cfg.error.attach(AttachPoint::prep, ErrorChannel::bit_flip(t::uniform(rng, 0.01, 0.2), {q}));
      break;
    case 2:
      cfg.error.attach(AttachPoint::evolution_1, ErrorChannel::phase_flip(t::uniform(rng, 0.01, 0.2), {q}));
      break;
    case 3:
      cfg.error.attach(AttachPoint::d_layer,
                       ErrorChannel::amplitude_damping(t::uniform(rng, 0.05, 0.3), {q}));
      break;
    case 4:
      cfg.error.attach(AttachPoint::evolution_1, t::random_pauli_mixture({1, 2}, rng, 0.2));
      break;
    case 5:
      cfg.error.attach(AttachPoint::evolution_2, t::random_pauli_mixture({1, 2}, rng, 0.3));
      break;
    case 6:
      cfg.error.attach(AttachPoint::measurement, ErrorChannel::bit_flip(t::uniform(rng, 0.01, 0.1), {q}));
      cfg.error.attach(AttachPoint::u1, ErrorChannel::depolarizing(0.05, {q}));
      break;
    default:
      for (auto p : {AttachPoint::a_layer, AttachPoint::b_layer, AttachPoint::c_layer, AttachPoint::u2}) {
        cfg.error.attach(p, ErrorChannel::depolarizing(t::uniform(rng, 0.0, 0.1), {q}));
      }
      break;
  }
  return cfg;
}

Outcome bound_soundness() {
  Outcome out;
  t::Rng rng(1006);
  const unsigned threads = worker_count();
  const std::uint64_t n_traps = compute_n_traps(0.1, 0.9);
  out.require(n_traps == 601, "trap count " + std::to_string(n_traps));
  double worst_ratio = 0.0;
  double worst_coverage = 1.0;
  for (std::size_t i = 0; i < kBoundFixtures; ++i) {
    const auto cfg = bound_fixture(i, rng);
    const auto bound = validate_bound(cfg, threads);
    out.require(bound.vd_exact <= 2 * bound.p_inco + kBoundSlack,
                "fixture " + std::to_string(i) + ": VD " + sci(bound.vd_exact) +
                    " > 2 p_inco " + sci(2 * bound.p_inco));
    if (bound.p_inco > 0) worst_ratio = std::max(worst_ratio, bound.vd_exact / (2 * bound.p_inco));

    const auto batch = run_batch(cfg, kRepetitions, {threads, false});
    std::size_t covered = 0;
    for (const auto& r : batch) {
      out.require(r.n_traps == n_traps, "batch trap count");
      covered += bound.vd_exact <= r.epsilon ? 1 : 0;
    }
    const double coverage = static_cast<double>(covered) / kRepetitions;
    worst_coverage = std::min(worst_coverage, coverage);
    out.require(coverage >= cfg.alpha, "fixture " + std::to_string(i) + " coverage " + sci(coverage));
  }
  if (out.pass) {
    out.detail = std::to_string(kBoundFixtures) + " fixtures, max VD/(2 p_inco) " +
                 sci(worst_ratio) + ", min coverage " + sci(worst_coverage) +
                 " over " + std::to_string(kRepetitions) + " runs of 601 traps";
  }
  return out;
}

// Recomputes the trap count with 50-digit arithmetic and checks that the
// ceiling is not sitting on a rounding edge.
std::uint64_t trap_count_high_precision(const char* theta, const char* alpha) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec th(theta);
  const Dec al(alpha);
  const Dec x = 2 / (th * th) * boost::multiprecision::log(2 / (1 - al));
  const Dec c = boost::multiprecision::ceil(x);
  if (c - x < Dec("1e-30") || x - (c - 1) < Dec("1e-30")) return 0;
  return c.convert_to<std::uint64_t>() + 1;
}

Outcome trap_count_arithmetic() {
  Outcome out;
  const std::uint64_t a = compute_n_traps(0.2, 0.9);
  const std::uint64_t b = compute_n_traps(0.1, 0.95);
  out.require(a == 151, "compute_n_traps(0.2, 0.9) = " + std::to_string(a));
  out.require(b == 739, "compute_n_traps(0.1, 0.95) = " + std::to_string(b));
  out.require(trap_count_high_precision("0.2", "0.9") == 151, "high precision (0.2, 0.9)");
  out.require(trap_count_high_precision("0.1", "0.95") == 739, "high precision (0.1, 0.95)");
  out.require(trap_count_high_precision("0.1", "0.9") == compute_n_traps(0.1, 0.9),
              "high precision (0.1, 0.9)");
  if (out.pass) out.detail = "151, 739; (0.1, 0.9) gives " + std::to_string(compute_n_traps(0.1, 0.9));
  return out;
}

Outcome canonical_form_rewrite() {
  Outcome out;
  t::Rng rng(1008);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(t::uniform_int(rng, 1, 4));
    HqsCircuit c;
    c.n = n;
    c.a_layer = c.b_layer = c.c_layer = c.d_layer = identity_layer(n);
    c.hamiltonian = WeightedPauliSum(n);
    c.t = t::uniform(rng, -2, 2);
    for (std::size_t q = 1; q < n; ++q) {
      std::string xx(n, 'I');
      xx[q - 1] = xx[q] = 'X';
      std::string yy(n, 'I');
      yy[q - 1] = yy[q] = 'Y';
      const double j = t::uniform(rng, -1, 1);
      c.hamiltonian.add(j, xx);
      c.hamiltonian.add(j, yy);
    }
    c.c_layer = t::random_layer(n, rng);
    c.u1 = t::random_unitary(Eigen::Index{1} << n, rng);
    c.u2 = t::random_unitary(Eigen::Index{1} << n, rng);
    ErrorConfig e;
    for (auto p : kAttachPoints) {
      const auto q = static_cast<std::size_t>(t::uniform_int(rng, 1, static_cast<int>(n)));
      e.attach(p, t::random_channel({q}, rng));
    }
    const auto form = canonical_form(e, n, c.c_layer, c.u1, c.u2, half_step_evolution(c));
    c.a_layer = t::random_layer(n, rng);
    c.b_layer = t::random_layer(n, rng);
    c.d_layer = t::random_layer(n, rng);
    const auto direct = exact_output_distribution(c, e);
    const auto rewritten = canonical_output_distribution(c, form);
    double err = 0.0;
    for (std::size_t k = 0; k < direct.size(); ++k) err = std::max(err, std::abs(direct[k] - rewritten[k]));
    worst = std::max(worst, err);
    out.require(err <= kCanonicalTol, "circuit " + std::to_string(trial));
  }
  if (out.pass) out.detail = "20 circuits, max deviation " + sci(worst);
  return out;
}

Outcome determinism() {
  Outcome out;
  t::Rng rng(1009);
  for (int trial = 0; trial < 3; ++trial) {
    auto cfg = bound_fixture(static_cast<std::size_t>(trial), rng);
    cfg.theta = 0.2;
    const auto one = run_batch(cfg, 4, {1, true});
    out.require(one == run_batch(cfg, 4, {1, true}), "repeat run differs");
    out.require(one == run_batch(cfg, 4, {2, true}), "2 threads differ");
    out.require(one == run_batch(cfg, 4, {8, true}), "8 threads differ");
  }
  // A register beyond the enumeration cap goes through the same memoized path.
  ProtocolConfig big;
  big.hamiltonian = lattice_xy(2, 2, rng);
  big.target = {identity_layer(4), identity_layer(4), big.hamiltonian.sum(), 0.6};
  big.theta = 0.2;
  big.seed = 77;
  big.error.attach(AttachPoint::evolution_1, ErrorChannel::depolarizing(0.1, {1, 2}));
  const auto ref = run_protocol(big, {1, true});
  out.require(ref == run_protocol(big, {2, true}) && ref == run_protocol(big, {8, true}),
              "4-qubit run differs across threads");
  if (out.pass) out.detail = "batches at 1, 2, 8 threads identical";
  return out;
}

// The device evolves under a rescaled Hamiltonian. The traps cannot tell,
// so they pass while the target distribution moves far from ideal.
Outcome hamiltonian_swap_control() {
  Outcome out;
  const auto g = square_lattice(1, 2);
  ProtocolConfig cfg;
  cfg.hamiltonian = build_accreditable(g, CouplingTable::uniform(g, 1.0));
  cfg.target = {identity_layer(2), identity_layer(2), cfg.hamiltonian.sum(), 0.8};
  cfg.target.a_prime[0] = Gate::named("X", 1);
  cfg.theta = 0.1;
  cfg.alpha = 0.9;
  cfg.seed = 1010;
  cfg.error = ErrorConfig(ComplianceMode::unconstrained);
  const auto w = hamiltonian_replacement(cfg.hamiltonian.sum(), cfg.hamiltonian.sum().scaled(0.3),
                                         cfg.target.t);
  cfg.error.attach(AttachPoint::evolution_1, w);
  cfg.error.attach(AttachPoint::evolution_2, w);

  const auto bound = validate_bound(cfg);
  const auto result = run_protocol(cfg, {worker_count(), false});
  out.require(result.n_incorrect == 0, "traps failed: " + std::to_string(result.n_incorrect));
  out.require(bound.vd_exact > result.epsilon,
              "VD " + sci(bound.vd_exact) + " within epsilon " + sci(result.epsilon));
  if (out.pass) {
    out.detail = "expected failure reproduced: 0/" + std::to_string(result.n_traps) +
                 " traps failed, epsilon " + sci(result.epsilon) + ", VD " +
                 sci(bound.vd_exact);
  }
  return out;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace hqsa

int main() {
  using namespace hqsa;
  const std::vector<Criterion> criteria = {
      {"inversion on random 2-colourable graphs", inversion_random_graphs},
      {"worked inversion fixtures", worked_fixtures},
      {"error-free traps output all zeros", error_free_traps},
      {"trap detection probability", detection_probability},
      {"twirled channels are diagonal", twirl_diagonal},
      {"accreditation bound soundness", bound_soundness},
      {"trap count arithmetic", trap_count_arithmetic},
      {"gate-independent canonical form", canonical_form_rewrite},
      {"determinism across thread counts", determinism},
      {"Hamiltonian swap negative control", hamiltonian_swap_control},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
