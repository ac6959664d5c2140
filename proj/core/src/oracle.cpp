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
#include "hqsa/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "hqsa/errors.hpp"
#include "hqsa/parallel.hpp"

namespace hqsa {

namespace {

// Largest channel support for chi-matrix work (4^k x 4^k entries).
constexpr std::size_t kProcessQubitCap = 3;

Matrix apply_if(const Matrix& rho, const ErrorConfig& e, AttachPoint p, std::size_t n) {
  const auto& ch = e.at(p);
  return ch.is_identity() ? rho : ops::apply_channel(rho, ch, n);
}

Matrix apply_single(const Matrix& rho, const Eigen::Matrix2cd& u, std::size_t qubit,
                    std::size_t n) {
  return ops::conjugate(rho, u, {qubit}, n);
}

Matrix zero_state(std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return rho;
}

std::vector<double> diagonal(const Matrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    p[static_cast<std::size_t>(i)] = std::max(0.0, rho(i, i).real());
  }
  return p;
}

Matrix pauli_basis_matrix(std::size_t index, std::size_t k) {
  std::vector<PauliLetter> letters(k);
  for (std::size_t a = 0; a < k; ++a) {
    letters[a] = static_cast<PauliLetter>((index >> (2 * (k - 1 - a))) & 3U);
  }
  return PauliString(std::move(letters)).to_matrix();
}

std::size_t resolve_register(const ErrorChannel& e, std::size_t register_size) {
  if (register_size != 0) return register_size;
  std::size_t n = 0;
  for (const auto& b : e.blocks()) {
    if (b.qubits.empty()) throw DimensionError("full-register channel needs a register size");
    for (auto q : b.qubits) n = std::max(n, q);
  }
  return std::max<std::size_t>(n, 1);
}

Estimate mean_estimate(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  const double mean = pairwise_sum(values) / n;
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
  const double var = values.size() > 1 ? pairwise_sum(sq) / (n - 1) : 0.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace

double variation_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DimensionError("distribution length mismatch");
  std::vector<double> diff(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) diff[i] = std::abs(p[i] - q[i]);
  return 0.5 * pairwise_sum(diff);
}

TrapOracle::TrapOracle(const AccreditableHamiltonian& h, double t, ErrorConfig error)
    : n_(h.qubit_count()),
      inversion_(synthesize_for(h).string),
      half_step_(evolution_operator(h.sum(), t / 2)),
      error_(std::move(error)) {
  if (n_ > kDensityQubitCap) throw CapacityError("trap oracle", n_, kDensityQubitCap);
}

std::vector<double> TrapOracle::distribution(const TrapRandomness& r) const {
  if (r.qubit_count() != n_) throw DimensionError("trap randomness size mismatch");
  const Eigen::Matrix2cd hadamard = named_unitary("H");
  const Eigen::Matrix2cd z = letter_matrix(PauliLetter::Z);

  Matrix rho = apply_if(zero_state(n_), error_, AttachPoint::prep, n_);
  for (std::size_t q = 1; q <= n_; ++q) {
    if (r.z_prep[q - 1]) rho = apply_single(rho, z, q, n_);
    if (r.h) rho = apply_single(rho, hadamard, q, n_);
    rho = apply_single(rho, letter_matrix(r.p[q - 1]), q, n_);
  }
  rho = apply_if(rho, error_, AttachPoint::a_layer, n_);
  rho = apply_if(rho, error_, AttachPoint::u1, n_);
  rho = half_step_ * rho * half_step_.adjoint();
  rho = apply_if(rho, error_, AttachPoint::evolution_1, n_);
  rho = apply_if(rho, error_, AttachPoint::b_layer, n_);
  for (std::size_t q = 1; q <= n_; ++q) rho = apply_single(rho, letter_matrix(inversion_[q - 1]), q, n_);
  rho = half_step_ * rho * half_step_.adjoint();
  rho = apply_if(rho, error_, AttachPoint::evolution_2, n_);
  rho = apply_if(rho, error_, AttachPoint::c_layer, n_);
  for (std::size_t q = 1; q <= n_; ++q) rho = apply_single(rho, letter_matrix(inversion_[q - 1]), q, n_);
  rho = apply_if(rho, error_, AttachPoint::u2, n_);
  rho = apply_if(rho, error_, AttachPoint::d_layer, n_);
  for (std::size_t q = 1; q <= n_; ++q) {
    rho = apply_single(rho, letter_matrix(r.p[q - 1]), q, n_);
    if (r.h) rho = apply_single(rho, hadamard, q, n_);
    if (r.z_meas[q - 1]) rho = apply_single(rho, z, q, n_);
  }
  rho = apply_if(rho, error_, AttachPoint::measurement, n_);
  return diagonal(rho);
}

double TrapOracle::incorrect_probability(const TrapRandomness& r) const {
  const auto p = distribution(r);
  return std::clamp(1.0 - p.front(), 0.0, 1.0);
}

double TrapOracle::p_inco_exact(unsigned threads) const {
  if (n_ > kEnumerationQubitCap) {
    throw CapacityError("exact trap enumeration", n_, kEnumerationQubitCap);
  }
  const std::uint64_t count = trap_randomness_count(n_);
  std::vector<double> values(count);
  parallel_for(count, threads, [&](std::size_t i) {
    values[i] = incorrect_probability(TrapRandomness::from_index(i, n_));
  });
  return pairwise_sum(values) / static_cast<double>(count);
}

Estimate TrapOracle::p_inco_monte_carlo(std::size_t samples, std::uint64_t seed,
                                        unsigned threads) const {
  if (samples == 0) throw ValidationError("need at least one sample");
  std::vector<double> values(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    CounterRng rng(seed, i);
    values[i] = incorrect_probability(draw_trap_randomness(n_, rng));
  });
  return mean_estimate(values);
}

Estimate TrapOracle::detection_rate(std::size_t samples, std::uint64_t seed,
                                    unsigned threads) const {
  if (samples == 0) throw ValidationError("need at least one sample");
  std::vector<double> values(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    CounterRng rng(seed, i);
    const auto r = draw_trap_randomness(n_, rng);
    values[i] = sample(distribution(r), rng) != 0 ? 1.0 : 0.0;
  });
  return mean_estimate(values);
}

std::vector<double> target_distribution(const TargetSpec& spec, const ErrorConfig& error) {
  const std::size_t n = spec.hamiltonian.qubit_count();
  if (n > kDensityQubitCap) throw CapacityError("target oracle", n, kDensityQubitCap);
  if (spec.a_prime.size() != n || spec.d_prime.size() != n) {
    throw DimensionError("target layers must have one gate per qubit");
  }
  const Matrix half = evolution_operator(spec.hamiltonian, spec.t / 2);
  Matrix rho = apply_if(zero_state(n), error, AttachPoint::prep, n);
  for (const auto& g : spec.a_prime) rho = ops::conjugate(rho, g.unitary(), g.targets(), n);
  rho = apply_if(rho, error, AttachPoint::a_layer, n);
  rho = apply_if(rho, error, AttachPoint::u1, n);
  rho = half * rho * half.adjoint();
  rho = apply_if(rho, error, AttachPoint::evolution_1, n);
  rho = apply_if(rho, error, AttachPoint::b_layer, n);
  rho = half * rho * half.adjoint();
  rho = apply_if(rho, error, AttachPoint::evolution_2, n);
  rho = apply_if(rho, error, AttachPoint::c_layer, n);
  rho = apply_if(rho, error, AttachPoint::u2, n);
  rho = apply_if(rho, error, AttachPoint::d_layer, n);
  for (const auto& g : spec.d_prime) rho = ops::conjugate(rho, g.unitary(), g.targets(), n);
  rho = apply_if(rho, error, AttachPoint::measurement, n);
  return diagonal(rho);
}

double exact_p_inco(const AccreditableHamiltonian& h, double t, const ErrorConfig& error,
                    unsigned threads) {
  if (h.qubit_count() > kEnumerationQubitCap) {
    throw CapacityError("exact trap enumeration", h.qubit_count(), kEnumerationQubitCap);
  }
  return TrapOracle(h, t, error).p_inco_exact(threads);
}

Estimate detection_rate_empirical(const AccreditableHamiltonian& h, double t,
                                  const ErrorConfig& error, std::size_t n_samples,
                                  std::uint64_t seed, unsigned threads) {
  return TrapOracle(h, t, error).detection_rate(n_samples, seed, threads);
}

Matrix process_matrix(const ErrorChannel& e, std::size_t register_size) {
  const std::size_t n = resolve_register(e, register_size);
  const auto support = e.support(n);
  const std::size_t k = std::max<std::size_t>(support.size(), 1);
  if (k > kProcessQubitCap) throw CapacityError("process matrix", k, kProcessQubitCap);
  const auto dim = Eigen::Index{1} << k;
  const auto basis_count = Eigen::Index{1} << (2 * k);

  std::vector<Matrix> kraus = support.empty() ? std::vector<Matrix>{Matrix::Identity(dim, dim)}
                                              : e.flatten_kraus(n);
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(basis_count));
  for (Eigen::Index m = 0; m < basis_count; ++m) {
    basis.push_back(pauli_basis_matrix(static_cast<std::size_t>(m), k));
  }

  Matrix chi = Matrix::Zero(basis_count, basis_count);
  Eigen::VectorXcd a(basis_count);
  for (const auto& op : kraus) {
    // K = sum_m a_m P_m with a_m = tr(P_m K) / d.
    for (Eigen::Index m = 0; m < basis_count; ++m) {
      a(m) = (basis[static_cast<std::size_t>(m)] * op).trace() / static_cast<double>(dim);
    }
    chi += a * a.adjoint();
  }
  return chi;
}

ErrorChannel twirl(const ErrorChannel& e, std::size_t register_size) {
  const std::size_t n = resolve_register(e, register_size);
  const auto support = e.support(n);
  if (support.empty()) return ErrorChannel::identity();
  const std::size_t k = support.size();
  if (k > kProcessQubitCap) throw CapacityError("twirl", k, kProcessQubitCap);
  const auto dim = static_cast<double>(Eigen::Index{1} << k);
  const auto kraus = e.flatten_kraus(n);
  std::vector<Matrix> out;
  const std::size_t basis_count = std::size_t{1} << (2 * k);
  out.reserve(basis_count * kraus.size());
  for (std::size_t m = 0; m < basis_count; ++m) {
    const Matrix p = pauli_basis_matrix(m, k);
    for (const auto& op : kraus) out.push_back(p * op * p.adjoint() / dim);
  }
  return ErrorChannel("twirled_" + e.label(), std::move(out), support);
}

double max_off_diagonal(const Matrix& chi) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < chi.rows(); ++i) {
    for (Eigen::Index j = 0; j < chi.cols(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(chi(i, j)));
    }
  }
  return worst;
}

double predicted_detection(const Matrix& chi, std::size_t n) {
  if (chi.rows() != (Eigen::Index{1} << (2 * n))) throw DimensionError("chi size mismatch");
  double px = 0.0;
  double pz = 0.0;
  for (Eigen::Index m = 1; m < chi.rows(); ++m) {
    bool has_x = false;
    bool has_z = false;
    for (std::size_t a = 0; a < n; ++a) {
      const auto letter = (static_cast<std::size_t>(m) >> (2 * a)) & 3U;
      has_x = has_x || letter == 1 || letter == 2;
      has_z = has_z || letter == 2 || letter == 3;
    }
    const double w = chi(m, m).real();
    if (has_x) px += w;
    if (has_z) pz += w;
  }
  return 0.5 * (px + pz);
}

TrapTargetComparison compare_trap_target(const AccreditableHamiltonian& h, const TargetSpec& target,
                                         const ErrorConfig& error, unsigned threads) {
  const std::size_t n = h.qubit_count();
  if (n > kEnumerationQubitCap) throw CapacityError("trap enumeration", n, kEnumerationQubitCap);
  const ErrorConfig clean;
  TrapTargetComparison out;
  out.target_vd = variation_distance(target_distribution(target, clean),
                                     target_distribution(target, error));

  const TrapOracle noisy(h, target.t, error);
  const TrapOracle ideal(h, target.t, clean);
  const std::uint64_t count = trap_randomness_count(n);
  std::vector<double> trap_vd(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const auto r = TrapRandomness::from_index(i, n);
    trap_vd[i] = variation_distance(ideal.distribution(r), noisy.distribution(r));
  });
  out.min_trap_vd = trap_vd.front();
  for (std::uint64_t i = 0; i < count; ++i) {
    if (trap_vd[i] < out.min_trap_vd) {
      out.min_trap_vd = trap_vd[i];
      out.worst_draw = i;
    }
  }
  out.holds = out.min_trap_vd + 1e-12 >= out.target_vd;
  return out;
}

}  // namespace hqsa
