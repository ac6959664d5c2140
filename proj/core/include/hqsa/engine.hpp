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
 * @file    engine.hpp
 * @brief   Exact density-matrix simulation of small registers.
 *
 * Qubits are numbered from 1; qubit 1 is the most significant bit of the
 * computational-basis index. A gate or Kraus operator acting on qubits
 * (q_a, q_b, ...) uses q_a as the most significant bit of its own index.
 */

#ifndef HQSA_ENGINE_HPP_
#define HQSA_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hqsa/pauli.hpp"
#include "hqsa/rng.hpp"

namespace hqsa {

using Matrix = Eigen::MatrixXcd;

// Density-matrix register cap; a state holds 4^N complex entries.
inline constexpr std::size_t kDensityQubitCap = 8;

// Spectral decomposition of a Hermitian matrix, used for exact exponentials.
class HermitianSpectrum {
 public:
  explicit HermitianSpectrum(const Matrix& hermitian);

  const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
  const Matrix& eigenvectors() const noexcept { return vectors_; }

  // exp(-i H t).
  Matrix evolution(double t) const;

 private:
  Eigen::VectorXd values_;
  Matrix vectors_;
};

// exp(-i H t) for a Pauli sum.
Matrix evolution_operator(const WeightedPauliSum& h, double t);

bool is_unitary(const Matrix& u, double tol = 1e-12);

class DensityState {
 public:
  // rho must be square with a power-of-two dimension within the cap.
  explicit DensityState(Matrix rho);

  static DensityState zero(std::size_t n);
  static DensityState maximally_mixed(std::size_t n);
  static DensityState from_statevector(const Eigen::VectorXcd& psi);

  std::size_t qubit_count() const noexcept { return n_; }
  Eigen::Index dimension() const noexcept { return rho_.rows(); }
  const Matrix& rho() const noexcept { return rho_; }

  // Hermitian and unit trace to tol, eigenvalues >= -tol.
  bool is_physical(double tol = 1e-10) const;

 private:
  Matrix rho_;
  std::size_t n_ = 0;
};

// |0...0><0...0|. Throws CapacityError above the density cap.
DensityState prepare_zero(std::size_t n);

Eigen::Matrix2cd named_unitary(std::string_view name);  // I X Y Z H S Sdg T Tdg
// U3(theta, phi, lambda) = Rz(phi) Ry(theta) Rz(lambda) up to global phase.
Eigen::Matrix2cd bloch_unitary(double theta, double phi, double lambda);

class Gate {
 public:
  // Throws if u is not unitary to 1e-12 or its size does not match targets.
  Gate(std::string label, Matrix u, std::vector<std::size_t> targets);

  static Gate named(std::string_view name, std::size_t qubit);
  static Gate bloch(double theta, double phi, double lambda, std::size_t qubit);
  static Gate single(const Eigen::Matrix2cd& u, std::size_t qubit, std::string label = "U");
  static Gate two_qubit(const Eigen::Matrix4cd& u, std::size_t q1, std::size_t q2,
                        std::string label = "U2");

  const std::string& label() const noexcept { return label_; }
  const Matrix& unitary() const noexcept { return u_; }
  const std::vector<std::size_t>& targets() const noexcept { return targets_; }

 private:
  std::string label_;
  Matrix u_;
  std::vector<std::size_t> targets_;
};

// Kraus operators acting on a list of qubits; an empty list means the whole
// register of whatever state the channel is applied to.
struct KrausBlock {
  std::vector<std::size_t> qubits;
  std::vector<Matrix> kraus;
};

// CPTP map, stored as a sequence of Kraus blocks applied in order. Every
// block must satisfy sum K^dagger K = I to 1e-10.
class ErrorChannel {
 public:
  ErrorChannel() = default;  // identity
  ErrorChannel(std::string label, std::vector<Matrix> kraus,
               std::vector<std::size_t> qubits = {});

  static ErrorChannel identity();
  static ErrorChannel unitary(const Matrix& u, std::vector<std::size_t> qubits = {},
                              std::string label = "unitary");
  // Independent flips on each listed qubit.
  static ErrorChannel bit_flip(double p, const std::vector<std::size_t>& qubits);
  static ErrorChannel phase_flip(double p, const std::vector<std::size_t>& qubits);
  static ErrorChannel amplitude_damping(double gamma, const std::vector<std::size_t>& qubits);
  // Joint depolarization of the listed qubits (empty: whole register, which
  // needs register_size): rho -> (1-p) rho + p tr_S(rho) (x) I/2^|S|.
  static ErrorChannel depolarizing(double p, std::vector<std::size_t> qubits,
                                   std::size_t register_size = 0);
  // Stochastic Pauli channel; keys are letter strings over the listed qubits.
  // The identity takes whatever probability the listed strings leave over.
  static ErrorChannel pauli_mixture(const std::map<std::string, double>& probabilities,
                                    std::vector<std::size_t> qubits);

  const std::string& label() const noexcept { return label_; }
  const std::vector<KrausBlock>& blocks() const noexcept { return blocks_; }
  bool is_identity() const noexcept { return blocks_.empty(); }

  // This channel followed by next.
  ErrorChannel then(const ErrorChannel& next) const;
  ErrorChannel relabeled(std::string label) const;

  // Sorted qubits touched, resolving full-register blocks against n.
  std::vector<std::size_t> support(std::size_t n) const;
  // Equivalent single Kraus list on support(n), ordered as support(n).
  std::vector<Matrix> flatten_kraus(std::size_t n) const;

 private:
  std::string label_ = "identity";
  std::vector<KrausBlock> blocks_;
};

// Matrix-level primitives. They do not require rho to be a physical state,
// so they also act on operator bases (superoperator construction).
namespace ops {

// op acting on targets, applied as op * rho.
Matrix left_multiply(const Matrix& rho, const Matrix& op,
                     const std::vector<std::size_t>& targets, std::size_t n);
// K rho K^dagger.
Matrix conjugate(const Matrix& rho, const Matrix& op, const std::vector<std::size_t>& targets,
                 std::size_t n);
Matrix apply_channel(const Matrix& rho, const ErrorChannel& e, std::size_t n);

}  // namespace ops

DensityState apply_gate(const DensityState& s, const Gate& g);
// Full-register unitary.
DensityState apply_unitary(const DensityState& s, const Matrix& u);
DensityState evolve(const DensityState& s, const WeightedPauliSum& h, double t);
DensityState apply_channel(const DensityState& s, const ErrorChannel& e);

// Column-stacking Liouville representation: vec(E(rho)) = M vec(rho).
class Superoperator {
 public:
  static Superoperator identity(std::size_t n);
  static Superoperator from_channel(const ErrorChannel& e, std::size_t n);
  static Superoperator from_unitary(const Matrix& u);

  std::size_t qubit_count() const noexcept { return n_; }
  const Matrix& matrix() const noexcept { return m_; }

  // This map followed by next.
  Superoperator then(const Superoperator& next) const;
  Matrix apply(const Matrix& rho) const;
  DensityState apply(const DensityState& s) const;

 private:
  Superoperator(std::size_t n, Matrix m) : n_(n), m_(std::move(m)) {}

  std::size_t n_ = 0;
  Matrix m_;
};

// Diagonal of rho, negatives clipped to 0; renormalized when the clipped
// mass exceeds 1e-9.
std::vector<double> z_distribution(const DensityState& s);

// Outcome index drawn from dist by inversion with one uniform draw.
std::uint64_t sample(const std::vector<double>& dist, CounterRng& rng);
std::uint64_t sample(const DensityState& s, CounterRng& rng);

// Bits of index as "q1 q2 ... qn", qubit 1 first.
std::string bitstring(std::uint64_t index, std::size_t n);
std::uint64_t parse_bitstring(std::string_view bits);

}  // namespace hqsa

#endif  // HQSA_ENGINE_HPP_
