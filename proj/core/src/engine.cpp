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
#include "hqsa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "hqsa/errors.hpp"

namespace hqsa {

namespace {

using cd = std::complex<double>;

std::size_t log2_dim(Eigen::Index dim) {
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw DimensionError("dimension is not a power of two");
  return n;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(what) + " must lie in [0, 1]");
  }
}

void check_qubits(const std::vector<std::size_t>& qubits) {
  std::set<std::size_t> seen;
  for (auto q : qubits) {
    if (q == 0) throw DimensionError("qubit indices are 1-based");
    if (!seen.insert(q).second) throw DimensionError("repeated qubit in target list");
  }
}

std::vector<std::size_t> all_qubits(std::size_t n) {
  std::vector<std::size_t> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = i + 1;
  return q;
}

Matrix pauli_matrix(const std::string& letters) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : letters) {
    const Eigen::Matrix2cd l = letter_matrix(letter_from_char(c));
    Matrix next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        next.block(2 * i, 2 * j, 2, 2) = m(i, j) * l;
      }
    }
    m = std::move(next);
  }
  return m;
}

std::string pauli_label(std::size_t index, std::size_t k) {
  std::string s(k, 'I');
  for (std::size_t a = 0; a < k; ++a) s[a] = "IXYZ"[(index >> (2 * (k - 1 - a))) & 3U];
  return s;
}

}  // namespace

HermitianSpectrum::HermitianSpectrum(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

Matrix HermitianSpectrum::evolution(double t) const {
  Eigen::VectorXcd phases(values_.size());
  for (Eigen::Index k = 0; k < values_.size(); ++k) {
    phases(k) = std::exp(cd(0.0, -values_(k) * t));
  }
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

Matrix evolution_operator(const WeightedPauliSum& h, double t) {
  if (h.qubit_count() > kMatrixQubitCap) {
    throw CapacityError("evolution operator", h.qubit_count(), kMatrixQubitCap);
  }
  return HermitianSpectrum(to_matrix(h)).evolution(t);
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Matrix err = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return err.cwiseAbs().maxCoeff() <= tol;
}

DensityState::DensityState(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols()) throw DimensionError("density matrix must be square");
  n_ = log2_dim(rho_.rows());
  if (n_ > kDensityQubitCap) throw CapacityError("density matrix", n_, kDensityQubitCap);
}

DensityState DensityState::zero(std::size_t n) { return prepare_zero(n); }

DensityState DensityState::maximally_mixed(std::size_t n) {
  if (n > kDensityQubitCap) throw CapacityError("density matrix", n, kDensityQubitCap);
  const auto dim = Eigen::Index{1} << n;
  return DensityState(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityState DensityState::from_statevector(const Eigen::VectorXcd& psi) {
  return DensityState(psi * psi.adjoint() / psi.squaredNorm());
}

bool DensityState::is_physical(double tol) const {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho_.trace() - cd(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

DensityState prepare_zero(std::size_t n) {
  if (n == 0) throw DimensionError("register needs at least one qubit");
  if (n > kDensityQubitCap) throw CapacityError("density matrix", n, kDensityQubitCap);
  const auto dim = Eigen::Index{1} << n;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return DensityState(std::move(rho));
}

Eigen::Matrix2cd named_unitary(std::string_view name) {
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  if (name == "I") return letter_matrix(PauliLetter::I);
  if (name == "X") return letter_matrix(PauliLetter::X);
  if (name == "Y") return letter_matrix(PauliLetter::Y);
  if (name == "Z") return letter_matrix(PauliLetter::Z);
  if (name == "H") {
    m << r, r, r, -r;
  } else if (name == "S") {
    m << 1, 0, 0, cd(0, 1);
  } else if (name == "Sdg") {
    m << 1, 0, 0, cd(0, -1);
  } else if (name == "T") {
    m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
  } else if (name == "Tdg") {
    m << 1, 0, 0, std::polar(1.0, -std::numbers::pi / 4);
  } else {
    throw std::invalid_argument("unknown gate name '" + std::string(name) + "'");
  }
  return m;
}

Eigen::Matrix2cd bloch_unitary(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda);
  return m;
}

Gate::Gate(std::string label, Matrix u, std::vector<std::size_t> targets)
    : label_(std::move(label)), u_(std::move(u)), targets_(std::move(targets)) {
  check_qubits(targets_);
  if (targets_.empty() || u_.rows() != (Eigen::Index{1} << targets_.size())) {
    throw DimensionError("gate matrix size does not match its targets");
  }
  if (!is_unitary(u_, 1e-12)) throw ValidationError("gate '" + label_ + "' is not unitary");
}

Gate Gate::named(std::string_view name, std::size_t qubit) {
  return Gate(std::string(name), named_unitary(name), {qubit});
}

Gate Gate::bloch(double theta, double phi, double lambda, std::size_t qubit) {
  return Gate("U3", bloch_unitary(theta, phi, lambda), {qubit});
}

Gate Gate::single(const Eigen::Matrix2cd& u, std::size_t qubit, std::string label) {
  return Gate(std::move(label), u, {qubit});
}

Gate Gate::two_qubit(const Eigen::Matrix4cd& u, std::size_t q1, std::size_t q2,
                     std::string label) {
  return Gate(std::move(label), u, {q1, q2});
}

ErrorChannel::ErrorChannel(std::string label, std::vector<Matrix> kraus,
                           std::vector<std::size_t> qubits)
    : label_(std::move(label)) {
  check_qubits(qubits);
  if (kraus.empty()) throw ValidationError("channel '" + label_ + "' has no Kraus operators");
  const Eigen::Index dim = kraus.front().rows();
  if (!qubits.empty() && dim != (Eigen::Index{1} << qubits.size())) {
    throw DimensionError("Kraus operator size does not match the channel's qubits");
  }
  (void)log2_dim(dim);
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& k : kraus) {
    if (k.rows() != dim || k.cols() != dim) throw DimensionError("Kraus operators differ in size");
    sum += k.adjoint() * k;
  }
  if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError("channel '" + label_ + "' is not trace preserving");
  }
  blocks_.push_back({std::move(qubits), std::move(kraus)});
}

ErrorChannel ErrorChannel::identity() { return ErrorChannel(); }

ErrorChannel ErrorChannel::unitary(const Matrix& u, std::vector<std::size_t> qubits,
                                   std::string label) {
  if (!is_unitary(u, 1e-10)) throw ValidationError("unitary error is not unitary");
  return ErrorChannel(std::move(label), {u}, std::move(qubits));
}

ErrorChannel ErrorChannel::bit_flip(double p, const std::vector<std::size_t>& qubits) {
  check_probability(p, "bit-flip probability");
  ErrorChannel out;
  for (auto q : qubits) {
    out = out.then(ErrorChannel("bit_flip",
                                {std::sqrt(1 - p) * pauli_matrix("I"), std::sqrt(p) * pauli_matrix("X")},
                                {q}));
  }
  return out.relabeled("bit_flip");
}

ErrorChannel ErrorChannel::phase_flip(double p, const std::vector<std::size_t>& qubits) {
  check_probability(p, "phase-flip probability");
  ErrorChannel out;
  for (auto q : qubits) {
    out = out.then(ErrorChannel("phase_flip",
                                {std::sqrt(1 - p) * pauli_matrix("I"), std::sqrt(p) * pauli_matrix("Z")},
                                {q}));
  }
  return out.relabeled("phase_flip");
}

ErrorChannel ErrorChannel::amplitude_damping(double gamma,
                                             const std::vector<std::size_t>& qubits) {
  check_probability(gamma, "damping rate");
  Matrix k0 = Matrix::Zero(2, 2);
  Matrix k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  ErrorChannel out;
  for (auto q : qubits) out = out.then(ErrorChannel("amplitude_damping", {k0, k1}, {q}));
  return out.relabeled("amplitude_damping");
}

ErrorChannel ErrorChannel::depolarizing(double p, std::vector<std::size_t> qubits,
                                        std::size_t register_size) {
  check_probability(p, "depolarizing probability");
  const std::size_t k = qubits.empty() ? register_size : qubits.size();
  if (k == 0) throw DimensionError("depolarizing channel needs its qubit count");
  if (k > kDensityQubitCap) throw CapacityError("depolarizing channel", k, kDensityQubitCap);
  const std::size_t count = std::size_t{1} << (2 * k);
  const double each = p / static_cast<double>(count);
  std::vector<Matrix> kraus;
  kraus.reserve(count);
  kraus.push_back(std::sqrt(1 - p + each) * pauli_matrix(std::string(k, 'I')));
  if (each > 0) {
    for (std::size_t i = 1; i < count; ++i) {
      kraus.push_back(std::sqrt(each) * pauli_matrix(pauli_label(i, k)));
    }
  }
  return ErrorChannel("depolarizing", std::move(kraus), std::move(qubits));
}

ErrorChannel ErrorChannel::pauli_mixture(const std::map<std::string, double>& probabilities,
                                         std::vector<std::size_t> qubits) {
  if (qubits.empty()) throw DimensionError("Pauli mixture needs explicit qubits");
  const std::string identity_key(qubits.size(), 'I');
  double total = 0.0;
  std::map<std::string, double> weights;
  for (const auto& [letters, prob] : probabilities) {
    if (letters.size() != qubits.size()) {
      throw DimensionError("Pauli mixture key '" + letters + "' does not match its qubits");
    }
    for (char c : letters) (void)letter_from_char(c);
    check_probability(prob, "Pauli probability");
    weights[letters] += prob;
    total += prob;
  }
  if (total > 1.0 + 1e-12) throw ValidationError("Pauli mixture probabilities exceed 1");
  weights[identity_key] += std::max(0.0, 1.0 - total);
  std::vector<Matrix> kraus;
  for (const auto& [letters, w] : weights) {
    if (w > 0) kraus.push_back(std::sqrt(w) * pauli_matrix(letters));
  }
  return ErrorChannel("pauli_mixture", std::move(kraus), std::move(qubits));
}

ErrorChannel ErrorChannel::then(const ErrorChannel& next) const {
  ErrorChannel out = *this;
  out.blocks_.insert(out.blocks_.end(), next.blocks_.begin(), next.blocks_.end());
  if (is_identity()) out.label_ = next.label_;
  return out;
}

ErrorChannel ErrorChannel::relabeled(std::string label) const {
  ErrorChannel out = *this;
  out.label_ = std::move(label);
  return out;
}

std::vector<std::size_t> ErrorChannel::support(std::size_t n) const {
  std::set<std::size_t> s;
  for (const auto& b : blocks_) {
    if (b.qubits.empty()) return all_qubits(n);
    for (auto q : b.qubits) {
      if (q > n) throw DimensionError("channel qubit outside the register");
      s.insert(q);
    }
  }
  return {s.begin(), s.end()};
}

std::vector<Matrix> ErrorChannel::flatten_kraus(std::size_t n) const {
  const auto sup = support(n);
  const std::size_t m = sup.size();
  const auto dim = Eigen::Index{1} << m;
  std::vector<Matrix> acc{Matrix::Identity(dim, dim)};
  for (const auto& b : blocks_) {
    const auto qubits = b.qubits.empty() ? all_qubits(n) : b.qubits;
    std::vector<std::size_t> local;
    for (auto q : qubits) {
      local.push_back(static_cast<std::size_t>(std::find(sup.begin(), sup.end(), q) - sup.begin()) + 1);
    }
    std::vector<Matrix> next;
    next.reserve(acc.size() * b.kraus.size());
    for (const auto& k : b.kraus) {
      const Matrix embedded = ops::left_multiply(Matrix::Identity(dim, dim), k, local, m);
      for (const auto& a : acc) next.push_back(embedded * a);
    }
    acc = std::move(next);
  }
  return acc;
}

namespace ops {

Matrix left_multiply(const Matrix& rho, const Matrix& op, const std::vector<std::size_t>& targets,
                     std::size_t n) {
  const std::size_t k = targets.size();
  if (op.rows() != (Eigen::Index{1} << k) || op.cols() != op.rows()) {
    throw DimensionError("operator size does not match its targets");
  }
  const auto dim = Eigen::Index{1} << n;
  if (rho.rows() != dim) throw DimensionError("operator register size mismatch");

  bool natural = k == n;
  for (std::size_t a = 0; a < k && natural; ++a) natural = targets[a] == a + 1;
  if (natural) return op * rho;

  std::size_t mask = 0;
  std::vector<Eigen::Index> offsets(std::size_t{1} << k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    if (targets[a] == 0 || targets[a] > n) throw DimensionError("qubit outside the register");
    const std::size_t bit = std::size_t{1} << (n - targets[a]);
    mask |= bit;
    for (std::size_t s = 0; s < offsets.size(); ++s) {
      if ((s >> (k - 1 - a)) & 1U) offsets[s] += static_cast<Eigen::Index>(bit);
    }
  }

  Matrix out(rho.rows(), rho.cols());
  const auto sub = static_cast<Eigen::Index>(offsets.size());
  Eigen::VectorXcd gathered(sub);
  for (Eigen::Index col = 0; col < rho.cols(); ++col) {
    for (Eigen::Index rest = 0; rest < dim; ++rest) {
      if (static_cast<std::size_t>(rest) & mask) continue;
      for (Eigen::Index s = 0; s < sub; ++s) gathered(s) = rho(rest + offsets[s], col);
      for (Eigen::Index r = 0; r < sub; ++r) {
        cd acc = 0.0;
        for (Eigen::Index s = 0; s < sub; ++s) acc += op(r, s) * gathered(s);
        out(rest + offsets[r], col) = acc;
      }
    }
  }
  return out;
}

Matrix conjugate(const Matrix& rho, const Matrix& op, const std::vector<std::size_t>& targets,
                 std::size_t n) {
  const Matrix left = left_multiply(rho, op, targets, n);
  return left_multiply(left.adjoint(), op, targets, n).adjoint();
}

Matrix apply_channel(const Matrix& rho, const ErrorChannel& e, std::size_t n) {
  Matrix current = rho;
  for (const auto& block : e.blocks()) {
    const auto qubits = block.qubits.empty() ? all_qubits(n) : block.qubits;
    if (block.kraus.front().rows() != (Eigen::Index{1} << qubits.size())) {
      throw DimensionError("channel '" + e.label() + "' does not fit the register");
    }
    Matrix next = Matrix::Zero(current.rows(), current.cols());
    for (const auto& k : block.kraus) next += conjugate(current, k, qubits, n);
    current = std::move(next);
  }
  return current;
}

}  // namespace ops

DensityState apply_gate(const DensityState& s, const Gate& g) {
  return DensityState(ops::conjugate(s.rho(), g.unitary(), g.targets(), s.qubit_count()));
}

DensityState apply_unitary(const DensityState& s, const Matrix& u) {
  if (u.rows() != s.dimension()) throw DimensionError("unitary size does not match the state");
  return DensityState(u * s.rho() * u.adjoint());
}

DensityState evolve(const DensityState& s, const WeightedPauliSum& h, double t) {
  if (h.qubit_count() != s.qubit_count()) throw DimensionError("Hamiltonian size mismatch");
  return apply_unitary(s, evolution_operator(h, t));
}

DensityState apply_channel(const DensityState& s, const ErrorChannel& e) {
  return DensityState(ops::apply_channel(s.rho(), e, s.qubit_count()));
}

Superoperator Superoperator::identity(std::size_t n) {
  const auto d2 = Eigen::Index{1} << (2 * n);
  return Superoperator(n, Matrix::Identity(d2, d2));
}

Superoperator Superoperator::from_channel(const ErrorChannel& e, std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  Matrix m(dim * dim, dim * dim);
  Matrix basis = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      basis(i, j) = 1.0;
      const Matrix image = ops::apply_channel(basis, e, n);
      m.col(i + j * dim) = Eigen::Map<const Eigen::VectorXcd>(image.data(), dim * dim);
      basis(i, j) = 0.0;
    }
  }
  return Superoperator(n, std::move(m));
}

Superoperator Superoperator::from_unitary(const Matrix& u) {
  const std::size_t n = log2_dim(u.rows());
  const Eigen::Index dim = u.rows();
  // vec(U rho U^dagger) = (conj(U) kron U) vec(rho).
  Matrix m(dim * dim, dim * dim);
  const Matrix uc = u.conjugate();
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) m.block(a * dim, b * dim, dim, dim) = uc(a, b) * u;
  }
  return Superoperator(n, std::move(m));
}

Superoperator Superoperator::then(const Superoperator& next) const {
  if (next.n_ != n_) throw DimensionError("superoperator size mismatch");
  return Superoperator(n_, next.m_ * m_);
}

Matrix Superoperator::apply(const Matrix& rho) const {
  const auto dim = Eigen::Index{1} << n_;
  if (rho.rows() != dim || rho.cols() != dim) throw DimensionError("superoperator size mismatch");
  const Eigen::VectorXcd v = m_ * Eigen::Map<const Eigen::VectorXcd>(rho.data(), dim * dim);
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

DensityState Superoperator::apply(const DensityState& s) const {
  return DensityState(apply(s.rho()));
}

std::vector<double> z_distribution(const DensityState& s) {
  const auto dim = s.dimension();
  std::vector<double> p(static_cast<std::size_t>(dim));
  double clipped = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double v = s.rho()(i, i).real();
    if (v < 0) clipped -= v;
    p[static_cast<std::size_t>(i)] = std::max(0.0, v);
  }
  if (clipped > 1e-9) {
    double total = 0.0;
    for (double v : p) total += v;
    for (double& v : p) v /= total;
  }
  return p;
}

std::uint64_t sample(const std::vector<double>& dist, CounterRng& rng) {
  if (dist.empty()) throw DimensionError("empty distribution");
  double total = 0.0;
  for (double v : dist) total += v;
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] <= 0) continue;
    cumulative += dist[i];
    last_nonzero = i;
    if (u < cumulative) return i;
  }
  return last_nonzero;
}

std::uint64_t sample(const DensityState& s, CounterRng& rng) {
  return sample(z_distribution(s), rng);
}

std::string bitstring(std::uint64_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q) {
    if ((index >> (n - 1 - q)) & 1U) s[q] = '1';
  }
  return s;
}

std::uint64_t parse_bitstring(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) throw std::invalid_argument("bad bitstring length");
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must be 0/1");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

}  // namespace hqsa
