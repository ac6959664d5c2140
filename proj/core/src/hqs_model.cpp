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
#include "hqsa/hqs_model.hpp"

#include "hqsa/errors.hpp"

namespace hqsa {

namespace {

const ErrorChannel kIdentityChannel;

DensityState apply_layer(DensityState s, const std::vector<Gate>& layer) {
  for (const auto& g : layer) {
    if (g.unitary().isIdentity(0.0)) continue;
    s = apply_gate(s, g);
  }
  return s;
}

DensityState apply_optional_unitary(const DensityState& s, const Matrix& u) {
  return u.size() == 0 ? s : apply_unitary(s, u);
}

Matrix layer_matrix(const std::vector<Gate>& layer, std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Identity(dim, dim);
  for (const auto& g : layer) m = ops::left_multiply(m, g.unitary(), g.targets(), n);
  return m;
}

Matrix or_identity(const Matrix& u, std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  return u.size() == 0 ? Matrix::Identity(dim, dim) : u;
}

}  // namespace

std::string to_string(AttachPoint p) {
  switch (p) {
    case AttachPoint::prep: return "prep";
    case AttachPoint::a_layer: return "a_layer";
    case AttachPoint::u1: return "u1";
    case AttachPoint::evolution_1: return "evolution_1";
    case AttachPoint::b_layer: return "b_layer";
    case AttachPoint::evolution_2: return "evolution_2";
    case AttachPoint::c_layer: return "c_layer";
    case AttachPoint::u2: return "u2";
    case AttachPoint::d_layer: return "d_layer";
    case AttachPoint::measurement: return "measurement";
  }
  return "?";
}

std::optional<AttachPoint> parse_attach_point(std::string_view name) {
  for (auto p : kAttachPoints) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string to_string(ComplianceMode m) {
  return m == ComplianceMode::model_compliant ? "model_compliant" : "unconstrained";
}

std::vector<Gate> identity_layer(std::size_t n) {
  std::vector<Gate> layer;
  layer.reserve(n);
  for (std::size_t q = 1; q <= n; ++q) layer.push_back(Gate::named("I", q));
  return layer;
}

void HqsCircuit::validate() const {
  if (n == 0) throw DimensionError("circuit needs at least one qubit");
  for (const auto* layer : {&a_layer, &b_layer, &c_layer, &d_layer}) {
    if (layer->size() != n) throw DimensionError("layer length must equal the qubit count");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& targets = (*layer)[k].targets();
      if (targets.size() != 1 || targets[0] != k + 1) {
        throw DimensionError("layer entry k must be a single-qubit gate on qubit k+1");
      }
    }
  }
  const auto dim = Eigen::Index{1} << n;
  for (const auto* u : {&u1, &u2}) {
    if (u->size() != 0 && (u->rows() != dim || u->cols() != dim)) {
      throw DimensionError("encoding unitary does not match the register");
    }
  }
  if (hamiltonian.qubit_count() != n) throw DimensionError("Hamiltonian size mismatch");
  if (half_step && half_step->rows() != dim) throw DimensionError("cached evolution size mismatch");
}

std::shared_ptr<const Matrix> make_half_step(const WeightedPauliSum& h, double t) {
  return std::make_shared<const Matrix>(evolution_operator(h, t / 2));
}

ErrorChannel hamiltonian_replacement(const WeightedPauliSum& h, const WeightedPauliSum& h_prime,
                                     double t) {
  if (h.qubit_count() != h_prime.qubit_count()) {
    throw DimensionError("replacement Hamiltonian acts on a different register");
  }
  const Matrix w = evolution_operator(h_prime, t / 2) * evolution_operator(h, -t / 2);
  return ErrorChannel::unitary(w, {}, "hamiltonian_replacement");
}

Matrix half_step_evolution(const HqsCircuit& c) {
  return c.half_step ? *c.half_step : evolution_operator(c.hamiltonian, c.t / 2);
}

void ErrorConfig::attach(AttachPoint point, const ErrorChannel& channel) {
  auto it = channels_.find(point);
  if (it == channels_.end()) {
    channels_.emplace(point, channel);
  } else {
    it->second = it->second.then(channel);
  }
}

const ErrorChannel& ErrorConfig::at(AttachPoint point) const {
  const auto it = channels_.find(point);
  return it == channels_.end() ? kIdentityChannel : it->second;
}

bool ErrorConfig::error_free() const noexcept {
  for (const auto& [point, ch] : channels_) {
    if (!ch.is_identity()) return false;
  }
  return true;
}

DensityState execute(const HqsCircuit& c, const ErrorConfig& e) {
  c.validate();
  const Matrix half = half_step_evolution(c);
  const auto channel = [&e](const DensityState& s, AttachPoint p) {
    const auto& ch = e.at(p);
    return ch.is_identity() ? s : apply_channel(s, ch);
  };

  DensityState s = prepare_zero(c.n);
  s = channel(s, AttachPoint::prep);
  s = apply_layer(s, c.a_layer);
  s = channel(s, AttachPoint::a_layer);
  s = apply_optional_unitary(s, c.u1);
  s = channel(s, AttachPoint::u1);
  s = apply_unitary(s, half);
  s = channel(s, AttachPoint::evolution_1);
  s = channel(s, AttachPoint::b_layer);
  s = apply_layer(s, c.b_layer);
  s = apply_unitary(s, half);
  s = channel(s, AttachPoint::evolution_2);
  s = channel(s, AttachPoint::c_layer);
  s = apply_layer(s, c.c_layer);
  s = channel(s, AttachPoint::u2);
  s = apply_optional_unitary(s, c.u2);
  s = channel(s, AttachPoint::d_layer);
  s = apply_layer(s, c.d_layer);
  return s;
}

std::vector<double> exact_output_distribution(const HqsCircuit& c, const ErrorConfig& e) {
  const auto& meas = e.at(AttachPoint::measurement);
  const DensityState s = execute(c, e);
  return z_distribution(meas.is_identity() ? s : apply_channel(s, meas));
}

CanonicalForm canonical_form(const ErrorConfig& e, std::size_t n, const std::vector<Gate>& c_layer,
                             const Matrix& u1, const Matrix& u2, const Matrix& half_step) {
  const auto sup = [&e, n](AttachPoint p) { return Superoperator::from_channel(e.at(p), n); };
  const Matrix u1m = or_identity(u1, n);
  const Matrix u2m = or_identity(u2, n);
  const Matrix cm = layer_matrix(c_layer, n);
  const auto half = Superoperator::from_unitary(half_step);
  const auto half_inv = Superoperator::from_unitary(half_step.adjoint());

  // first = E_B . E_evo1 . U_half . E_U1 . U1 . E_A . U1^dagger . U_half^dagger
  Superoperator first = half_inv.then(Superoperator::from_unitary(u1m.adjoint()))
                            .then(sup(AttachPoint::a_layer))
                            .then(Superoperator::from_unitary(u1m))
                            .then(sup(AttachPoint::u1))
                            .then(half)
                            .then(sup(AttachPoint::evolution_1))
                            .then(sup(AttachPoint::b_layer));

  // second = C^dagger . U2^dagger . E_D . U2 . E_U2 . C . E_C . E_evo2
  Superoperator second = sup(AttachPoint::evolution_2)
                             .then(sup(AttachPoint::c_layer))
                             .then(Superoperator::from_unitary(cm))
                             .then(sup(AttachPoint::u2))
                             .then(Superoperator::from_unitary(u2m))
                             .then(sup(AttachPoint::d_layer))
                             .then(Superoperator::from_unitary(u2m.adjoint()))
                             .then(Superoperator::from_unitary(cm.adjoint()));

  return CanonicalForm{n, std::move(first), std::move(second), e.at(AttachPoint::prep),
                       e.at(AttachPoint::measurement)};
}

std::vector<double> canonical_output_distribution(const HqsCircuit& c, const CanonicalForm& f) {
  c.validate();
  if (f.n != c.n) throw DimensionError("canonical form size mismatch");
  const Matrix half = half_step_evolution(c);
  DensityState s = apply_channel(prepare_zero(c.n), f.prep);
  s = apply_layer(s, c.a_layer);
  s = apply_optional_unitary(s, c.u1);
  s = apply_unitary(s, half);
  s = f.first.apply(s);
  s = apply_layer(s, c.b_layer);
  s = apply_unitary(s, half);
  s = f.second.apply(s);
  s = apply_layer(s, c.c_layer);
  s = apply_optional_unitary(s, c.u2);
  s = apply_layer(s, c.d_layer);
  return z_distribution(apply_channel(s, f.measurement));
}

}  // namespace hqsa
