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
 * @file    hqs_model.hpp
 * @brief   Hybrid analogue-digital circuit skeleton with error attachment.
 *
 * Execution order:
 *   prep -> A -> U1 -> exp(-iHt/2) -> B -> exp(-iHt/2) -> C -> U2 -> D -> Z readout
 *
 * Error channels attach to named points. Channels on prep, A, U1 and the two
 * evolutions act after their operation; channels on B, C, U2 and D act
 * before it; the measurement channel acts immediately before readout. With
 * this placement the errors can be rewritten as two composite maps that do
 * not depend on the A, B or D gates (see canonical_form).
 */

#ifndef HQSA_HQS_MODEL_HPP_
#define HQSA_HQS_MODEL_HPP_

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hqsa/engine.hpp"
#include "hqsa/pauli.hpp"

namespace hqsa {

enum class AttachPoint {
  prep,
  a_layer,
  u1,
  evolution_1,
  b_layer,
  evolution_2,
  c_layer,
  u2,
  d_layer,
  measurement,
};

inline constexpr std::array<AttachPoint, 10> kAttachPoints = {
    AttachPoint::prep,        AttachPoint::a_layer, AttachPoint::u1,
    AttachPoint::evolution_1, AttachPoint::b_layer, AttachPoint::evolution_2,
    AttachPoint::c_layer,     AttachPoint::u2,      AttachPoint::d_layer,
    AttachPoint::measurement};

std::string to_string(AttachPoint p);
std::optional<AttachPoint> parse_attach_point(std::string_view name);

enum class ComplianceMode { model_compliant, unconstrained };

std::string to_string(ComplianceMode m);

// One single-qubit gate per qubit; entry k acts on qubit k+1.
std::vector<Gate> identity_layer(std::size_t n);

struct HqsCircuit {
  std::size_t n = 0;
  std::vector<Gate> a_layer;
  std::vector<Gate> b_layer;
  std::vector<Gate> c_layer;
  std::vector<Gate> d_layer;
  // Encoding and decoding unitaries; an empty matrix means identity.
  Matrix u1;
  Matrix u2;
  WeightedPauliSum hamiltonian;
  double t = 0.0;
  // exp(-iHt/2), shared between circuits built from the same (H, t).
  std::shared_ptr<const Matrix> half_step;

  // Throws DimensionError on inconsistent layer lengths or sizes.
  void validate() const;
};

// exp(-iHt/2) for the circuit, from its cache when present.
Matrix half_step_evolution(const HqsCircuit& c);
std::shared_ptr<const Matrix> make_half_step(const WeightedPauliSum& h, double t);

// exp(-iH't/2) exp(iHt/2) on the whole register. Attached after both
// evolutions it replaces H by H'; unconstrained mode only.
ErrorChannel hamiltonian_replacement(const WeightedPauliSum& h, const WeightedPauliSum& h_prime,
                                     double t);

class ErrorConfig {
 public:
  ErrorConfig() = default;
  explicit ErrorConfig(ComplianceMode mode) : mode_(mode) {}

  ComplianceMode mode() const noexcept { return mode_; }

  // Appends a channel; several channels on one point act in insertion order.
  void attach(AttachPoint point, const ErrorChannel& channel);

  // Identity when nothing is attached.
  const ErrorChannel& at(AttachPoint point) const;
  bool error_free() const noexcept;
  const std::map<AttachPoint, ErrorChannel>& channels() const noexcept { return channels_; }

 private:
  ComplianceMode mode_ = ComplianceMode::model_compliant;
  std::map<AttachPoint, ErrorChannel> channels_;
};

// State just before the measurement channel and Z readout.
DensityState execute(const HqsCircuit& c, const ErrorConfig& e);

// Z-basis distribution after the measurement channel.
std::vector<double> exact_output_distribution(const HqsCircuit& c, const ErrorConfig& e);

// Error-free single-qubit gates with all remaining error folded into two
// composite maps around the half evolutions:
//   prep, E_prep, A, U1, U_half, first, B, U_half, second, C, U2, D, E_meas
// `first` and `second` are built from the channels, C, U1, U2, H and t only.
struct CanonicalForm {
  std::size_t n = 0;
  Superoperator first;
  Superoperator second;
  ErrorChannel prep;
  ErrorChannel measurement;
};

CanonicalForm canonical_form(const ErrorConfig& e, std::size_t n, const std::vector<Gate>& c_layer,
                             const Matrix& u1, const Matrix& u2, const Matrix& half_step);

std::vector<double> canonical_output_distribution(const HqsCircuit& c, const CanonicalForm& f);

}  // namespace hqsa

#endif  // HQSA_HQS_MODEL_HPP_
