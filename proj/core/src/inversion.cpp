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
#include "hqsa/inversion.hpp"

#include "hqsa/engine.hpp"
#include "hqsa/errors.hpp"
#include "hqsa/lattice.hpp"

namespace hqsa {

std::string to_string(InversionBasis b) {
  return b == InversionBasis::z_on_chromatic ? "z_on_chromatic" : "composite_iy_x";
}

InversionCircuit synthesize_inversion(const AccreditableHamiltonian& h) {
  if (h.family() != HamiltonianFamily::xy) {
    throw ValidationError("Z-layer inversion only negates pure XY Hamiltonians");
  }
  const auto subset = chromatic_subset(two_color(h.graph()));
  std::vector<PauliLetter> letters(h.qubit_count(), PauliLetter::I);
  for (int v : subset.vertices) letters[static_cast<std::size_t>(v - 1)] = PauliLetter::Z;
  return {PauliString(std::move(letters)), InversionBasis::z_on_chromatic};
}

InversionCircuit synthesize_inversion_xy_model(const AccreditableHamiltonian& h) {
  const auto subset = chromatic_subset(two_color(h.graph()));
  std::vector<PauliLetter> letters(h.qubit_count(), PauliLetter::X);
  for (int v : subset.vertices) letters[static_cast<std::size_t>(v - 1)] = PauliLetter::Y;
  // Z X = iY on every vertex of the subset.
  const auto phase = static_cast<std::uint8_t>(subset.vertices.size() % 4);
  return {PauliString(std::move(letters), phase), InversionBasis::composite_iy_x};
}

InversionCircuit synthesize_for(const AccreditableHamiltonian& h) {
  return h.family() == HamiltonianFamily::xy ? synthesize_inversion(h)
                                             : synthesize_inversion_xy_model(h);
}

bool verify_inversion_symbolic(const WeightedPauliSum& h, const InversionCircuit& c) {
  if (c.string.size() != h.qubit_count()) throw DimensionError("circuit size mismatch");
  return conjugate_sum(h, c.string) == -h;
}

double verify_inversion_numeric(const WeightedPauliSum& h, const InversionCircuit& c, double t) {
  if (c.string.size() != h.qubit_count()) throw DimensionError("circuit size mismatch");
  if (h.qubit_count() > kMatrixQubitCap) {
    throw CapacityError("numeric inversion check", h.qubit_count(), kMatrixQubitCap);
  }
  const HermitianSpectrum spectrum(to_matrix(h));
  const Matrix cm = c.string.to_matrix();
  const Matrix lhs = cm * spectrum.evolution(t) * cm.adjoint();
  const Matrix rhs = spectrum.evolution(-t);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace hqsa
