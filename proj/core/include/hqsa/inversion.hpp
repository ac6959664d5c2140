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

#ifndef HQSA_INVERSION_HPP_
#define HQSA_INVERSION_HPP_

#include <string>

#include "hqsa/hamiltonian.hpp"
#include "hqsa/pauli.hpp"

namespace hqsa {

enum class InversionBasis {
  z_on_chromatic,  // Z on one color class, I elsewhere
  composite_iy_x,  // (prod_S Z)(prod_all X) = i^|S| (Y on S, X elsewhere)
};

std::string to_string(InversionBasis b);

// A layer of single-qubit Paulis C with C H C^dagger = -H. The string's
// phase carries the global phase of the composite form; conjugation ignores
// it.
struct InversionCircuit {
  PauliString string;
  InversionBasis basis = InversionBasis::z_on_chromatic;
};

// Z on the color class containing vertex 1. Throws ValidationError for the
// on-site family (use synthesize_inversion_xy_model).
InversionCircuit synthesize_inversion(const AccreditableHamiltonian& h);

// Y on the color class containing vertex 1, X on its complement.
InversionCircuit synthesize_inversion_xy_model(const AccreditableHamiltonian& h);

// Picks the construction matching the Hamiltonian's family.
InversionCircuit synthesize_for(const AccreditableHamiltonian& h);

// conjugate_sum(h, c) == -h, term for term.
bool verify_inversion_symbolic(const WeightedPauliSum& h, const InversionCircuit& c);

// max_ij |(C e^{-iHt} C^dagger - e^{iHt})_ij|.
double verify_inversion_numeric(const WeightedPauliSum& h, const InversionCircuit& c, double t);

}  // namespace hqsa

#endif  // HQSA_INVERSION_HPP_
