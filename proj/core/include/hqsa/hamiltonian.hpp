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

#ifndef HQSA_HAMILTONIAN_HPP_
#define HQSA_HAMILTONIAN_HPP_

#include <map>
#include <optional>

#include "hqsa/lattice.hpp"
#include "hqsa/pauli.hpp"

namespace hqsa {

// Per-edge XY couplings plus an optional on-site Z strength.
struct CouplingTable {
  std::map<Edge, double> j;
  std::optional<double> onsite;

  static CouplingTable uniform(const InteractionGraph& g, double coupling,
                               std::optional<double> onsite = std::nullopt);

  friend bool operator==(const CouplingTable&, const CouplingTable&) = default;
};

enum class HamiltonianFamily {
  xy,            // sum_<i,j> J_ij (X_i X_j + Y_i Y_j)
  xy_onsite,     // the above plus U sum_k Z_k
};

class AccreditableHamiltonian {
 public:
  const InteractionGraph& graph() const noexcept { return graph_; }
  const CouplingTable& couplings() const noexcept { return couplings_; }
  const WeightedPauliSum& sum() const noexcept { return sum_; }
  HamiltonianFamily family() const noexcept { return family_; }
  std::size_t qubit_count() const noexcept {
    return static_cast<std::size_t>(graph_.vertex_count());
  }

 private:
  friend AccreditableHamiltonian build_accreditable(const InteractionGraph&,
                                                    const CouplingTable&);
  friend AccreditableHamiltonian build_xy_model(const InteractionGraph&,
                                                const CouplingTable&);

  InteractionGraph graph_;
  CouplingTable couplings_;
  WeightedPauliSum sum_;
  HamiltonianFamily family_ = HamiltonianFamily::xy;
};

// XY interactions on a 2-colourable graph. Throws NotTwoColourable, or
// ValidationError when couplings do not cover exactly the graph's edges or
// an on-site strength is present.
AccreditableHamiltonian build_accreditable(const InteractionGraph& graph,
                                           const CouplingTable& couplings);

// XY interactions plus U*Z on every vertex; couplings.onsite is required.
AccreditableHamiltonian build_xy_model(const InteractionGraph& graph,
                                       const CouplingTable& couplings);

// Recovers graph and couplings from a sum made only of J(XX+YY) pairs and
// optional uniform single-qubit Z terms.
AccreditableHamiltonian hamiltonian_from_sum(const WeightedPauliSum& sum);

}  // namespace hqsa

#endif  // HQSA_HAMILTONIAN_HPP_
