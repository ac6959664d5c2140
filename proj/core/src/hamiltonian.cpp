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
#include "hqsa/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "hqsa/errors.hpp"

namespace hqsa {

namespace {

void check_couplings(const InteractionGraph& graph, const CouplingTable& couplings) {
  if (couplings.j.size() != graph.edge_count()) {
    throw ValidationError("couplings must cover exactly the graph's edges");
  }
  for (const auto& [edge, value] : couplings.j) {
    if (!graph.has_edge(edge.u, edge.v)) {
      throw ValidationError("coupling on non-edge " + std::to_string(edge.u) + "-" +
                            std::to_string(edge.v));
    }
    if (!std::isfinite(value)) throw ValidationError("non-finite coupling");
  }
  if (couplings.onsite && !std::isfinite(*couplings.onsite)) {
    throw ValidationError("non-finite on-site strength");
  }
}

WeightedPauliSum interaction_sum(const InteractionGraph& graph,
                                 const CouplingTable& couplings) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  WeightedPauliSum sum(n);
  for (const auto& edge : graph.edges()) {
    const double jv = couplings.j.at(edge);
    for (auto letter : {PauliLetter::X, PauliLetter::Y}) {
      std::vector<PauliLetter> letters(n, PauliLetter::I);
      letters[static_cast<std::size_t>(edge.u - 1)] = letter;
      letters[static_cast<std::size_t>(edge.v - 1)] = letter;
      sum.add(jv, PauliString(std::move(letters)));
    }
  }
  return sum;
}

}  // namespace

CouplingTable CouplingTable::uniform(const InteractionGraph& g, double coupling,
                                     std::optional<double> onsite) {
  CouplingTable table;
  for (const auto& e : g.edges()) table.j[e] = coupling;
  table.onsite = onsite;
  return table;
}

AccreditableHamiltonian build_accreditable(const InteractionGraph& graph,
                                           const CouplingTable& couplings) {
  if (couplings.onsite) {
    throw ValidationError("on-site terms are not part of the accreditable family");
  }
  check_couplings(graph, couplings);
  (void)two_color(graph);

  AccreditableHamiltonian h;
  h.graph_ = graph;
  h.couplings_ = couplings;
  h.sum_ = interaction_sum(graph, couplings);
  h.family_ = HamiltonianFamily::xy;
  return h;
}

AccreditableHamiltonian build_xy_model(const InteractionGraph& graph,
                                       const CouplingTable& couplings) {
  if (!couplings.onsite) throw ValidationError("XY model needs an on-site strength");
  check_couplings(graph, couplings);
  (void)two_color(graph);

  AccreditableHamiltonian h;
  h.graph_ = graph;
  h.couplings_ = couplings;
  h.sum_ = interaction_sum(graph, couplings);
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  for (std::size_t q = 0; q < n; ++q) {
    h.sum_.add(*couplings.onsite, PauliString::single(n, q, PauliLetter::Z));
  }
  h.family_ = HamiltonianFamily::xy_onsite;
  return h;
}

AccreditableHamiltonian hamiltonian_from_sum(const WeightedPauliSum& sum) {
  const auto n = sum.qubit_count();
  std::vector<Edge> edges;
  CouplingTable couplings;
  std::optional<double> onsite;
  std::size_t onsite_terms = 0;

  for (const auto& term : sum.terms()) {
    std::vector<int> support;
    for (std::size_t q = 0; q < n; ++q) {
      if (term.string[q] != PauliLetter::I) support.push_back(static_cast<int>(q) + 1);
    }
    const auto& s = term.string;
    if (support.size() == 1 && s[static_cast<std::size_t>(support[0] - 1)] == PauliLetter::Z) {
      if (onsite && *onsite != term.coefficient) {
        throw ValidationError("on-site Z terms must share one strength");
      }
      onsite = term.coefficient;
      ++onsite_terms;
      continue;
    }
    const bool pair = support.size() == 2 &&
                      s[static_cast<std::size_t>(support[0] - 1)] ==
                          s[static_cast<std::size_t>(support[1] - 1)];
    const auto letter = pair ? s[static_cast<std::size_t>(support[0] - 1)] : PauliLetter::I;
    if (!pair || letter == PauliLetter::Z) {
      throw ValidationError("term " + s.letters_string() + " is not an XY interaction");
    }
    const Edge e = make_edge(support[0], support[1]);
    if (letter == PauliLetter::X) {
      edges.push_back(e);
      couplings.j[e] = term.coefficient;
    }
  }
  if (onsite && onsite_terms != n) {
    throw ValidationError("on-site Z terms must appear on every qubit");
  }

  InteractionGraph graph(static_cast<int>(n), edges);
  couplings.onsite = onsite;
  auto h = onsite ? build_xy_model(graph, couplings) : build_accreditable(graph, couplings);
  if (!(h.sum() == sum)) {
    throw ValidationError("XX and YY couplings differ on some edge");
  }
  return h;
}

}  // namespace hqsa
