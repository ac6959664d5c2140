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
// Random models shared by unit, property and acceptance tests.
#ifndef HQSA_TESTS_RANDOM_MODELS_HPP_
#define HQSA_TESTS_RANDOM_MODELS_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hqsa/engine.hpp"
#include "hqsa/hamiltonian.hpp"
#include "hqsa/lattice.hpp"
#include "hqsa/pauli.hpp"
#include "hqsa/trap_target.hpp"

namespace hqsa::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
inline Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

// CPTP map on `qubits` with `environment` ancilla qubits, via a random
// Stinespring dilation: K_a = (I (x) <a|) V (I (x) |0>).
inline ErrorChannel random_channel(std::vector<std::size_t> qubits, Rng& rng,
                                   std::size_t environment = 1) {
  const Eigen::Index d = Eigen::Index{1} << qubits.size();
  const Eigen::Index e = Eigen::Index{1} << environment;
  const Matrix v = random_unitary(d * e, rng);
  std::vector<Matrix> kraus;
  for (Eigen::Index a = 0; a < e; ++a) {
    Matrix k(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) k(i, j) = v(i * e + a, j * e);
    kraus.push_back(k);
  }
  return ErrorChannel("random", std::move(kraus), std::move(qubits));
}

inline ErrorChannel random_pauli_mixture(std::vector<std::size_t> qubits, Rng& rng,
                                         double total = 0.5) {
  const std::size_t k = qubits.size();
  const std::size_t count = std::size_t{1} << (2 * k);
  std::vector<double> w(count - 1);
  double sum = 0.0;
  for (auto& x : w) sum += (x = uniform(rng, 0.0, 1.0));
  std::map<std::string, double> probs;
  for (std::size_t m = 1; m < count; ++m) {
    std::string letters;
    for (std::size_t a = 0; a < k; ++a) letters += "IXYZ"[(m >> (2 * (k - 1 - a))) & 3U];
    probs[letters] = total * w[m - 1] / sum;
  }
  return ErrorChannel::pauli_mixture(probs, std::move(qubits));
}

// Random bipartite graph: vertices split by a random side, edges only across.
inline InteractionGraph random_bipartite_graph(int vertices, double density, Rng& rng) {
  std::vector<int> side(static_cast<std::size_t>(vertices));
  for (auto& s : side) s = uniform_int(rng, 0, 1);
  std::vector<Edge> edges;
  for (int a = 1; a <= vertices; ++a)
    for (int b = a + 1; b <= vertices; ++b)
      if (side[a - 1] != side[b - 1] && uniform(rng, 0.0, 1.0) < density)
        edges.push_back(make_edge(a, b));
  return InteractionGraph(vertices, edges);
}

inline InteractionGraph path_graph(int vertices) {
  std::vector<Edge> edges;
  for (int a = 1; a < vertices; ++a) edges.push_back(make_edge(a, a + 1));
  return InteractionGraph(vertices, edges);
}

inline InteractionGraph cycle_graph(int vertices) {
  std::vector<Edge> edges;
  for (int a = 1; a < vertices; ++a) edges.push_back(make_edge(a, a + 1));
  edges.push_back(make_edge(1, vertices));
  return InteractionGraph(vertices, edges);
}

inline CouplingTable random_couplings(const InteractionGraph& g, Rng& rng, double lo = -2.0,
                                      double hi = 2.0) {
  CouplingTable c;
  for (const auto& e : g.edges()) c.j[e] = uniform(rng, lo, hi);
  return c;
}

// 2-colourable graph of one of several shapes with at most max_vertices.
inline InteractionGraph random_two_colourable(int max_vertices, Rng& rng) {
  const int shapes = max_vertices >= 4 ? 3 : (max_vertices >= 2 ? 1 : 0);
  switch (uniform_int(rng, 0, shapes)) {
    case 0: {
      const int rows = uniform_int(rng, 1, std::min(3, max_vertices));
      const int cols = std::max(1, std::min(max_vertices / rows, uniform_int(rng, 1, 4)));
      return square_lattice(rows, cols);
    }
    case 1:
      return path_graph(uniform_int(rng, 1, max_vertices));
    case 3: {
      const int half = uniform_int(rng, 2, std::max(2, max_vertices / 2));
      return cycle_graph(2 * half);
    }
    case 2:
      return random_bipartite_graph(uniform_int(rng, 2, max_vertices), 0.6, rng);
    default:
      return path_graph(uniform_int(rng, 1, max_vertices));
  }
}

inline PauliString random_pauli_string(std::size_t n, Rng& rng) {
  std::vector<PauliLetter> letters(n);
  for (auto& l : letters) l = static_cast<PauliLetter>(uniform_int(rng, 0, 3));
  return PauliString(std::move(letters), static_cast<std::uint8_t>(uniform_int(rng, 0, 3)));
}

inline TrapRandomness random_trap_randomness(std::size_t n, Rng& rng) {
  return TrapRandomness::from_index(
      std::uniform_int_distribution<std::uint64_t>(0, trap_randomness_count(n) - 1)(rng), n);
}

inline std::vector<Gate> random_layer(std::size_t n, Rng& rng) {
  std::vector<Gate> layer;
  for (std::size_t q = 1; q <= n; ++q) {
    layer.push_back(Gate::bloch(uniform(rng, 0, std::numbers::pi), uniform(rng, 0, 2 * std::numbers::pi),
                                uniform(rng, 0, 2 * std::numbers::pi), q));
  }
  return layer;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace hqsa::testing

#endif  // HQSA_TESTS_RANDOM_MODELS_HPP_
