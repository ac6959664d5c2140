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
#include "hqsa/trap_target.hpp"

#include "hqsa/errors.hpp"

namespace hqsa {

HqsCircuit build_target(const TargetSpec& spec) {
  const std::size_t n = spec.hamiltonian.qubit_count();
  if (spec.a_prime.size() != n || spec.d_prime.size() != n) {
    throw DimensionError("target gate layers must have one gate per qubit");
  }
  HqsCircuit c;
  c.n = n;
  c.a_layer = spec.a_prime;
  c.b_layer = identity_layer(n);
  c.c_layer = identity_layer(n);
  c.d_layer = spec.d_prime;
  c.hamiltonian = spec.hamiltonian;
  c.t = spec.t;
  c.validate();
  return c;
}

std::uint64_t TrapRandomness::index() const {
  const std::size_t n = p.size();
  if (n > 15) throw CapacityError("trap randomness index", n, 15);
  std::uint64_t v = h ? 1 : 0;
  std::size_t shift = 1;
  for (auto letter : p) {
    v |= static_cast<std::uint64_t>(letter) << shift;
    shift += 2;
  }
  for (bool b : z_prep) v |= static_cast<std::uint64_t>(b) << shift++;
  for (bool b : z_meas) v |= static_cast<std::uint64_t>(b) << shift++;
  return v;
}

TrapRandomness TrapRandomness::from_index(std::uint64_t index, std::size_t n) {
  if (n > 15) throw CapacityError("trap randomness index", n, 15);
  TrapRandomness r;
  r.h = (index & 1U) != 0;
  std::size_t shift = 1;
  for (std::size_t q = 0; q < n; ++q, shift += 2) {
    r.p.push_back(static_cast<PauliLetter>((index >> shift) & 3U));
  }
  for (std::size_t q = 0; q < n; ++q) r.z_prep.push_back(((index >> shift++) & 1U) != 0);
  for (std::size_t q = 0; q < n; ++q) r.z_meas.push_back(((index >> shift++) & 1U) != 0);
  return r;
}

std::string TrapRandomness::digest() const {
  std::string s = h ? "h=1 P=" : "h=0 P=";
  for (auto letter : p) s.push_back(to_char(letter));
  s += " zp=";
  for (bool b : z_prep) s.push_back(b ? '1' : '0');
  s += " zm=";
  for (bool b : z_meas) s.push_back(b ? '1' : '0');
  return s;
}

TrapRandomness draw_trap_randomness(std::size_t n, CounterRng& rng) {
  TrapRandomness r;
  r.p.reserve(n);
  for (std::size_t q = 0; q < n; ++q) r.p.push_back(static_cast<PauliLetter>(rng.uniform_int(4)));
  r.h = rng.bit();
  for (std::size_t q = 0; q < n; ++q) r.z_prep.push_back(rng.bit());
  for (std::size_t q = 0; q < n; ++q) r.z_meas.push_back(rng.bit());
  return r;
}

std::uint64_t trap_randomness_count(std::size_t n) {
  if (n > 15) throw CapacityError("trap randomness space", n, 15);
  return std::uint64_t{2} << (4 * n);
}

HqsCircuit build_trap(const AccreditableHamiltonian& h, double t, const TrapRandomness& r) {
  return build_trap(h, synthesize_for(h), t, r);
}

HqsCircuit build_trap(const AccreditableHamiltonian& h, const InversionCircuit& inversion, double t,
                      const TrapRandomness& r, std::shared_ptr<const Matrix> half_step) {
  const std::size_t n = h.qubit_count();
  if (r.qubit_count() != n || r.z_prep.size() != n || r.z_meas.size() != n) {
    throw DimensionError("trap randomness does not match the register");
  }
  if (inversion.string.size() != n) throw DimensionError("inversion circuit size mismatch");

  const Eigen::Matrix2cd hadamard =
      r.h ? named_unitary("H") : Eigen::Matrix2cd(Eigen::Matrix2cd::Identity());
  const Eigen::Matrix2cd z = letter_matrix(PauliLetter::Z);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

  HqsCircuit c;
  c.n = n;
  c.hamiltonian = h.sum();
  c.t = t;
  c.half_step = std::move(half_step);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t q = k + 1;
    const Eigen::Matrix2cd pk = letter_matrix(r.p[k]);
    const Eigen::Matrix2cd zp = r.z_prep[k] ? z : id;
    const Eigen::Matrix2cd zm = r.z_meas[k] ? z : id;
    c.a_layer.push_back(Gate::single(pk * hadamard * zp, q, "A"));
    const auto inv = std::string(1, to_char(inversion.string[k]));
    c.b_layer.push_back(Gate::named(inv, q));
    c.c_layer.push_back(Gate::named(inv, q));
    c.d_layer.push_back(Gate::single(zm * hadamard * pk, q, "D"));
  }
  c.validate();
  return c;
}

bool trap_is_correct(std::uint64_t outcome) noexcept { return outcome == 0; }

bool trap_is_correct(const std::string& bits) {
  if (bits.empty()) throw DimensionError("empty outcome");
  return bits.find('1') == std::string::npos;
}

}  // namespace hqsa
