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

#include <gtest/gtest.h>

#include "hqsa/errors.hpp"
#include "hqsa/inversion.hpp"
#include "support/random_models.hpp"

namespace hqsa {
namespace {

WeightedPauliSum two_site_xy() {
  WeightedPauliSum h(2);
  h.add(1.0, "XX");
  h.add(1.0, "YY");
  return h;
}

TEST(BuildAccreditableTest, Examples) {
  const auto g = square_lattice(1, 2);
  EXPECT_EQ(build_accreditable(g, CouplingTable::uniform(g, 1.0)).sum(), two_site_xy());

  const auto g22 = square_lattice(2, 2);
  EXPECT_TRUE(build_accreditable(g22, CouplingTable::uniform(g22, 0.0)).sum().empty());

  const auto g33 = square_lattice(3, 3);
  const auto h = build_accreditable(g33, CouplingTable::uniform(g33, 1.0));
  EXPECT_EQ(h.sum().size(), 24u);
  EXPECT_EQ(h.family(), HamiltonianFamily::xy);
}

TEST(BuildAccreditableTest, Rejections) {
  const InteractionGraph tri(3, {make_edge(1, 2), make_edge(2, 3), make_edge(1, 3)});
  EXPECT_THROW(build_accreditable(tri, CouplingTable::uniform(tri, 1.0)), NotTwoColourable);
  const auto g = square_lattice(1, 2);
  EXPECT_THROW(build_accreditable(g, CouplingTable::uniform(g, 1.0, 1.0)), ValidationError);
  CouplingTable missing;
  EXPECT_THROW(build_accreditable(g, missing), ValidationError);
}

TEST(BuildXyModelTest, Examples) {
  const auto g33 = square_lattice(3, 3);
  const auto h = build_xy_model(g33, CouplingTable::uniform(g33, 1.0, 1.0));
  EXPECT_EQ(h.sum().size(), 33u);

  const auto g11 = square_lattice(1, 1);
  const auto single = build_xy_model(g11, CouplingTable::uniform(g11, 0.0, 2.0));
  WeightedPauliSum z(1);
  z.add(2.0, "Z");
  EXPECT_EQ(single.sum(), z);

  const auto g12 = square_lattice(1, 2);
  auto expected = two_site_xy();
  expected.add(1.0, "ZI");
  expected.add(1.0, "IZ");
  EXPECT_EQ(build_xy_model(g12, CouplingTable::uniform(g12, 1.0, 1.0)).sum(), expected);
}

TEST(BuildAccreditableTest, SumsAreTracelessAndRecoverable) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_two_colourable(6, rng);
    if (g.edge_count() == 0) continue;
    const auto h = build_accreditable(g, testing::random_couplings(g, rng));
    EXPECT_NEAR(to_matrix(h.sum()).trace().real(), 0.0, 1e-12);
    EXPECT_TRUE(to_matrix(h.sum()).isApprox(to_matrix(h.sum()).adjoint()));
    EXPECT_EQ(hamiltonian_from_sum(h.sum()).sum(), h.sum());
  }
}

TEST(SynthesizeInversionTest, TwoSite) {
  const auto g = square_lattice(1, 2);
  const auto h = build_accreditable(g, CouplingTable::uniform(g, 1.0));
  const auto c = synthesize_inversion(h);
  EXPECT_EQ(c.string, PauliString::parse("ZI"));
  EXPECT_TRUE(verify_inversion_symbolic(h.sum(), c));
  EXPECT_LE(verify_inversion_numeric(h.sum(), c, 0.7), 1e-10);
  EXPECT_FALSE(verify_inversion_symbolic(h.sum(), {PauliString::parse("XI")}));
}

TEST(SynthesizeInversionTest, LatticeUsesOddVertices) {
  testing::Rng rng(32);
  const auto g = square_lattice(3, 3);
  const auto h = build_accreditable(g, testing::random_couplings(g, rng));
  EXPECT_EQ(synthesize_inversion(h).string, PauliString::parse("ZIZIZIZIZ"));
}

TEST(SynthesizeInversionTest, EdgelessIsIdentity) {
  const InteractionGraph g(3);
  const auto h = build_accreditable(g, CouplingTable{});
  const auto c = synthesize_inversion(h);
  EXPECT_TRUE(verify_inversion_symbolic(h.sum(), c));
  EXPECT_LE(verify_inversion_numeric(h.sum(), c, 1.0), 1e-14);
}

TEST(SynthesizeInversionTest, XyModelComposite) {
  const auto g = square_lattice(3, 3);
  const auto h = build_xy_model(g, CouplingTable::uniform(g, 1.0, 1.0));
  const auto c = synthesize_for(h);
  EXPECT_EQ(c.basis, InversionBasis::composite_iy_x);
  EXPECT_EQ(c.string.letters_string(), "YXYXYXYXY");
  EXPECT_TRUE(verify_inversion_symbolic(h.sum(), c));
  EXPECT_LE(verify_inversion_numeric(h.sum(), c, 1.3), 1e-9);
  EXPECT_THROW(synthesize_inversion(h), ValidationError);
}

TEST(SynthesizeInversionTest, XyModelSmallCases) {
  // A single site inverts under X or Y alike; the checkerboard rule picks Y.
  const auto g11 = square_lattice(1, 1);
  const auto one = build_xy_model(g11, CouplingTable::uniform(g11, 0.0, 1.0));
  EXPECT_EQ(synthesize_for(one).string.letters_string(), "Y");
  EXPECT_TRUE(verify_inversion_symbolic(one.sum(), {PauliString::parse("X")}));
  EXPECT_TRUE(verify_inversion_symbolic(one.sum(), synthesize_for(one)));

  const auto g12 = square_lattice(1, 2);
  const auto two = build_xy_model(g12, CouplingTable::uniform(g12, 1.0, 1.0));
  EXPECT_EQ(synthesize_for(two).string.letters_string(), "YX");
  EXPECT_TRUE(verify_inversion_symbolic(two.sum(), synthesize_for(two)));
}

TEST(SynthesizeInversionTest, RandomGraphsProperty) {
  testing::Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_two_colourable(12, rng);
    const auto h = build_accreditable(g, testing::random_couplings(g, rng));
    ASSERT_TRUE(verify_inversion_symbolic(h.sum(), synthesize_inversion(h))) << format_graph(g);
  }
}

TEST(VerifyInversionTest, ZeroTimeIsExact) {
  const auto g = square_lattice(2, 2);
  const auto h = build_accreditable(g, CouplingTable::uniform(g, 0.8));
  EXPECT_LE(verify_inversion_numeric(h.sum(), synthesize_inversion(h), 0.0), 1e-14);
}

}  // namespace
}  // namespace hqsa
