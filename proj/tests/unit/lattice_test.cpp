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
#include "hqsa/lattice.hpp"

#include <gtest/gtest.h>

#include "hqsa/errors.hpp"
#include "support/random_models.hpp"

namespace hqsa {
namespace {

void expect_proper(const InteractionGraph& g, const TwoColoring& c) {
  for (const auto& e : g.edges()) EXPECT_NE(c.color(e.u), c.color(e.v));
}

// An odd cycle witness must close up through real edges.
void expect_odd_cycle(const InteractionGraph& g, const std::vector<int>& cycle) {
  ASSERT_GE(cycle.size(), 3u);
  EXPECT_EQ(cycle.size() % 2, 1u);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    EXPECT_TRUE(g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
}

TEST(SquareLatticeTest, Shapes) {
  const auto g = square_lattice(3, 3);
  EXPECT_EQ(g.vertex_count(), 9);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_EQ(g.neighbors(5), (std::vector<int>{2, 4, 6, 8}));
  EXPECT_EQ(square_lattice(1, 1).edge_count(), 0u);
  EXPECT_EQ(square_lattice(1, 1).vertex_count(), 1);
  EXPECT_EQ(square_lattice(2, 2).edge_count(), 4u);
  EXPECT_THROW(square_lattice(0, 2), ValidationError);
}

TEST(GraphTest, RejectsBadEdges) {
  EXPECT_THROW(make_edge(2, 2), ValidationError);
  EXPECT_THROW(InteractionGraph(2, {make_edge(1, 3)}), ValidationError);
  EXPECT_THROW(InteractionGraph(3, {make_edge(1, 2), make_edge(2, 1)}), ValidationError);
}

TEST(TwoColorTest, LatticeClasses) {
  const auto g = square_lattice(3, 3);
  const auto c = two_color(g);
  expect_proper(g, c);
  EXPECT_EQ(c.color_class(c.color(1)), (std::vector<int>{1, 3, 5, 7, 9}));
  EXPECT_EQ(chromatic_subset(c).vertices, (std::vector<int>{1, 3, 5, 7, 9}));
}

TEST(TwoColorTest, TriangleReportsWitness) {
  const InteractionGraph tri(3, {make_edge(1, 2), make_edge(2, 3), make_edge(1, 3)});
  try {
    two_color(tri);
    FAIL() << "expected NotTwoColourable";
  } catch (const NotTwoColourable& e) {
    expect_odd_cycle(tri, e.odd_cycle());
    EXPECT_NE(std::string(e.what()).find("odd cycle"), std::string::npos);
  }
}

TEST(TwoColorTest, PathAlternates) {
  const auto c = two_color(testing::path_graph(4));
  EXPECT_NE(c.color(1), c.color(2));
  EXPECT_EQ(c.color(1), c.color(3));
  EXPECT_NE(c.color(3), c.color(4));
}

TEST(TwoColorTest, RandomGraphsColourOrWitness) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::uniform_int(rng, 2, 10);
    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (testing::uniform(rng, 0, 1) < 0.3) edges.push_back(make_edge(a, b));
    const InteractionGraph g(n, edges);
    try {
      expect_proper(g, two_color(g));
    } catch (const NotTwoColourable& e) {
      expect_odd_cycle(g, e.odd_cycle());
    }
  }
}

TEST(CheckerboardTest, Sets) {
  EXPECT_EQ(checkerboard_set(3).vertices, (std::vector<int>{1, 3, 5, 7, 9}));
  EXPECT_EQ(checkerboard_set(1).vertices, (std::vector<int>{1}));
  EXPECT_EQ(checkerboard_set(2).vertices, (std::vector<int>{1, 4}));
  EXPECT_EQ(checkerboard_set(2), chromatic_subset(two_color(square_lattice(2, 2))));
}

TEST(CheckerboardTest, IsChromaticUpToTen) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_TRUE(validate_chromatic(square_lattice(n, n), checkerboard_set(n))) << n;
  }
}

TEST(ValidateChromaticTest, Examples) {
  EXPECT_TRUE(validate_chromatic(square_lattice(3, 3), {{1, 3, 5, 7, 9}}));
  EXPECT_FALSE(validate_chromatic(square_lattice(3, 3), {{1, 2}}));
  EXPECT_TRUE(validate_chromatic(InteractionGraph(4), {{2, 3}}));
}

TEST(GraphTextTest, RoundTrip) {
  const auto g = square_lattice(2, 3);
  EXPECT_EQ(parse_graph(format_graph(g)), g);
  EXPECT_THROW(parse_graph("3\n1 x\n"), ParseError);
}

}  // namespace
}  // namespace hqsa
