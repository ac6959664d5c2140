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

#ifndef HQSA_LATTICE_HPP_
#define HQSA_LATTICE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hqsa {

// Undirected edge with u < v. Vertices are 1-based.
struct Edge {
  int u;
  int v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);

// Simple undirected graph on vertices 1..vertex_count. Edges are stored
// sorted and deduplicated; self-loops and out-of-range endpoints throw.
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(int vertex_count, const std::vector<Edge>& edges = {});

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(int a, int b) const;
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const InteractionGraph&, const InteractionGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// rows x cols nearest-neighbour grid, vertices numbered row-major from the
// top-left starting at 1.
InteractionGraph square_lattice(int rows, int cols);

// Color per vertex, each 1 or 2. color(v) takes the 1-based vertex.
class TwoColoring {
 public:
  explicit TwoColoring(std::vector<int> colors) : colors_(std::move(colors)) {}

  int color(int v) const { return colors_.at(static_cast<std::size_t>(v - 1)); }
  int vertex_count() const noexcept { return static_cast<int>(colors_.size()); }
  // Sorted vertices with the given color.
  std::vector<int> color_class(int color) const;

 private:
  std::vector<int> colors_;
};

// Breadth-first 2-coloring. The lowest-numbered vertex of every connected
// component gets color 1, so vertex 1 is always color 1. Throws
// NotTwoColourable with an odd-cycle witness.
TwoColoring two_color(const InteractionGraph& g);

// Sorted set of 1-based vertex indices.
struct ChromaticSubset {
  std::vector<int> vertices;

  bool contains(int v) const;
  friend bool operator==(const ChromaticSubset&, const ChromaticSubset&) = default;
};

// The color class containing vertex 1.
ChromaticSubset chromatic_subset(const TwoColoring& coloring);

// Checkerboard set of the n_l x n_l square lattice. Odd n_l: the odd
// indices. Even n_l: the odd indices of the (n_l+1)-lattice with its
// rightmost column and bottom row removed, re-indexed row-major.
ChromaticSubset checkerboard_set(int n_l);

// True iff every edge has exactly one endpoint in s.
bool validate_chromatic(const InteractionGraph& g, const ChromaticSubset& s);

// Fixture format: first line "<vertex_count>", then one "u v" edge per line.
// '#' comments and blank lines are ignored.
InteractionGraph parse_graph(std::string_view text);
std::string format_graph(const InteractionGraph& g);

}  // namespace hqsa

#endif  // HQSA_LATTICE_HPP_
