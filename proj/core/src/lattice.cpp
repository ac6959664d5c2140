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

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "hqsa/errors.hpp"

namespace hqsa {

Edge make_edge(int a, int b) {
  if (a == b) throw ValidationError("self-loop on vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

InteractionGraph::InteractionGraph(int vertex_count, const std::vector<Edge>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw ValidationError("graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    const auto norm = make_edge(e.u, e.v);
    if (norm.u < 1 || norm.v > vertex_count) {
      throw ValidationError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    }
    edges_.push_back(norm);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ValidationError("duplicate edge in interaction graph");
  }
}

bool InteractionGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<int> InteractionGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

InteractionGraph square_lattice(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ValidationError("lattice dimensions must be positive");
  std::vector<Edge> edges;
  const auto index = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({index(r, c), index(r, c + 1)});
      if (r + 1 < rows) edges.push_back({index(r, c), index(r + 1, c)});
    }
  }
  return InteractionGraph(rows * cols, edges);
}

std::vector<int> TwoColoring::color_class(int color) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] == color) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

TwoColoring two_color(const InteractionGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }

  std::vector<int> color(n + 1, 0);
  std::vector<int> parent(n + 1, 0);
  std::vector<int> depth(n + 1, 0);
  for (int root = 1; root <= g.vertex_count(); ++root) {
    if (color[static_cast<std::size_t>(root)] != 0) continue;
    color[static_cast<std::size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      const auto uu = static_cast<std::size_t>(u);
      for (int w : adj[uu]) {
        const auto ww = static_cast<std::size_t>(w);
        if (color[ww] == 0) {
          color[ww] = 3 - color[uu];
          parent[ww] = u;
          depth[ww] = depth[uu] + 1;
          queue.push_back(w);
        } else if (color[ww] == color[uu]) {
          // Both tree paths to the common ancestor plus the edge (u, w) form
          // an odd cycle.
          std::vector<int> left{u};
          std::vector<int> right{w};
          int a = u;
          int b = w;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            left.push_back(a);
          }
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            right.push_back(b);
          }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();  // ancestor already in left
          std::vector<int> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          throw NotTwoColourable(std::move(cycle));
        }
      }
    }
  }
  color.erase(color.begin());
  return TwoColoring(std::move(color));
}

bool ChromaticSubset::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

ChromaticSubset chromatic_subset(const TwoColoring& coloring) {
  return ChromaticSubset{coloring.color_class(coloring.color(1))};
}

ChromaticSubset checkerboard_set(int n_l) {
  if (n_l < 1) throw ValidationError("lattice side must be positive");
  ChromaticSubset out;
  if (n_l % 2 == 1) {
    for (int j = 1; j <= n_l * n_l; j += 2) out.vertices.push_back(j);
    return out;
  }
  const int big = n_l + 1;
  for (int j : checkerboard_set(big).vertices) {
    const int r = (j - 1) / big;
    const int c = (j - 1) % big;
    if (r < n_l && c < n_l) out.vertices.push_back(r * n_l + c + 1);
  }
  return out;
}

bool validate_chromatic(const InteractionGraph& g, const ChromaticSubset& s) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&s](const Edge& e) {
    return s.contains(e.u) != s.contains(e.v);
  });
}

namespace {

std::string_view strip_comment(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  return line;
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

InteractionGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int vertex_count = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream fields{std::string(line)};
    const auto column = line.find_first_not_of(" \t") + 1;
    if (vertex_count < 0) {
      std::string extra;
      if (!(fields >> vertex_count) || (fields >> extra) || vertex_count < 1) {
        throw ParseError("expected a positive vertex count", line_no, column);
      }
      continue;
    }
    int a = 0;
    int b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("expected an edge 'u v'", line_no, column);
    }
    if (a < 1 || b < 1 || a > vertex_count || b > vertex_count || a == b) {
      throw ParseError("edge endpoint out of range", line_no, column);
    }
    edges.push_back(make_edge(a, b));
  }
  if (vertex_count < 0) throw ParseError("graph fixture is empty", 0, 0);
  try {
    return InteractionGraph(vertex_count, edges);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

std::string format_graph(const InteractionGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace hqsa
