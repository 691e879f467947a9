// Copyright 2026 The graphbell Authors.
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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphbell {

// Bit j set means vertex j is in the set. Vertices are 0-indexed.
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 31;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 31 vertices, stored as one neighbor
/// mask per vertex. The adjacency is kept symmetric and loop-free by every
/// mutator, so any Graph value is valid.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int size() const { return n_; }
  VertexMask vertex_mask() const { return n_ == 0 ? 0u : (~VertexMask{0} >> (32 - n_)); }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  int edge_count() const;
  // Sorted, each edge once with u < v.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

enum class GraphFamily { LinearCluster, RingCluster, Star, FullyConnected };

// LC_n path 0-1-..-(n-1); RC_n adds {n-1,0}; ST_n has center 0; FC_n complete.
Graph build_family(GraphFamily family, int n);

// Accepts "lc", "rc", "st", "fc" (case-insensitive).
GraphFamily parse_family(std::string_view name);
std::string family_tag(GraphFamily family);

/// Edge-list text: first non-comment line is the vertex count, then one
/// "i j" pair per line. Blank lines and lines starting with '#' are ignored.
/// Duplicate edges are idempotent; self-loops and out-of-range indices throw
/// ParseError.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6 (n <= 31 only). Leading ">>graph6<<" header is tolerated.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Toggle every edge between two neighbors of v. Edges incident to v and
/// edges leaving N(v) are untouched. Involution at fixed v.
Graph local_complement(const Graph& g, int v);

// Edges whose removal increases the number of connected components.
std::vector<Edge> bridges(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // vertices[k] is the original label of new vertex k, ascending.
  std::vector<int> vertices;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexMask vertices);

// Components ordered by their smallest vertex.
std::vector<VertexMask> connected_components(const Graph& g);
VertexMask component_of(const Graph& g, int v, VertexMask allowed);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// G1 on labels 0..n1-1, G2 shifted to n1..n1+n2-1.
Graph disjoint_union(const Graph& g1, const Graph& g2);
// disjoint_union plus the single edge {i0, n1 + j0}.
Graph join_by_bridge(const Graph& g1, int i0, const Graph& g2, int j0);

}  // namespace graphbell
