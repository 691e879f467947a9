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

#include "graphbell/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "graphbell/errors.hpp"

namespace graphbell {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in [0, 31], got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} out of range for " + std::to_string(n_) + " vertices");
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
  adj_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[static_cast<std::size_t>(u)] &= ~(VertexMask{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(VertexMask{1} << u);
}

void Graph::toggle_edge(int u, int v) {
  check_pair(u, v);
  adj_[static_cast<std::size_t>(u)] ^= VertexMask{1} << v;
  adj_[static_cast<std::size_t>(v)] ^= VertexMask{1} << u;
}

Graph build_family(GraphFamily family, int n) {
  if (n < 2 || n > kMaxVertices) {
    throw std::invalid_argument("family graphs need 2 <= n <= 31, got " + std::to_string(n));
  }
  Graph g(n);
  switch (family) {
    case GraphFamily::LinearCluster:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case GraphFamily::RingCluster:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      if (n > 2) g.add_edge(n - 1, 0);
      break;
    case GraphFamily::Star:
      for (int j = 1; j < n; ++j) g.add_edge(0, j);
      break;
    case GraphFamily::FullyConnected:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      }
      break;
  }
  return g;
}

GraphFamily parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "lc") return GraphFamily::LinearCluster;
  if (lower == "rc") return GraphFamily::RingCluster;
  if (lower == "st") return GraphFamily::Star;
  if (lower == "fc") return GraphFamily::FullyConnected;
  throw ParseError("unknown graph family '" + std::string(name) + "' (expected lc, rc, st, fc)");
}

std::string family_tag(GraphFamily family) {
  switch (family) {
    case GraphFamily::LinearCluster: return "LC";
    case GraphFamily::RingCluster: return "RC";
    case GraphFamily::Star: return "ST";
    case GraphFamily::FullyConnected: return "FC";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on whitespace; every token must be a non-negative integer.
std::vector<long> parse_ints(std::string_view line, int line_no) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc{} || ptr != line.data() + end || value < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                       std::string(line.substr(pos, end - pos)) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::vector<long> ints = parse_ints(line, line_no);
    if (!g) {
      if (ints.size() != 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected the vertex count");
      }
      if (ints[0] < 1 || ints[0] > kMaxVertices) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex count must be in [1, 31]");
      }
      g.emplace(static_cast<int>(ints[0]));
    } else {
      if (ints.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an edge 'i j'");
      }
      const long n = g->size();
      if (ints[0] >= n || ints[1] >= n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
      }
      if (ints[0] == ints[1]) {
        throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                         std::to_string(ints[0]));
      }
      g->add_edge(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError("edge list is empty (missing vertex count)");
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
  }
  if (text[0] == 126) throw ParseError("graph6: graphs above 62 vertices are not supported");
  const int n = text[0] - 63;
  if (n < 1 || n > kMaxVertices) throw ParseError("graph6: vertex count must be in [1, 31]");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() != 1 + groups) throw ParseError("graph6: length does not match vertex count");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.size();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) {
    throw std::out_of_range("local complementation vertex " + std::to_string(v) + " out of range");
  }
  Graph out = g;
  const VertexMask nb = g.neighbors(v);
  for (int a = 0; a < g.size(); ++a) {
    if (!((nb >> a) & 1u)) continue;
    for (int b = a + 1; b < g.size(); ++b) {
      if ((nb >> b) & 1u) out.toggle_edge(a, b);
    }
  }
  return out;
}

VertexMask component_of(const Graph& g, int v, VertexMask allowed) {
  VertexMask seen = VertexMask{1} << v;
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask remaining = g.vertex_mask();
  while (remaining) {
    const VertexMask c = component_of(g, std::countr_zero(remaining), g.vertex_mask());
    out.push_back(c);
    remaining &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.size() > 0 && connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.size() - 1; }

std::vector<Edge> bridges(const Graph& g) {
  std::vector<Edge> out;
  Graph work = g;
  for (const Edge& e : g.edges()) {
    work.remove_edge(e.u, e.v);
    if (!((component_of(work, e.u, work.vertex_mask()) >> e.v) & 1u)) out.push_back(e);
    work.add_edge(e.u, e.v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask vertices) {
  vertices &= g.vertex_mask();
  if (vertices == 0) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
  InducedSubgraph out;
  for (VertexMask m = vertices; m; m &= m - 1) out.vertices.push_back(std::countr_zero(m));
  out.graph = Graph(static_cast<int>(out.vertices.size()));
  for (std::size_t a = 0; a < out.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
      if (g.has_edge(out.vertices[a], out.vertices[b])) {
        out.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.size();
  Graph g(n1 + g2.size());
  for (const Edge& e : g1.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) g.add_edge(n1 + e.u, n1 + e.v);
  return g;
}

Graph join_by_bridge(const Graph& g1, int i0, const Graph& g2, int j0) {
  if (i0 < 0 || i0 >= g1.size() || j0 < 0 || j0 >= g2.size()) {
    throw std::out_of_range("bridge endpoint out of range");
  }
  Graph g = disjoint_union(g1, g2);
  g.add_edge(i0, g1.size() + j0);
  return g;
}

}  // namespace graphbell
