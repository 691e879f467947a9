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

#include "graphbell/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graphbell/errors.hpp"

namespace graphbell {

const char* step_name(StepKind kind) {
  switch (kind) {
    case StepKind::Exact: return "exact";
    case StepKind::BridgeProduct: return "bridge_product";
    case StepKind::SubgraphRelaxation: return "subgraph_relaxation";
    case StepKind::ComponentProduct: return "component_product";
  }
  return "?";
}

namespace {

std::string describe(VertexMask m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (; m; m &= m - 1) {
    if (!first) out << ',';
    out << std::countr_zero(m);
    first = false;
  }
  out << '}';
  return out.str();
}

Rational relax(int n, int m, const Rational& d_sub) {
  return Rational(1) - (Rational(1) - d_sub) / Rational(pow2(static_cast<unsigned>(n - m)));
}

struct BudgetExceeded {};

class Composer {
 public:
  Composer(const Graph& g, const ComposeOptions& options, bool exhaustive)
      : g_(g), options_(options), exhaustive_(exhaustive) {}

  DerivationStep bound(VertexMask piece) {
    if (exhaustive_) {
      if (auto it = memo_.find(piece); it != memo_.end()) return it->second;
      if (options_.mode == ComposeMode::Auto && memo_.size() >= options_.piece_budget) throw BudgetExceeded{};
    }
    DerivationStep step = compute(piece);
    if (exhaustive_) memo_.emplace(piece, step);
    return step;
  }

  std::vector<std::string> take_notes() { return std::move(notes_); }

 private:
  DerivationStep compute(VertexMask piece) {
    const int size = std::popcount(piece);
    if (size <= options_.exact_cap) return exact(piece);

    std::vector<std::pair<Edge, VertexMask>> splits = bridge_splits(piece);
    if (splits.empty()) {
      notes_.push_back("piece " + describe(piece) +
                       " has no bridge; non-bridge cuts are not composed, using subgraph relaxation");
      return relaxation(piece);
    }

    if (!exhaustive_) {
      // Most balanced first; ties go to the smallest edge.
      auto balance = [&](const std::pair<Edge, VertexMask>& s) {
        const int a = std::popcount(s.second);
        return std::min(a, size - a);
      };
      const auto best = std::max_element(splits.begin(), splits.end(), [&](const auto& l, const auto& r) {
        const int bl = balance(l), br = balance(r);
        if (bl != br) return bl < br;
        return r.first < l.first;
      });
      return product(piece, best->first, best->second);
    }

    std::optional<DerivationStep> best;
    for (const auto& [edge, left] : splits) {
      DerivationStep cand = product(piece, edge, left);
      if (!best || cand.value < best->value) best = std::move(cand);
    }
    return *best;
  }

  // Bridges of the induced piece, each with the side containing edge.u.
  std::vector<std::pair<Edge, VertexMask>> bridge_splits(VertexMask piece) const {
    const InducedSubgraph sub = induced_subgraph(g_, piece);
    std::vector<std::pair<Edge, VertexMask>> out;
    for (const Edge& local : bridges(sub.graph)) {
      Graph cut = sub.graph;
      cut.remove_edge(local.u, local.v);
      const VertexMask side = component_of(cut, local.u, cut.vertex_mask());
      VertexMask left = 0;
      for (VertexMask m = side; m; m &= m - 1) {
        left |= VertexMask{1} << sub.vertices[static_cast<std::size_t>(std::countr_zero(m))];
      }
      const Edge e{sub.vertices[static_cast<std::size_t>(local.u)],
                   sub.vertices[static_cast<std::size_t>(local.v)]};
      out.emplace_back(e, left);
    }
    return out;
  }

  DerivationStep product(VertexMask piece, Edge edge, VertexMask left) {
    DerivationStep step;
    step.kind = StepKind::BridgeProduct;
    step.vertices = piece;
    step.bridge = edge;
    step.children.push_back(bound(left));
    step.children.push_back(bound(piece & ~left));
    step.value = step.children[0].value * step.children[1].value;
    return step;
  }

  DerivationStep exact(VertexMask piece) {
    const InducedSubgraph sub = induced_subgraph(g_, piece);
    // Keyed by the relabelled piece, so repeated shapes are solved once.
    const std::string key = to_graph6(sub.graph);
    auto it = exact_cache_.find(key);
    if (it == exact_cache_.end()) {
      SearchOptions search;
      search.exact_cap = sub.graph.size();
      search.engine = 2 * sub.graph.size() <= 24 ? SearchEngine::Spectral : SearchEngine::Enumerate;
      it = exact_cache_.emplace(key, classical_bound(sub.graph, search).d).first;
    }
    DerivationStep step;
    step.kind = StepKind::Exact;
    step.vertices = piece;
    step.value = it->second;
    return step;
  }

  // Connected induced subsets of cap size grown breadth-first from every
  // vertex of the piece; keeps the one giving the smallest relaxed bound.
  DerivationStep relaxation(VertexMask piece) {
    const int n = std::popcount(piece);
    const int m = std::max(1, std::min(options_.exact_cap, n));
    std::vector<VertexMask> candidates;
    for (VertexMask s = piece; s; s &= s - 1) {
      const VertexMask subset = bfs_prefix(piece, std::countr_zero(s), m);
      if (std::find(candidates.begin(), candidates.end(), subset) == candidates.end()) {
        candidates.push_back(subset);
      }
    }
    std::sort(candidates.begin(), candidates.end());

    std::optional<DerivationStep> best;
    for (VertexMask subset : candidates) {
      DerivationStep step;
      step.kind = StepKind::SubgraphRelaxation;
      step.vertices = piece;
      step.subset = subset;
      step.children.push_back(exact(subset));
      step.value = relax(n, m, step.children[0].value);
      if (!best || step.value < best->value) best = std::move(step);
    }
    return *best;
  }

  VertexMask bfs_prefix(VertexMask piece, int start, int count) const {
    std::vector<int> order{start};
    VertexMask seen = VertexMask{1} << start;
    for (std::size_t head = 0; head < order.size() && static_cast<int>(order.size()) < count; ++head) {
      VertexMask next = g_.neighbors(order[head]) & piece & ~seen;
      for (; next && static_cast<int>(order.size()) < count; next &= next - 1) {
        const int v = std::countr_zero(next);
        seen |= VertexMask{1} << v;
        order.push_back(v);
      }
    }
    return seen;
  }

  const Graph& g_;
  ComposeOptions options_;
  bool exhaustive_;
  std::map<VertexMask, DerivationStep> memo_;
  std::map<std::string, Rational> exact_cache_;
  std::vector<std::string> notes_;
};

CompositeBound compose_with(const Graph& g, const ComposeOptions& options, bool exhaustive) {
  Composer composer(g, options, exhaustive);
  CompositeBound out;
  const std::vector<VertexMask> components = connected_components(g);
  if (components.size() == 1) {
    out.derivation = composer.bound(components[0]);
  } else {
    out.derivation.kind = StepKind::ComponentProduct;
    out.derivation.vertices = g.vertex_mask();
    out.derivation.value = 1;
    for (VertexMask c : components) {
      out.derivation.children.push_back(composer.bound(c));
      out.derivation.value *= out.derivation.children.back().value;
    }
  }
  out.value = out.derivation.value;
  out.notes = composer.take_notes();
  return out;
}

bool all_exact(const DerivationStep& step) {
  if (step.kind == StepKind::Exact) return true;
  if (step.kind != StepKind::ComponentProduct) return false;
  return std::all_of(step.children.begin(), step.children.end(), all_exact);
}

}  // namespace

CompositeBound bridge_compose_bound(const Graph& g, const ComposeOptions& options) {
  if (g.size() == 0) throw std::invalid_argument("cannot bound an empty graph");
  if (options.exact_cap < 1) throw std::invalid_argument("exact cap must be at least 1");
  if (options.mode == ComposeMode::Exhaustive && g.size() > kExhaustiveComposeCap) {
    throw CapExceeded("exhaustive composition is limited to " + std::to_string(kExhaustiveComposeCap) +
                      " vertices");
  }
  CompositeBound out;
  switch (options.mode) {
    case ComposeMode::Greedy:
      out = compose_with(g, options, false);
      out.notes.push_back("mode: greedy");
      break;
    case ComposeMode::Exhaustive:
      out = compose_with(g, options, true);
      out.notes.push_back("mode: exhaustive");
      break;
    case ComposeMode::Auto:
      try {
        out = compose_with(g, options, true);
        out.notes.push_back("mode: exhaustive");
      } catch (const BudgetExceeded&) {
        out = compose_with(g, options, false);
        out.notes.push_back("mode: greedy (piece budget exceeded)");
      }
      break;
  }
  out.is_exact = all_exact(out.derivation);
  return out;
}

Rational replay(const DerivationStep& step) {
  switch (step.kind) {
    case StepKind::Exact:
      return step.value;
    case StepKind::BridgeProduct:
    case StepKind::ComponentProduct: {
      Rational acc = 1;
      for (const DerivationStep& c : step.children) acc *= replay(c);
      return acc;
    }
    case StepKind::SubgraphRelaxation:
      if (step.children.size() != 1) throw std::invalid_argument("relaxation step needs one child");
      return relax(std::popcount(step.vertices), std::popcount(step.subset), replay(step.children[0]));
  }
  throw std::invalid_argument("unknown derivation step");
}

Rational bridge_product(const Graph& g, Edge cut, const Rational& d_left, const Rational& d_right) {
  const std::vector<Edge> bs = bridges(g);
  const Edge normalized{std::min(cut.u, cut.v), std::max(cut.u, cut.v)};
  if (std::find(bs.begin(), bs.end(), normalized) == bs.end()) {
    throw std::invalid_argument("edge {" + std::to_string(cut.u) + "," + std::to_string(cut.v) +
                                "} is not a bridge; the product bound only holds across a single edge");
  }
  return d_left * d_right;
}

Rational subgraph_bound(const Graph& g, VertexMask subset, const Rational& d_sub) {
  subset &= g.vertex_mask();
  const int m = std::popcount(subset);
  if (m == 0) throw std::invalid_argument("subgraph bound needs a nonempty subset");
  if (d_sub > 1 || d_sub <= 0) throw std::invalid_argument("d_sub must lie in (0, 1]");
  return relax(g.size(), m, d_sub);
}

Rational linear_cluster_value(int k) {
  // k = 1, 2 admit no violation; 3..10 are the exhaustive-search values.
  static const std::array<std::pair<int, unsigned>, 10> kValues = {{
      {2, 1}, {4, 2}, {6, 3}, {12, 4}, {20, 5}, {36, 6}, {64, 7}, {112, 8}, {200, 9}, {352, 10},
  }};
  if (k < 1 || k > 10) throw std::out_of_range("linear cluster values are tabulated for 1..10");
  const auto& [c, n] = kValues[static_cast<std::size_t>(k - 1)];
  return dyadic(c, n);
}

Rational chain_bound(int length) {
  if (length < 2) throw std::invalid_argument("chain length must be at least 2");
  std::vector<Rational> best(static_cast<std::size_t>(length) + 1);
  best[0] = 1;
  for (int len = 1; len <= length; ++len) {
    std::optional<Rational> b;
    if (len <= 10) b = linear_cluster_value(len);
    for (int k = 1; k <= std::min(10, len - 1); ++k) {
      Rational cand = best[static_cast<std::size_t>(len - k)] * linear_cluster_value(k);
      if (!b || cand < *b) b = std::move(cand);
    }
    best[static_cast<std::size_t>(len)] = *b;
  }
  return best[static_cast<std::size_t>(length)];
}

namespace {

// Breadth-first distances and parents from `src`.
std::pair<std::vector<int>, std::vector<int>> bfs(const Graph& g, int src) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1), parent(static_cast<std::size_t>(g.size()), -1);
  std::vector<int> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (VertexMask nb = g.neighbors(u); nb; nb &= nb - 1) {
      const int v = std::countr_zero(nb);
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  return {dist, parent};
}

int farthest(const std::vector<int>& dist) {
  return static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

TreeCertificate tree_certificate(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("tree certificate requires a tree");
  const int end_a = farthest(bfs(g, 0).first);
  const auto [dist, parent] = bfs(g, end_a);
  TreeCertificate cert;
  for (int v = farthest(dist); v >= 0; v = parent[static_cast<std::size_t>(v)]) cert.path.push_back(v);
  cert.longest_path_length = static_cast<int>(cert.path.size());
  cert.bound = cert.longest_path_length >= 2 ? chain_bound(cert.longest_path_length) : Rational(1);
  return cert;
}

Rational geometric_measure_lower_bound(const Rational& d) {
  if (d <= 0 || d > 1) throw std::invalid_argument("D must lie in (0, 1]");
  return Rational(1) - d;
}

bool ppt_scope_flag(const Rational& d) {
  if (d <= 0 || d > 1) throw std::invalid_argument("D must lie in (0, 1]");
  return d >= Rational(1, 2);
}

}  // namespace graphbell
