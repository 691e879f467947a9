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

#include <optional>
#include <string>
#include <vector>

#include "graphbell/graph.hpp"
#include "graphbell/lhv.hpp"
#include "graphbell/rational.hpp"

namespace graphbell {

enum class StepKind {
  Exact,               // D of the piece computed by exhaustive search
  BridgeProduct,       // D(piece) <= D(left) * D(right) across one bridge
  SubgraphRelaxation,  // D(piece) <= 1 - (1 - D(sub)) / 2^(|piece| - |sub|)
  ComponentProduct,    // disconnected input: D multiplies over components
};

const char* step_name(StepKind kind);

/// One node of a bound derivation. `vertices` are labels of the input graph.
struct DerivationStep {
  StepKind kind = StepKind::Exact;
  VertexMask vertices = 0;
  Rational value;
  std::optional<Edge> bridge;  // BridgeProduct only
  VertexMask subset = 0;       // SubgraphRelaxation only
  std::vector<DerivationStep> children;
};

struct CompositeBound {
  Rational value;
  DerivationStep derivation;
  bool is_exact = false;
  // Human-readable remarks, e.g. pieces where no bridge was available.
  std::vector<std::string> notes;
};

enum class ComposeMode {
  Greedy,      // split at the most balanced bridge
  Exhaustive,  // minimise over every bridge choice; n <= 20
  // Exhaustive while the number of distinct pieces stays within
  // ComposeOptions::piece_budget, greedy otherwise.
  Auto,
};

inline constexpr int kExhaustiveComposeCap = 20;

struct ComposeOptions {
  int exact_cap = kDefaultExactCap;
  ComposeMode mode = ComposeMode::Greedy;
  std::size_t piece_budget = 4096;
};

/// Upper bound on D(G) built from exact values of small pieces. Pieces are
/// only ever split at bridges; a bridgeless piece above the cap is bounded by
/// subgraph relaxation on its best connected induced subgraph of cap size.
/// `notes` records which mode actually produced the result.
CompositeBound bridge_compose_bound(const Graph& g, const ComposeOptions& options = {});

// Recomputes a derivation's value from its leaves.
Rational replay(const DerivationStep& step);

/// D(G) <= D(G1) * D(G2) for G = G1 --- G2. Throws std::invalid_argument
/// unless `cut` is a bridge of g; multi-edge cuts admit no such bound.
Rational bridge_product(const Graph& g, Edge cut, const Rational& d_left, const Rational& d_right);

/// 1 - (1 - d_sub) / 2^(n - m): the 2^m terms generated inside the induced
/// subset contribute at most d_sub * 2^m under a Z=+1 model, the remaining
/// terms at most 1 each.
Rational subgraph_bound(const Graph& g, VertexMask subset, const Rational& d_sub);

// Exact D(LC_k) for 1 <= k <= 10.
Rational linear_cluster_value(int k);

/// Best product of exact linear-cluster values over all ways of cutting a
/// path of `length` vertices into pieces of at most 10. Exact for length <= 10.
Rational chain_bound(int length);

struct TreeCertificate {
  int longest_path_length = 0;
  std::vector<int> path;
  Rational bound;
};

// Throws std::invalid_argument if g is not a tree.
TreeCertificate tree_certificate(const Graph& g);

// 1 - d.
Rational geometric_measure_lower_bound(const Rational& d);

// d >= 1/2.
bool ppt_scope_flag(const Rational& d);

}  // namespace graphbell
