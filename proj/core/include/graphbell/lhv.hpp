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

#include "graphbell/graph.hpp"
#include "graphbell/rational.hpp"
#include "graphbell/stabilizer.hpp"

namespace graphbell {

/// One deterministic local-hidden-variable model: a bit set in neg_x means
/// the X observable on that qubit is assigned -1 (likewise Y and Z).
struct Assignment {
  std::uint32_t neg_x = 0;
  std::uint32_t neg_y = 0;
  std::uint32_t neg_z = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

// Value (+1 or -1) the model assigns to the product observable `term`.
int evaluate_term(const PauliString& term, const Assignment& a);

// <B> under the model: the sum of all term values.
std::int64_t bell_value(const BellOperator& b, const Assignment& a);

enum class SearchMethod {
  Exhaustive,            // 4^n models, every Z fixed to +1
  ExhaustiveUnreduced,   // all 8^n models
};

enum class SearchEngine {
  // Evaluates every model term by term; statically partitioned over workers.
  Enumerate,
  // Accumulates term signs on the 2n-bit (or 3n-bit) letter-pattern cube and
  // reads every model's value off one Walsh-Hadamard transform.
  Spectral,
};

const char* method_name(SearchMethod m);
const char* engine_name(SearchEngine e);

inline constexpr int kDefaultExactCap = 12;

struct SearchOptions {
  bool restrict_z = true;
  int workers = 0;  // 0 = default_worker_count()
  SearchEngine engine = SearchEngine::Enumerate;
  int exact_cap = kDefaultExactCap;
};

/// Exact classical maximum of |<B>| with its normalisation C / 2^n.
/// argmax is the model reaching it with the smallest (neg_x, neg_y, neg_z)
/// in lexicographic order.
struct BoundReport {
  int n = 0;
  std::int64_t c = 0;
  Rational d;
  Assignment argmax;
  std::uint64_t search_space = 0;
  SearchMethod method = SearchMethod::Exhaustive;
  SearchEngine engine = SearchEngine::Enumerate;
};

/// C(G) and D(G). Disconnected graphs are solved per component and the
/// maxima multiplied; the per-component argmaxes are merged back onto the
/// original labels. Throws CapExceeded when g.size() > options.exact_cap.
BoundReport classical_bound(const Graph& g, const SearchOptions& options = {});

/// Maximises |<B>| for an arbitrary term list with no component splitting.
/// restrict_z is only sound for operators of graph-state form.
BoundReport maximize(const BellOperator& b, const SearchOptions& options = {});

// Image of {1, X, Y, Z}, in that order.
using LetterPermutation = std::array<PauliLetter, 4>;

/// Replaces the letter at `qubit` in every term by its image under `perm`;
/// signs are kept. Throws std::invalid_argument if perm is not a bijection.
BellOperator apply_permutation(const BellOperator& b, int qubit, const LetterPermutation& perm);

// GRAPHBELL_WORKERS if set and positive, otherwise hardware concurrency.
int default_worker_count();

}  // namespace graphbell
