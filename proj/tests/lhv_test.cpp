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

#include "graphbell/lhv.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "graph_catalog.hpp"
#include "graphbell/errors.hpp"

namespace graphbell {
namespace {

// Independent oracle: walks all 8^n models and evaluates each term letter by
// letter. Returns (max |<B>|, lexicographically smallest maximiser).
std::pair<std::int64_t, Assignment> brute_force(const BellOperator& b, bool z_fixed) {
  const int n = b.n;
  const std::uint32_t count = std::uint32_t{1} << n;
  std::int64_t best = -1;
  Assignment arg;
  for (std::uint32_t nx = 0; nx < count; ++nx) {
    for (std::uint32_t ny = 0; ny < count; ++ny) {
      for (std::uint32_t nz = 0; nz < (z_fixed ? 1u : count); ++nz) {
        std::int64_t sum = 0;
        for (const PauliString& t : b.terms) {
          int v = t.negative ? -1 : 1;
          for (int q = 0; q < n; ++q) {
            std::uint32_t neg = 0;
            switch (t.letter(q)) {
              case PauliLetter::I: continue;
              case PauliLetter::X: neg = nx; break;
              case PauliLetter::Y: neg = ny; break;
              case PauliLetter::Z: neg = nz; break;
            }
            if ((neg >> q) & 1u) v = -v;
          }
          sum += v;
        }
        const std::int64_t mag = std::abs(sum);
        if (mag > best) {  // loops run in lexicographic order
          best = mag;
          arg = Assignment{nx, ny, nz};
        }
      }
    }
  }
  return {best, arg};
}

SearchOptions with(SearchEngine engine, bool restrict = true, int workers = 1) {
  SearchOptions o;
  o.engine = engine;
  o.restrict_z = restrict;
  o.workers = workers;
  return o;
}

TEST(EvaluateTerm, Examples) {
  EXPECT_EQ(evaluate_term(parse_pauli("-XXX"), Assignment{}), -1);
  EXPECT_EQ(evaluate_term(parse_pauli("+YY1"), Assignment{0, 0b001, 0}), -1);
  // X on qubit 0 flipped, both Z flipped: (-1)^3.
  EXPECT_EQ(evaluate_term(parse_pauli("+XZZ"), Assignment{0b001, 0, 0b110}), -1);
  EXPECT_EQ(evaluate_term(parse_pauli("+XZZ"), Assignment{0b001, 0, 0b010}), 1);
  // Identity letters ignore every flip.
  EXPECT_EQ(evaluate_term(parse_pauli("+111"), Assignment{7, 7, 7}), 1);
}

TEST(BellValue, Examples) {
  EXPECT_EQ(bell_value(bell_terms(build_family(GraphFamily::FullyConnected, 3)), Assignment{}), 6);
  EXPECT_EQ(bell_value(bell_terms(build_family(GraphFamily::LinearCluster, 2)), Assignment{}), 4);
}

TEST(ClassicalBound, KnownValues) {
  const BoundReport fc3 = classical_bound(build_family(GraphFamily::FullyConnected, 3));
  EXPECT_EQ(fc3.c, 6);
  EXPECT_EQ(fc3.d, Rational(3, 4));
  EXPECT_EQ(classical_bound(build_family(GraphFamily::LinearCluster, 5)).d, Rational(5, 8));
  EXPECT_EQ(classical_bound(build_family(GraphFamily::RingCluster, 8)).d, Rational(6, 16));
}

TEST(ClassicalBound, SingleEdgeHasNoViolation) {
  const Graph edge = build_family(GraphFamily::LinearCluster, 2);
  const BoundReport r = classical_bound(edge, with(SearchEngine::Enumerate, false));
  EXPECT_EQ(r.c, 4);
  EXPECT_EQ(r.d, Rational(1));
  EXPECT_EQ(r.search_space, 64u);
  EXPECT_EQ(brute_force(bell_terms(edge), false).first, 4);
}

TEST(ClassicalBound, ReportInvariants) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = testing::labelled_graph(n, rng());
    const BellOperator b = bell_terms(g);
    for (SearchEngine e : {SearchEngine::Enumerate, SearchEngine::Spectral}) {
      const BoundReport r = classical_bound(g, with(e));
      EXPECT_GT(r.c, 0);
      EXPECT_LE(r.c, std::int64_t{1} << n);
      EXPECT_LE(r.d, 1);
      EXPECT_EQ(std::abs(bell_value(b, r.argmax)), r.c);
      EXPECT_EQ(r.argmax.neg_z, 0u);
      EXPECT_EQ(r.n, n);
    }
  }
}

TEST(ClassicalBound, EnginesAgreeWithBruteForce) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Graph g = testing::random_connected_graph(n, rng);
    const BellOperator b = bell_terms(g);
    for (bool restrict : {true, false}) {
      const auto [c, arg] = brute_force(b, restrict);
      for (SearchEngine e : {SearchEngine::Enumerate, SearchEngine::Spectral}) {
        const BoundReport r = maximize(b, with(e, restrict));
        EXPECT_EQ(r.c, c);
        EXPECT_EQ(r.argmax, arg) << "engine " << engine_name(e) << " restrict " << restrict;
      }
    }
  }
}

TEST(ClassicalBound, EnginesAgreeOnLargerGraphs) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const Graph g = testing::random_connected_graph(n, rng);
    const BoundReport a = classical_bound(g, with(SearchEngine::Enumerate));
    const BoundReport s = classical_bound(g, with(SearchEngine::Spectral));
    EXPECT_EQ(a.c, s.c);
    EXPECT_EQ(a.argmax, s.argmax);
    EXPECT_EQ(a.search_space, s.search_space);
  }
}

TEST(ClassicalBound, DeterministicAcrossWorkerCounts) {
  const Graph g = build_family(GraphFamily::RingCluster, 8);
  const BoundReport ref = classical_bound(g, with(SearchEngine::Enumerate, true, 1));
  for (int w : {2, 3, 5, 8, 64}) {
    const BoundReport r = classical_bound(g, with(SearchEngine::Enumerate, true, w));
    EXPECT_EQ(r.c, ref.c);
    EXPECT_EQ(r.argmax, ref.argmax);
    EXPECT_EQ(r.search_space, ref.search_space);
  }
}

TEST(ClassicalBound, DisconnectedGraphsFactor) {
  const Graph g = disjoint_union(build_family(GraphFamily::FullyConnected, 3),
                                 build_family(GraphFamily::LinearCluster, 2));
  const BoundReport r = classical_bound(g);
  EXPECT_EQ(r.c, 6 * 4);
  EXPECT_EQ(r.d, Rational(3, 4));
  const auto [c, arg] = brute_force(bell_terms(g), true);
  EXPECT_EQ(r.c, c);
  EXPECT_EQ(r.argmax, arg);
  EXPECT_EQ(r.search_space, 64u + 16u);

  // Isolated vertices: B = 1 + X each, maximum 2 per vertex.
  const BoundReport empty = classical_bound(Graph(4));
  EXPECT_EQ(empty.c, 16);
  EXPECT_EQ(empty.d, Rational(1));
}

TEST(ClassicalBound, CapExceeded) {
  EXPECT_THROW(classical_bound(build_family(GraphFamily::LinearCluster, 13)), CapExceeded);
  SearchOptions small;
  small.exact_cap = 4;
  EXPECT_THROW(classical_bound(build_family(GraphFamily::LinearCluster, 5), small), CapExceeded);
}

TEST(ZRestriction, ReducedSearchMatchesUnreduced) {
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      const Graph g = testing::labelled_graph(n, bits);
      const BoundReport reduced = classical_bound(g, with(SearchEngine::Enumerate, true));
      const BoundReport full = classical_bound(g, with(SearchEngine::Enumerate, false));
      EXPECT_EQ(reduced.c, full.c) << to_graph6(g);
      EXPECT_EQ(full.method, SearchMethod::ExhaustiveUnreduced);
    }
  }
}

TEST(ApplyPermutation, Basics) {
  const BellOperator b = bell_terms(build_family(GraphFamily::FullyConnected, 3));
  const LetterPermutation id{PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  const BellOperator same = apply_permutation(b, 1, id);
  EXPECT_EQ(same.terms, b.terms);

  const LetterPermutation swap_x_id{PauliLetter::X, PauliLetter::I, PauliLetter::Y, PauliLetter::Z};
  EXPECT_EQ(to_string(apply_permutation(b, 0, swap_x_id).terms[7]), "-1XX");

  const LetterPermutation bad{PauliLetter::X, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  EXPECT_THROW(apply_permutation(b, 0, bad), std::invalid_argument);
  EXPECT_THROW(apply_permutation(b, 3, id), std::out_of_range);
}

TEST(LetterPermutation, LetterPermutationsPreserveTheBound) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = testing::random_connected_graph(n, rng);
    const BellOperator b = bell_terms(g);
    const std::int64_t c = classical_bound(g).c;
    LetterPermutation perm{PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    std::shuffle(perm.begin(), perm.end(), rng);
    const int qubit = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const BellOperator permuted = apply_permutation(b, qubit, perm);
    const SearchEngine engine = (trial % 2) ? SearchEngine::Spectral : SearchEngine::Enumerate;
    EXPECT_EQ(maximize(permuted, with(engine, false)).c, c) << to_graph6(g) << " qubit " << qubit;
  }
}

TEST(LocalComplementation, LocalComplementationPreservesD) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = testing::random_connected_graph(n, rng);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    EXPECT_EQ(classical_bound(g).d, classical_bound(local_complement(g, v)).d) << to_graph6(g) << " v=" << v;
  }
}

TEST(LocalComplementation, StarToCompleteByLetterPermutation) {
  // The local Clifford behind complementation at the center swaps Y<->Z on
  // the center and X<->Y on every leaf (up to signs that models absorb).
  const LetterPermutation center{PauliLetter::I, PauliLetter::X, PauliLetter::Z, PauliLetter::Y};
  const LetterPermutation leaf{PauliLetter::I, PauliLetter::Y, PauliLetter::X, PauliLetter::Z};
  for (int n = 3; n <= 6; ++n) {
    BellOperator b = bell_terms(build_family(GraphFamily::Star, n));
    b = apply_permutation(b, 0, center);
    for (int q = 1; q < n; ++q) b = apply_permutation(b, q, leaf);

    const BellOperator fc = bell_terms(build_family(GraphFamily::FullyConnected, n));
    auto letters = [](const BellOperator& op) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
      for (const PauliString& t : op.terms) out.emplace_back(t.x, t.z);
      std::sort(out.begin(), out.end());
      return out;
    };
    EXPECT_EQ(letters(b), letters(fc));
    EXPECT_EQ(maximize(b, with(SearchEngine::Spectral, false)).d, classical_bound(build_family(GraphFamily::FullyConnected, n)).d);
  }
}

TEST(QuantumCeiling, ConnectedGraphsViolate) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      EXPECT_LT(classical_bound(g, with(SearchEngine::Spectral)).c, std::int64_t{1} << n) << to_graph6(g);
    }
  }
}

TEST(DefaultWorkers, Positive) { EXPECT_GE(default_worker_count(), 1); }

}  // namespace
}  // namespace graphbell
