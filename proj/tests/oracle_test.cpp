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

#include "graphbell/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graph_catalog.hpp"
#include "graphbell/errors.hpp"
#include "graphbell/lhv.hpp"

namespace graphbell::oracle {
namespace {

const std::vector<GraphFamily> kFamilies = {GraphFamily::LinearCluster, GraphFamily::RingCluster,
                                            GraphFamily::Star, GraphFamily::FullyConnected};

TEST(Statevector, SmallExamples) {
  const StateVector plus = statevector(Graph(1));
  ASSERT_EQ(plus.amplitudes.size(), 2u);
  EXPECT_NEAR(plus.amplitudes[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(plus.amplitudes[1].real(), 1 / std::sqrt(2.0), 1e-15);

  const StateVector pair = statevector(build_family(GraphFamily::LinearCluster, 2));
  const double expected[] = {0.5, 0.5, 0.5, -0.5};
  for (int b = 0; b < 4; ++b) EXPECT_NEAR(pair.amplitudes[static_cast<std::size_t>(b)].real(), expected[b], 1e-15);
  EXPECT_NEAR(pair.norm(), 1.0, 1e-12);

  EXPECT_THROW(statevector(build_family(GraphFamily::LinearCluster, 13)), CapExceeded);
}

TEST(CheckStabilized, FamiliesAndNegativeControl) {
  for (GraphFamily f : kFamilies) {
    for (int n = 2; n <= 8; ++n) EXPECT_LT(check_stabilized(build_family(f, n)), 1e-12);
  }
  const Graph fc3 = build_family(GraphFamily::FullyConnected, 3);
  StateVector psi = statevector(fc3);
  psi.amplitudes[5] = -psi.amplitudes[5];
  EXPECT_GT(check_stabilized(fc3, psi), 0.1);
}

TEST(ApplyPauli, MatchesDenseMatrices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    const PauliString p{n, static_cast<std::uint32_t>(rng()) & mask, static_cast<std::uint32_t>(rng()) & mask,
                        (rng() & 1) != 0};
    const StateVector psi = statevector(testing::labelled_graph(n, rng()));
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.amplitudes.size()));
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = psi.amplitudes[i];
    const Eigen::VectorXcd dense = dense_matrix(p) * v;
    const StateVector moved = apply_pauli(p, psi);
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
      EXPECT_LT(std::abs(dense(static_cast<Eigen::Index>(i)) - moved.amplitudes[i]), 1e-12);
    }
  }
}

TEST(QuantumBellValue, Examples) {
  EXPECT_NEAR(quantum_bell_value(build_family(GraphFamily::FullyConnected, 3)), 8.0, 1e-9);
  EXPECT_NEAR(quantum_bell_value(build_family(GraphFamily::LinearCluster, 8)), 256.0, 1e-9);
  EXPECT_NEAR(quantum_bell_value(Graph(1)), 2.0, 1e-12);
}

TEST(QuantumBellValue, RandomConnectedGraphsSaturate) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = testing::random_connected_graph(n, rng);
    const double q = quantum_bell_value(g);
    EXPECT_NEAR(q, std::ldexp(1.0, n), 1e-9);
    if (n >= 3) {
      SearchOptions o;
      o.engine = SearchEngine::Spectral;
      EXPECT_LT(static_cast<double>(classical_bound(g, o).c), q);
    }
  }
}

TEST(ProjectorIdentity, DenseSumEqualsScaledProjector) {
  std::mt19937_64 rng(29);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const Graph g = testing::labelled_graph(n, rng());
      const DenseMatrix lhs = dense_bell_operator(bell_terms(g));
      const DenseMatrix rhs = std::ldexp(1.0, n) * projector(statevector(g));
      EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9) << to_graph6(g);
    }
  }
  EXPECT_THROW(dense_matrix(PauliString::identity(7)), CapExceeded);
}

TEST(Hermiticity, StabilizerElements) {
  std::mt19937_64 rng(37);
  for (int n = 1; n <= 6; ++n) {
    const Graph g = testing::labelled_graph(n, rng());
    for (const PauliString& t : bell_terms(g).terms) {
      const DenseMatrix m = dense_matrix(t);
      EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(SchmidtProfile, Examples) {
  const SchmidtProfile ghz = schmidt_profile(build_family(GraphFamily::Star, 5), 0b00001);
  EXPECT_EQ(ghz.k, 2);
  EXPECT_NEAR(ghz.a0_sq, 0.5, 1e-12);

  const SchmidtProfile pair = schmidt_profile(build_family(GraphFamily::LinearCluster, 2), 0b01);
  EXPECT_EQ(pair.k, 2);
  EXPECT_NEAR(pair.a0_sq, 0.5, 1e-12);

  const SchmidtProfile lc4 = schmidt_profile(build_family(GraphFamily::LinearCluster, 4), 0b0011);
  EXPECT_LE(1.0 / lc4.k, lc4.a0_sq + 1e-12);
  EXPECT_LE(lc4.a0_sq, 0.5 + 1e-12);

  // Product state across the cut: two disjoint edges split between them.
  const Graph two = disjoint_union(build_family(GraphFamily::LinearCluster, 2), build_family(GraphFamily::LinearCluster, 2));
  const SchmidtProfile prod = schmidt_profile(two, 0b0011);
  EXPECT_EQ(prod.k, 1);
  EXPECT_NEAR(prod.a0_sq, 1.0, 1e-12);

  EXPECT_THROW(schmidt_profile(two, 0), std::invalid_argument);
  EXPECT_THROW(schmidt_profile(two, 0b1111), std::invalid_argument);
}

TEST(SchmidtProfile, FlatSpectrumOnConnectedGraphs) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      for (VertexMask cut = 1; cut < g.vertex_mask(); ++cut) {
        const SchmidtProfile p = schmidt_profile(g, cut);
        EXPECT_LE(1.0 / p.k, p.a0_sq + 1e-12);
        EXPECT_LE(p.a0_sq, 0.5 + 1e-12);
        // Graph states have flat Schmidt spectra of power-of-two rank.
        EXPECT_NEAR(p.a0_sq, 1.0 / p.k, 1e-10);
        EXPECT_EQ(p.k & (p.k - 1), 0);
      }
    }
  }
}

}  // namespace
}  // namespace graphbell::oracle
