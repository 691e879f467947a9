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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "graphbell/graph.hpp"
#include "graphbell/stabilizer.hpp"

namespace graphbell::oracle {

// Dense checks stay below 4096 amplitudes.
inline constexpr int kDenseCap = 12;
// Full 2^n x 2^n matrices are only built up to this size.
inline constexpr int kMatrixCap = 6;

using Complex = std::complex<double>;

/// Little-endian: bit k of a basis index is the value of qubit k.
struct StateVector {
  int n = 0;
  std::vector<Complex> amplitudes;

  double norm() const;
};

// |+>^n followed by a controlled-Z on every edge.
StateVector statevector(const Graph& g);

// P|psi> by bit-indexed action; no matrices.
StateVector apply_pauli(const PauliString& p, const StateVector& psi);

Complex inner(const StateVector& a, const StateVector& b);

// max_i || g_i |psi> - |psi> ||.
double check_stabilized(const Graph& g, const StateVector& psi);
double check_stabilized(const Graph& g);

// <G| B(G) |G>, summed term by term.
double quantum_bell_value(const Graph& g);

struct SchmidtProfile {
  VertexMask bipartition = 0;
  int k = 0;
  double a0_sq = 0.0;
};

inline constexpr double kSchmidtRankThreshold = 1e-10;

/// Schmidt rank and largest squared coefficient of |G> across
/// (bipartition | complement), from the singular values of the reshaped
/// amplitude matrix.
SchmidtProfile schmidt_profile(const Graph& g, VertexMask bipartition);
SchmidtProfile schmidt_profile(const StateVector& psi, VertexMask bipartition);

using DenseMatrix = Eigen::MatrixXcd;

DenseMatrix dense_matrix(const PauliString& p);
DenseMatrix dense_bell_operator(const BellOperator& b);
DenseMatrix projector(const StateVector& psi);

}  // namespace graphbell::oracle
