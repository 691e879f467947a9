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

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "graphbell/errors.hpp"

namespace graphbell::oracle {

namespace {

void check_dense_cap(int n, int cap) {
  if (n > cap) {
    throw CapExceeded("dense oracle is limited to " + std::to_string(cap) + " qubits, got " +
                      std::to_string(n));
  }
}

// i^k for k mod 4.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

StateVector statevector(const Graph& g) {
  check_dense_cap(g.size(), kDenseCap);
  const std::size_t dim = std::size_t{1} << g.size();
  StateVector psi{g.size(), std::vector<Complex>(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0))};
  for (const Edge& e : g.edges()) {
    const std::size_t both = (std::size_t{1} << e.u) | (std::size_t{1} << e.v);
    for (std::size_t b = 0; b < dim; ++b) {
      if ((b & both) == both) psi.amplitudes[b] = -psi.amplitudes[b];
    }
  }
  return psi;
}

StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
  if (p.n != psi.n) throw std::invalid_argument("Pauli string and state have different qubit counts");
  // P(x,z) = i^{|x&z|} X^x Z^z: Z^z|b> = (-1)^{|z&b|}|b>, X^x|b> = |b^x>.
  const Complex global = i_power(std::popcount(p.x & p.z) + (p.negative ? 2 : 0));
  StateVector out{psi.n, std::vector<Complex>(psi.amplitudes.size())};
  for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) {
    const double zsign = (std::popcount(static_cast<std::uint32_t>(b) & p.z) & 1) ? -1.0 : 1.0;
    out.amplitudes[b ^ p.x] = global * zsign * psi.amplitudes[b];
  }
  return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) throw std::invalid_argument("state size mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

double check_stabilized(const Graph& g, const StateVector& psi) {
  if (psi.n != g.size()) throw std::invalid_argument("state does not match graph size");
  double worst = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const StateVector moved = apply_pauli(generator(g, i), psi);
    double sq = 0.0;
    for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) sq += std::norm(moved.amplitudes[b] - psi.amplitudes[b]);
    worst = std::max(worst, std::sqrt(sq));
  }
  return worst;
}

double check_stabilized(const Graph& g) { return check_stabilized(g, statevector(g)); }

double quantum_bell_value(const Graph& g) {
  const StateVector psi = statevector(g);
  const BellOperator b = bell_terms(g);
  double total = 0.0;
  for (const PauliString& t : b.terms) total += inner(psi, apply_pauli(t, psi)).real();
  return total;
}

SchmidtProfile schmidt_profile(const StateVector& psi, VertexMask bipartition) {
  const VertexMask all = psi.n == 0 ? 0u : (~VertexMask{0} >> (32 - psi.n));
  bipartition &= all;
  if (bipartition == 0 || bipartition == all) {
    throw std::invalid_argument("bipartition must be a proper nonempty subset");
  }
  std::vector<int> side_a, side_b;
  for (int q = 0; q < psi.n; ++q) ((bipartition >> q) & 1u ? side_a : side_b).push_back(q);

  // Rows index the smaller side so the SVD works on a wide matrix.
  if (side_a.size() > side_b.size()) std::swap(side_a, side_b);
  const Eigen::Index rows = Eigen::Index{1} << side_a.size();
  const Eigen::Index cols = Eigen::Index{1} << side_b.size();
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) {
    Eigen::Index r = 0, c = 0;
    for (std::size_t k = 0; k < side_a.size(); ++k) r |= static_cast<Eigen::Index>((b >> side_a[k]) & 1u) << k;
    for (std::size_t k = 0; k < side_b.size(); ++k) c |= static_cast<Eigen::Index>((b >> side_b[k]) & 1u) << k;
    m(r, c) = psi.amplitudes[b];
  }
  const Eigen::VectorXd sv = m.jacobiSvd().singularValues();

  SchmidtProfile out;
  out.bipartition = bipartition;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kSchmidtRankThreshold) ++out.k;
  }
  out.a0_sq = sv.size() > 0 ? sv(0) * sv(0) : 0.0;
  return out;
}

SchmidtProfile schmidt_profile(const Graph& g, VertexMask bipartition) {
  return schmidt_profile(statevector(g), bipartition);
}

DenseMatrix dense_matrix(const PauliString& p) {
  check_dense_cap(p.n, kMatrixCap);
  const Complex i{0.0, 1.0};
  // Explicit 2x2 factors; qubit 0 is the least significant tensor slot.
  DenseMatrix m = DenseMatrix::Identity(1, 1) * Complex(p.negative ? -1.0 : 1.0);
  for (int q = 0; q < p.n; ++q) {
    Eigen::Matrix2cd f;
    switch (p.letter(q)) {
      case PauliLetter::I: f << 1, 0, 0, 1; break;
      case PauliLetter::X: f << 0, 1, 1, 0; break;
      case PauliLetter::Y: f << 0, -i, i, 0; break;
      case PauliLetter::Z: f << 1, 0, 0, -1; break;
    }
    DenseMatrix next(2 * m.rows(), 2 * m.cols());
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = f(r, c) * m;
    }
    m = std::move(next);
  }
  return m;
}

DenseMatrix dense_bell_operator(const BellOperator& b) {
  check_dense_cap(b.n, kMatrixCap);
  const Eigen::Index dim = Eigen::Index{1} << b.n;
  DenseMatrix sum = DenseMatrix::Zero(dim, dim);
  for (const PauliString& t : b.terms) sum += dense_matrix(t);
  return sum;
}

DenseMatrix projector(const StateVector& psi) {
  check_dense_cap(psi.n, kMatrixCap);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.amplitudes.size()));
  for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = psi.amplitudes[i];
  return v * v.adjoint();
}

}  // namespace graphbell::oracle
