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

#include "graphbell/stabilizer.hpp"

#include <bit>
#include <stdexcept>

#include "graphbell/errors.hpp"

namespace graphbell {

char letter_char(PauliLetter p) {
  switch (p) {
    case PauliLetter::I: return '1';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

PauliLetter PauliString::letter(int qubit) const {
  const bool xb = (x >> qubit) & 1u;
  const bool zb = (z >> qubit) & 1u;
  if (xb) return zb ? PauliLetter::Y : PauliLetter::X;
  return zb ? PauliLetter::Z : PauliLetter::I;
}

void PauliString::set_letter(int qubit, PauliLetter p) {
  const std::uint32_t bit = std::uint32_t{1} << qubit;
  x &= ~bit;
  z &= ~bit;
  if (p == PauliLetter::X || p == PauliLetter::Y) x |= bit;
  if (p == PauliLetter::Y || p == PauliLetter::Z) z |= bit;
}

std::string to_string(const PauliString& p) {
  std::string out(1, p.negative ? '-' : '+');
  for (int k = 0; k < p.n; ++k) out.push_back(letter_char(p.letter(k)));
  return out;
}

PauliString parse_pauli(std::string_view text) {
  PauliString p;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    p.negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw ParseError("Pauli string longer than 31 qubits");
  }
  p.n = static_cast<int>(text.size());
  for (int k = 0; k < p.n; ++k) {
    switch (text[static_cast<std::size_t>(k)]) {
      case '1': case 'I': case '_': break;
      case 'X': p.set_letter(k, PauliLetter::X); break;
      case 'Y': p.set_letter(k, PauliLetter::Y); break;
      case 'Z': p.set_letter(k, PauliLetter::Z); break;
      default:
        throw ParseError("invalid Pauli letter '" + std::string(1, text[static_cast<std::size_t>(k)]) + "'");
    }
  }
  return p;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("Pauli strings act on different qubit counts");
  // Per-qubit P1*P2 = i^g P(x1^x2, z1^z2); g = +1 for cyclic pairs XY, YZ, ZX
  // and -1 for the anticyclic ones.
  const std::uint32_t ax = a.x & ~a.z, ay = a.x & a.z, az = a.z & ~a.x;
  const std::uint32_t bx = b.x & ~b.z, by = b.x & b.z, bz = b.z & ~b.x;
  const std::uint32_t plus = (ax & by) | (ay & bz) | (az & bx);
  const std::uint32_t minus = (ax & bz) | (ay & bx) | (az & by);
  int phase = std::popcount(plus) - std::popcount(minus);
  if (a.negative) phase += 2;
  if (b.negative) phase += 2;
  phase = ((phase % 4) + 4) % 4;
  if (phase % 2 != 0) {
    throw InternalError("product of " + to_string(a) + " and " + to_string(b) +
                        " has an imaginary phase");
  }
  return PauliString{a.n, a.x ^ b.x, a.z ^ b.z, phase == 2};
}

PauliString generator(const Graph& g, int i) {
  if (i < 0 || i >= g.size()) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  }
  return PauliString{g.size(), std::uint32_t{1} << i, g.neighbors(i), false};
}

PauliString element(const Graph& g, std::uint32_t subset) {
  if ((subset & ~g.vertex_mask()) != 0) {
    throw std::out_of_range("generator subset has bits beyond the vertex count");
  }
  PauliString acc = PauliString::identity(g.size());
  for (std::uint32_t m = subset; m; m &= m - 1) {
    acc = multiply(acc, generator(g, std::countr_zero(m)));
  }
  return acc;
}

BellOperator bell_terms(const Graph& g, int cap) {
  const int n = g.size();
  if (n > cap) {
    throw CapExceeded("Bell operator has 2^" + std::to_string(n) +
                      " terms; the term enumeration cap is " + std::to_string(cap) + " qubits");
  }
  std::vector<PauliString> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gens.push_back(generator(g, i));

  BellOperator b;
  b.n = n;
  const std::size_t count = std::size_t{1} << n;
  b.terms.resize(count);
  b.terms[0] = PauliString::identity(n);
  for (std::size_t s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    b.terms[s] = multiply(b.terms[s & (s - 1)], gens[static_cast<std::size_t>(low)]);
  }
  return b;
}

}  // namespace graphbell
