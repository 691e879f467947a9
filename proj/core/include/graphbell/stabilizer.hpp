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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphbell/graph.hpp"

namespace graphbell {

// Letter encoding follows the (x, z) symplectic bits: 1=(0,0) X=(1,0) Y=(1,1) Z=(0,1).
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter p);

/// Hermitian Pauli string with a real sign. Qubit k carries
/// P(x_k, z_k) = i^{x_k z_k} X^{x_k} Z^{z_k}, so (1,1) is Y itself, not XZ.
struct PauliString {
  int n = 0;
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  bool negative = false;

  int sign() const { return negative ? -1 : 1; }
  PauliLetter letter(int qubit) const;
  void set_letter(int qubit, PauliLetter p);

  // Letter-class masks used by the LHV evaluator.
  std::uint32_t x_letters() const { return x & ~z; }
  std::uint32_t y_letters() const { return x & z; }
  std::uint32_t z_letters() const { return z & ~x; }

  static PauliString identity(int n) { return PauliString{n, 0, 0, false}; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

// "+XZZ", "-XXY1Z"; qubit 0 is the leftmost letter. A missing sign means '+'.
std::string to_string(const PauliString& p);
PauliString parse_pauli(std::string_view text);

/// Product a*b with phase tracked mod 4. Throws InternalError if the product
/// carries a phase of +-i, which cannot happen for commuting Hermitian inputs.
PauliString multiply(const PauliString& a, const PauliString& b);

// g_i = X at i, Z on every neighbor of i.
PauliString generator(const Graph& g, int i);

// Product of the generators selected by `subset` (bit i selects g_i).
PauliString element(const Graph& g, std::uint32_t subset);

inline constexpr int kDefaultTermCap = 20;

/// The Bell operator B(G) as its 2^n stabilizer elements. terms[s] is the
/// element for generator subset s, so terms[0] is the identity and
/// terms[1 << i] is g_i.
struct BellOperator {
  int n = 0;
  std::vector<PauliString> terms;
};

BellOperator bell_terms(const Graph& g, int cap = kDefaultTermCap);

}  // namespace graphbell
