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

#include <boost/multiprecision/cpp_int.hpp>

namespace graphbell {

// Exact rationals. Every quantity in this library is dyadic (C / 2^n and
// products of such), but products of many pieces overflow machine words.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned exponent) { return BigInt{1} << exponent; }

inline Rational dyadic(std::int64_t numerator, unsigned exponent) {
  return Rational(BigInt{numerator}, pow2(exponent));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// "num/den" in lowest terms; integers print as "k/1".
inline std::string to_fraction(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

// "num/2^exponent" without reduction, e.g. 10/16. Requires r * 2^exponent integral.
std::string to_fraction_over_pow2(const Rational& r, unsigned exponent);

// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace graphbell
