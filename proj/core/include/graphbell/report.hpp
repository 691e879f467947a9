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

#include <string>

#include "graphbell/bounds.hpp"
#include "graphbell/lhv.hpp"

namespace graphbell {

/// {n, c, d_num, d_den, argmax_negx, argmax_negy, argmax_negz, search_space,
/// method, engine}; d is in lowest terms.
std::string to_json(const BoundReport& r, int indent = -1);
std::string csv_header_bound();
std::string to_csv_row(const BoundReport& r);
std::string to_text(const BoundReport& r);

/// {value: {num, den}, is_exact, notes, derivation: {kind, vertices, value,
/// bridge?, subset?, children}}.
std::string to_json(const CompositeBound& b, int indent = -1);

// {"num": ..., "den": ...}; integers beyond 64 bits are written as strings.
std::string to_json(const Rational& r);
std::string to_text(const CompositeBound& b);

}  // namespace graphbell
