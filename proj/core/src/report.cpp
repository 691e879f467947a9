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

#include "graphbell/report.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "graphbell/errors.hpp"
#include "json.hpp"

namespace graphbell {

using nlohmann::ordered_json;

std::string to_fraction_over_pow2(const Rational& r, unsigned exponent) {
  const Rational scaled = r * Rational(pow2(exponent));
  if (denominator_of(scaled) != 1) {
    throw std::invalid_argument("value is not a multiple of 1/2^" + std::to_string(exponent));
  }
  return numerator_of(scaled).str() + "/" + pow2(exponent).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("invalid rational '" + text + "'");
  }
}

namespace {

// Machine-sized integers stay JSON numbers; anything larger becomes a string.
ordered_json big(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return v.convert_to<std::uint64_t>();
  }
  if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min())) return v.convert_to<std::int64_t>();
  return v.str();
}

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", big(numerator_of(r))}, {"den", big(denominator_of(r))}};
}

ordered_json vertex_list(VertexMask m) {
  ordered_json out = ordered_json::array();
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

ordered_json step_json(const DerivationStep& s) {
  ordered_json j;
  j["kind"] = step_name(s.kind);
  j["vertices"] = vertex_list(s.vertices);
  j["value"] = rational_json(s.value);
  if (s.bridge) j["bridge"] = {s.bridge->u, s.bridge->v};
  if (s.kind == StepKind::SubgraphRelaxation) j["subset"] = vertex_list(s.subset);
  ordered_json kids = ordered_json::array();
  for (const DerivationStep& c : s.children) kids.push_back(step_json(c));
  j["children"] = std::move(kids);
  return j;
}

void step_text(const DerivationStep& s, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << step_name(s.kind) << ' ';
  out << vertex_list(s.vertices).dump() << " -> " << to_fraction(s.value);
  if (s.bridge) out << " across {" << s.bridge->u << ',' << s.bridge->v << '}';
  if (s.kind == StepKind::SubgraphRelaxation) out << " via " << vertex_list(s.subset).dump();
  out << '\n';
  for (const DerivationStep& c : s.children) step_text(c, depth + 1, out);
}

}  // namespace

std::string to_json(const BoundReport& r, int indent) {
  ordered_json j;
  j["n"] = r.n;
  j["c"] = r.c;
  j["d_num"] = big(numerator_of(r.d));
  j["d_den"] = big(denominator_of(r.d));
  j["argmax_negx"] = r.argmax.neg_x;
  j["argmax_negy"] = r.argmax.neg_y;
  j["argmax_negz"] = r.argmax.neg_z;
  j["search_space"] = r.search_space;
  j["method"] = method_name(r.method);
  j["engine"] = engine_name(r.engine);
  return j.dump(indent);
}

std::string csv_header_bound() {
  return "n,c,d_num,d_den,argmax_negx,argmax_negy,argmax_negz,search_space,method,engine";
}

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.c << ',' << numerator_of(r.d) << ',' << denominator_of(r.d) << ','
      << r.argmax.neg_x << ',' << r.argmax.neg_y << ',' << r.argmax.neg_z << ',' << r.search_space << ','
      << method_name(r.method) << ',' << engine_name(r.engine);
  return out.str();
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << '\n'
      << "C = " << r.c << '\n'
      << "D = " << to_fraction(r.d) << " (" << to_fraction_over_pow2(r.d, static_cast<unsigned>(r.n)) << ")\n"
      << "argmax neg_x=" << r.argmax.neg_x << " neg_y=" << r.argmax.neg_y << " neg_z=" << r.argmax.neg_z << '\n'
      << "search space = " << r.search_space << " (" << method_name(r.method) << ", "
      << engine_name(r.engine) << ")\n";
  return out.str();
}

std::string to_json(const Rational& r) { return rational_json(r).dump(); }

std::string to_json(const CompositeBound& b, int indent) {
  ordered_json j;
  j["value"] = rational_json(b.value);
  j["is_exact"] = b.is_exact;
  j["notes"] = b.notes;
  j["derivation"] = step_json(b.derivation);
  return j.dump(indent);
}

std::string to_text(const CompositeBound& b) {
  std::ostringstream out;
  out << "D <= " << to_fraction(b.value) << (b.is_exact ? " (exact)" : "") << '\n';
  for (const std::string& note : b.notes) out << "note: " << note << '\n';
  step_text(b.derivation, 0, out);
  return out.str();
}

}  // namespace graphbell
