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

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "graphbell/errors.hpp"

namespace graphbell {

int evaluate_term(const PauliString& term, const Assignment& a) {
  const int flips = std::popcount(term.x_letters() & a.neg_x) +
                    std::popcount(term.y_letters() & a.neg_y) +
                    std::popcount(term.z_letters() & a.neg_z);
  return ((flips & 1) != 0) != term.negative ? -1 : 1;
}

std::int64_t bell_value(const BellOperator& b, const Assignment& a) {
  std::int64_t sum = 0;
  for (const PauliString& t : b.terms) sum += evaluate_term(t, a);
  return sum;
}

const char* method_name(SearchMethod m) {
  return m == SearchMethod::Exhaustive ? "exhaustive" : "exhaustive-unreduced";
}

const char* engine_name(SearchEngine e) {
  return e == SearchEngine::Enumerate ? "enumerate" : "spectral";
}

int default_worker_count() {
  if (const char* env = std::getenv("GRAPHBELL_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Models and letter patterns share one packed layout, highest field first:
//   reduced:   neg_x << n | neg_y
//   unreduced: neg_x << 2n | neg_y << n | neg_z
// so integer order on the packed counter is the lexicographic model order.
struct Layout {
  int n;
  bool reduced;

  int bits() const { return reduced ? 2 * n : 3 * n; }

  std::uint64_t pack_term(const PauliString& t) const {
    const std::uint64_t xl = t.x_letters(), yl = t.y_letters(), zl = t.z_letters();
    if (reduced) return (xl << n) | yl;
    return (xl << (2 * n)) | (yl << n) | zl;
  }

  Assignment unpack(std::uint64_t counter) const {
    const std::uint64_t field = (std::uint64_t{1} << n) - 1;
    Assignment a;
    if (reduced) {
      a.neg_x = static_cast<std::uint32_t>((counter >> n) & field);
      a.neg_y = static_cast<std::uint32_t>(counter & field);
    } else {
      a.neg_x = static_cast<std::uint32_t>((counter >> (2 * n)) & field);
      a.neg_y = static_cast<std::uint32_t>((counter >> n) & field);
      a.neg_z = static_cast<std::uint32_t>(counter & field);
    }
    return a;
  }
};

struct Best {
  std::int64_t value = -1;
  std::uint64_t counter = 0;
};

// Larger |value| wins; equal values keep the smaller counter.
Best merge(const Best& a, const Best& b) {
  if (a.value != b.value) return a.value > b.value ? a : b;
  return a.counter <= b.counter ? a : b;
}

Best scan_range(const std::vector<std::uint64_t>& plus, const std::vector<std::uint64_t>& minus,
                std::uint64_t lo, std::uint64_t hi) {
  const auto np = static_cast<std::int64_t>(plus.size());
  const auto nm = static_cast<std::int64_t>(minus.size());
  Best best;
  for (std::uint64_t a = lo; a < hi; ++a) {
    std::int64_t odd_plus = 0;
    for (const std::uint64_t k : plus) odd_plus += std::popcount(k & a) & 1;
    std::int64_t odd_minus = 0;
    for (const std::uint64_t k : minus) odd_minus += std::popcount(k & a) & 1;
    const std::int64_t value = (np - 2 * odd_plus) - (nm - 2 * odd_minus);
    const std::int64_t mag = value < 0 ? -value : value;
    if (mag > best.value) {
      best.value = mag;
      best.counter = a;
    }
  }
  return best;
}

Best enumerate_search(const BellOperator& b, const Layout& layout, int workers) {
  std::vector<std::uint64_t> plus, minus;
  for (const PauliString& t : b.terms) {
    (t.negative ? minus : plus).push_back(layout.pack_term(t));
  }
  const std::uint64_t total = std::uint64_t{1} << layout.bits();
  const std::uint64_t w = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(workers), 1, total);
  if (w == 1) return scan_range(plus, minus, 0, total);

  const std::uint64_t chunk = (total + w - 1) / w;
  std::vector<Best> partial(w);
  {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (std::uint64_t i = 0; i < w; ++i) {
      const std::uint64_t lo = std::min(total, i * chunk);
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&, i, lo, hi] { partial[i] = scan_range(plus, minus, lo, hi); });
    }
  }
  Best best;
  for (const Best& p : partial) {
    if (p.value >= 0) best = merge(best, p);
  }
  return best;
}

inline constexpr int kSpectralMaxBits = 26;

// In-place Walsh-Hadamard transform. The first three stages run as one
// 8-point kernel; the remaining stages are contiguous and vectorise.
void walsh_hadamard(std::vector<std::int16_t>& f) {
  const std::size_t size = f.size();
  std::int16_t* p = f.data();
  std::size_t h = 1;
  if (size >= 8) {
    for (std::size_t i = 0; i < size; i += 8) {
      std::int16_t* q = p + i;
      const int a0 = q[0] + q[1], a1 = q[0] - q[1], a2 = q[2] + q[3], a3 = q[2] - q[3];
      const int a4 = q[4] + q[5], a5 = q[4] - q[5], a6 = q[6] + q[7], a7 = q[6] - q[7];
      const int b0 = a0 + a2, b1 = a1 + a3, b2 = a0 - a2, b3 = a1 - a3;
      const int b4 = a4 + a6, b5 = a5 + a7, b6 = a4 - a6, b7 = a5 - a7;
      q[0] = static_cast<std::int16_t>(b0 + b4);
      q[1] = static_cast<std::int16_t>(b1 + b5);
      q[2] = static_cast<std::int16_t>(b2 + b6);
      q[3] = static_cast<std::int16_t>(b3 + b7);
      q[4] = static_cast<std::int16_t>(b0 - b4);
      q[5] = static_cast<std::int16_t>(b1 - b5);
      q[6] = static_cast<std::int16_t>(b2 - b6);
      q[7] = static_cast<std::int16_t>(b3 - b7);
    }
    h = 8;
  }
  for (; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      std::int16_t* lo = p + i;
      std::int16_t* hi = lo + h;
      for (std::size_t j = 0; j < h; ++j) {
        const std::int16_t u = lo[j], v = hi[j];
        lo[j] = static_cast<std::int16_t>(u + v);
        hi[j] = static_cast<std::int16_t>(u - v);
      }
    }
  }
}

Best spectral_search(const BellOperator& b, const Layout& layout) {
  // Every partial sum is bounded by the term count, so 16 bits suffice.
  if (layout.bits() > kSpectralMaxBits || b.terms.size() > 16384) {
    throw CapExceeded("spectral engine needs 2^" + std::to_string(layout.bits()) +
                      " counters; its limit is 2^" + std::to_string(kSpectralMaxBits));
  }
  const std::size_t size = std::size_t{1} << layout.bits();
  std::vector<std::int16_t> f(size, 0);
  for (const PauliString& t : b.terms) f[layout.pack_term(t)] += t.negative ? -1 : 1;
  walsh_hadamard(f);

  Best best;
  for (std::size_t a = 0; a < size; ++a) {
    const std::int64_t mag = f[a] < 0 ? -static_cast<std::int64_t>(f[a]) : f[a];
    if (mag > best.value) {
      best.value = mag;
      best.counter = a;
    }
  }
  return best;
}

void check_cap(int n, const SearchOptions& options) {
  if (n > options.exact_cap) {
    throw CapExceeded("exact search is capped at " + std::to_string(options.exact_cap) +
                      " qubits (graph has " + std::to_string(n) +
                      "); use the compositional bounds (`compose`) instead");
  }
}

}  // namespace

BoundReport maximize(const BellOperator& b, const SearchOptions& options) {
  check_cap(b.n, options);
  if (b.terms.empty()) {
    throw std::invalid_argument("Bell operator has no terms");
  }
  const Layout layout{b.n, options.restrict_z};
  if (layout.bits() > 63) throw CapExceeded("model counter exceeds 63 bits");

  const int workers = options.workers > 0 ? options.workers : default_worker_count();
  const Best best = options.engine == SearchEngine::Spectral ? spectral_search(b, layout)
                                                             : enumerate_search(b, layout, workers);

  BoundReport r;
  r.n = b.n;
  r.c = best.value;
  r.d = dyadic(best.value, static_cast<unsigned>(b.n));
  r.argmax = layout.unpack(best.counter);
  r.search_space = std::uint64_t{1} << layout.bits();
  r.method = options.restrict_z ? SearchMethod::Exhaustive : SearchMethod::ExhaustiveUnreduced;
  r.engine = options.engine;
  return r;
}

BoundReport classical_bound(const Graph& g, const SearchOptions& options) {
  check_cap(g.size(), options);
  const std::vector<VertexMask> components = connected_components(g);
  if (components.size() <= 1) return maximize(bell_terms(g), options);

  // B(G) is the product of the component operators over disjoint qubits.
  BoundReport r;
  r.n = g.size();
  r.c = 1;
  r.method = options.restrict_z ? SearchMethod::Exhaustive : SearchMethod::ExhaustiveUnreduced;
  r.engine = options.engine;
  for (VertexMask comp : components) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const BoundReport part = maximize(bell_terms(sub.graph), options);
    r.c *= part.c;
    r.search_space += part.search_space;
    for (std::size_t k = 0; k < sub.vertices.size(); ++k) {
      const std::uint32_t bit = std::uint32_t{1} << sub.vertices[k];
      if ((part.argmax.neg_x >> k) & 1u) r.argmax.neg_x |= bit;
      if ((part.argmax.neg_y >> k) & 1u) r.argmax.neg_y |= bit;
      if ((part.argmax.neg_z >> k) & 1u) r.argmax.neg_z |= bit;
    }
  }
  r.d = dyadic(r.c, static_cast<unsigned>(g.size()));
  return r;
}

BellOperator apply_permutation(const BellOperator& b, int qubit, const LetterPermutation& perm) {
  if (qubit < 0 || qubit >= b.n) throw std::out_of_range("permutation qubit out of range");
  std::array<bool, 4> hit{};
  for (PauliLetter p : perm) {
    const auto idx = static_cast<std::size_t>(p);
    if (idx >= 4 || hit[idx]) throw std::invalid_argument("letter table is not a bijection");
    hit[idx] = true;
  }
  BellOperator out = b;
  for (PauliString& t : out.terms) {
    t.set_letter(qubit, perm[static_cast<std::size_t>(t.letter(qubit))]);
  }
  return out;
}

}  // namespace graphbell
