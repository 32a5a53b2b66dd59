// Copyright 2026 The aspec authors
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

#include "aspec/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace aspec {

Groupoid::Groupoid(int size, std::vector<std::uint8_t> table)
    : size_(size), table_(std::move(table)) {
  if (size_ < 1) {
    throw std::invalid_argument("Groupoid: size must be positive");
  }
  if (table_.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_)) {
    throw std::invalid_argument("Groupoid: table must have size * size entries");
  }
  for (std::uint8_t v : table_) {
    if (v >= size_) {
      throw std::invalid_argument("Groupoid: table entry out of range");
    }
  }
}

Groupoid Groupoid::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int g = static_cast<int>(rows.size());
  std::vector<std::uint8_t> table;
  table.reserve(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != g) {
      throw std::invalid_argument("Groupoid::from_rows: table must be square");
    }
    for (int v : row) {
      if (v < 0 || v >= g) {
        throw std::invalid_argument("Groupoid::from_rows: entry out of range");
      }
      table.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return Groupoid(g, std::move(table));
}

std::uint8_t Groupoid::eval(int a, int b) const {
  if (a < 0 || a >= size_ || b < 0 || b >= size_) {
    throw std::invalid_argument("Groupoid::eval: element out of range");
  }
  return (*this)(a, b);
}

bool is_associative(const Groupoid& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = g(a, b);
      for (int c = 0; c < n; ++c) {
        if (g(ab, c) != g(a, g(b, c))) return false;
      }
    }
  }
  return true;
}

namespace {

// Off-diagonal cells in code-digit order, most significant first.
constexpr int kIdempotentCells[6][2] = {{0, 1}, {0, 2}, {1, 0},
                                        {1, 2}, {2, 0}, {2, 1}};

}  // namespace

int encode_idempotent(const Groupoid& g) {
  if (g.size() != 3) {
    throw std::invalid_argument("encode_idempotent: carrier must have 3 elements");
  }
  for (int i = 0; i < 3; ++i) {
    if (g(i, i) != i) {
      throw std::invalid_argument("encode_idempotent: operation is not idempotent");
    }
  }
  int code = 0;
  for (const auto& cell : kIdempotentCells) {
    code = code * 3 + g(cell[0], cell[1]);
  }
  return code;
}

Groupoid decode_idempotent(int code) {
  if (code < 0 || code > 728) {
    throw std::invalid_argument("decode_idempotent: code must be in [0, 728]");
  }
  std::vector<std::uint8_t> table(9, 0);
  for (int i = 0; i < 3; ++i) {
    table[static_cast<std::size_t>(i) * 3 + static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(i);
  }
  for (int d = 5; d >= 0; --d) {
    const auto& cell = kIdempotentCells[d];
    table[static_cast<std::size_t>(cell[0]) * 3 + static_cast<std::size_t>(cell[1])] =
        static_cast<std::uint8_t>(code % 3);
    code /= 3;
  }
  return Groupoid(3, std::move(table));
}

namespace {

constexpr int kMaxFullCodeSize = 5;  // 5^25 < 2^64

std::uint64_t power_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::uint64_t full_code(const Groupoid& g) {
  if (g.size() > kMaxFullCodeSize) {
    throw std::out_of_range("full_code: carrier too large for a 64-bit code");
  }
  std::uint64_t code = 0;
  for (std::uint8_t v : g.table()) {
    code = code * static_cast<std::uint64_t>(g.size()) + v;
  }
  return code;
}

Groupoid from_full_code(int size, std::uint64_t code) {
  if (size < 1 || size > kMaxFullCodeSize) {
    throw std::out_of_range("from_full_code: size must be in [1, " +
                            std::to_string(kMaxFullCodeSize) + "]");
  }
  const std::size_t cells = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
  if (size > 1 && code >= power_u64(static_cast<std::uint64_t>(size),
                                    static_cast<int>(cells))) {
    throw std::out_of_range("from_full_code: code out of range");
  }
  std::vector<std::uint8_t> table(cells, 0);
  for (std::size_t i = cells; i-- > 0;) {
    table[i] = static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(size));
    code /= static_cast<std::uint64_t>(size);
  }
  return Groupoid(size, std::move(table));
}

Groupoid relabel(const Groupoid& g, std::span<const int> perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel: permutation has wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("relabel: not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::uint8_t> table(g.table().size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) *
                static_cast<std::size_t>(n) +
            static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] =
          static_cast<std::uint8_t>(perm[g(a, b)]);
    }
  }
  return Groupoid(n, std::move(table));
}

Groupoid transpose(const Groupoid& g) {
  const int n = g.size();
  std::vector<std::uint8_t> table(g.table().size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(b)] = g(b, a);
    }
  }
  return Groupoid(n, std::move(table));
}

namespace {

// Lexicographic minimum of the relabeled table over all permutations;
// equals minimizing full_code wherever the latter is defined.
void minimize_over_relabelings(const Groupoid& g, std::vector<std::uint8_t>& best) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Groupoid h = relabel(g, perm);
    if (best.empty() || h.table() < best) best = h.table();
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Groupoid canonical_form(const Groupoid& g, bool include_antiisomorphic) {
  if (g.size() > 8) {
    throw std::out_of_range("canonical_form: carrier too large");
  }
  std::vector<std::uint8_t> best;
  minimize_over_relabelings(g, best);
  if (include_antiisomorphic) {
    minimize_over_relabelings(transpose(g), best);
  }
  return Groupoid(g.size(), std::move(best));
}

std::vector<Groupoid> enumerate_classes(int size) {
  if (size < 1 || size > 3) {
    throw std::out_of_range(
        "enumerate_classes: exhaustive enumeration is limited to size <= 3");
  }
  const std::uint64_t total = power_u64(static_cast<std::uint64_t>(size), size * size);
  std::unordered_set<std::uint64_t> codes;
  for (std::uint64_t v = 0; v < total; ++v) {
    codes.insert(full_code(canonical_form(from_full_code(size, v))));
  }
  std::vector<std::uint64_t> sorted(codes.begin(), codes.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Groupoid> reps;
  reps.reserve(sorted.size());
  for (std::uint64_t code : sorted) reps.push_back(from_full_code(size, code));
  return reps;
}

Subgroupoid subgroupoid_generated(const Groupoid& g, std::span<const int> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("subgroupoid_generated: generating set is empty");
  }
  std::vector<bool> in_closure(static_cast<std::size_t>(g.size()), false);
  std::vector<int> worklist;
  for (int e : generators) {
    if (e < 0 || e >= g.size()) {
      throw std::invalid_argument("subgroupoid_generated: generator out of range");
    }
    if (!in_closure[static_cast<std::size_t>(e)]) {
      in_closure[static_cast<std::size_t>(e)] = true;
      worklist.push_back(e);
    }
  }
  // Fixpoint: close under products in both argument orders.
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < g.size(); ++a) {
      if (!in_closure[static_cast<std::size_t>(a)]) continue;
      for (int b = 0; b < g.size(); ++b) {
        if (!in_closure[static_cast<std::size_t>(b)]) continue;
        int p = g(a, b);
        if (!in_closure[static_cast<std::size_t>(p)]) {
          in_closure[static_cast<std::size_t>(p)] = true;
          grew = true;
        }
      }
    }
  }
  std::vector<int> carrier;
  std::vector<int> index_of(static_cast<std::size_t>(g.size()), -1);
  for (int e = 0; e < g.size(); ++e) {
    if (in_closure[static_cast<std::size_t>(e)]) {
      index_of[static_cast<std::size_t>(e)] = static_cast<int>(carrier.size());
      carrier.push_back(e);
    }
  }
  const int k = static_cast<int>(carrier.size());
  std::vector<std::uint8_t> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
            static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(
          index_of[g(carrier[static_cast<std::size_t>(a)],
                     carrier[static_cast<std::size_t>(b)])]);
    }
  }
  return {Groupoid(k, std::move(table)), std::move(carrier)};
}

}  // namespace aspec
