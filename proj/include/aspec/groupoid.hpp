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
//
// Finite groupoids as Cayley tables over {0..g-1}, their integer codes,
// relabelings and canonical forms, and exhaustive enumeration of
// isomorphism classes for carriers of up to three elements.

#ifndef ASPEC_GROUPOID_HPP_
#define ASPEC_GROUPOID_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace aspec {

/// A finite set {0..g-1} with one binary operation, stored row-major with
/// the row indexed by the left operand: table[a * g + b] = a o b.
class Groupoid {
 public:
  Groupoid(int size, std::vector<std::uint8_t> table);

  /// Convenience for literal tables; rows are left operands.
  static Groupoid from_rows(std::initializer_list<std::initializer_list<int>> rows);

  int size() const noexcept { return size_; }

  /// Range-checked application.
  std::uint8_t eval(int a, int b) const;

  /// Unchecked application (hot paths).
  std::uint8_t operator()(int a, int b) const noexcept {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
                  static_cast<std::size_t>(b)];
  }

  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  friend bool operator==(const Groupoid&, const Groupoid&) = default;

 private:
  int size_;
  std::vector<std::uint8_t> table_;
};

/// Direct check of (a o b) o c = a o (b o c) over all g^3 triples.
bool is_associative(const Groupoid& g);

/// Base-3 code of an idempotent three-element operation, digits
/// (0o1, 0o2, 1o0, 1o2, 2o0, 2o1) from most to least significant.
int encode_idempotent(const Groupoid& g);
Groupoid decode_idempotent(int code);

/// Row-major base-g reading of the table, most significant digit at
/// position (0,0). Guarded at size <= 5 so the code fits 64 bits.
std::uint64_t full_code(const Groupoid& g);
Groupoid from_full_code(int size, std::uint64_t code);

/// The isomorphic copy along the permutation: H[p(a)][p(b)] = p(G[a][b]).
Groupoid relabel(const Groupoid& g, std::span<const int> perm);

/// The antiisomorphic (opposite) groupoid H[a][b] = G[b][a].
Groupoid transpose(const Groupoid& g);

/// The relabeling minimizing full_code over all permutations of the
/// carrier; with include_antiisomorphic, relabelings of the transpose
/// compete as well.
Groupoid canonical_form(const Groupoid& g, bool include_antiisomorphic = false);

/// Canonical representatives of all isomorphism classes on a carrier of
/// size 1, 2 or 3, sorted by full_code. Larger carriers are refused.
std::vector<Groupoid> enumerate_classes(int size);

/// Closure of a generating set, relabeled onto {0..k-1} in carrier order;
/// carrier[i] is the original element represented by i.
struct Subgroupoid {
  Groupoid groupoid;
  std::vector<int> carrier;
};
Subgroupoid subgroupoid_generated(const Groupoid& g, std::span<const int> generators);

}  // namespace aspec

#endif  // ASPEC_GROUPOID_HPP_
