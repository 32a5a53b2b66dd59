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
// Fully parenthesized products of one symbol ("bracketings"), i.e. full
// binary trees identified by their leaf count, together with the classic
// bijections onto depth sequences, zag sequences, maximal prefix-free word
// sets and right-parenthesis profiles.

#ifndef ASPEC_BRACKETING_HPP_
#define ASPEC_BRACKETING_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aspec {

/// An immutable full binary tree. Leaves carry no payload; a node is either
/// the single symbol or an ordered pair of bracketings. Copies share
/// structure and are cheap; all operations on Bracketing are pure.
class Bracketing {
 public:
  /// The size-1 bracketing "x".
  Bracketing();

  static Bracketing leaf();
  static Bracketing pair(const Bracketing& left, const Bracketing& right);

  bool is_leaf() const noexcept;
  /// Number of leaves.
  int size() const noexcept;

  /// Factors of a non-leaf; throw std::logic_error on a leaf.
  Bracketing left() const;
  Bracketing right() const;

  /// Structural equality.
  friend bool operator==(const Bracketing& a, const Bracketing& b);
  friend bool operator!=(const Bracketing& a, const Bracketing& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit Bracketing(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

/// The four equivalent leaf-indexed descriptions of one bracketing.
/// `fmpf_words` is the maximal prefix-free set over {0,1}, listed in leaf
/// order (which coincides with lexicographic order); word i has length
/// depths[i], zero-count left_depths[i] and one-count right_depths[i].
struct DepthProfile {
  std::vector<int> depths;
  std::vector<int> left_depths;
  std::vector<int> right_depths;
  std::vector<std::string> fmpf_words;
};

/// A sequence d with d_1 = 0, d_2 = 1 and 1 <= d_{i+1} <= d_i + 1; exactly
/// the right depth sequences of bracketings.
struct ZagSequence {
  std::vector<int> values;
};

/// 1-based positions i such that leaves i and i+1 are siblings, i.e. the
/// egg pairs of the maximal nests. Positions are strictly increasing and
/// never consecutive.
struct EggSet {
  std::vector<int> positions;

  friend bool operator==(const EggSet&, const EggSet&) = default;
};

struct BracketingPriority {
  int value = 0;
  std::optional<Bracketing> core;  // absent exactly when value == 0
};

/// All bracketings of size n, each exactly once, ordered by left-factor
/// size ascending, then recursively. The list length is catalan(n - 1).
/// Guarded at n <= 25; use for_each_bracketing to stream larger sizes.
std::vector<Bracketing> enumerate_bracketings(int n);

/// Streaming variant of enumerate_bracketings with identical order and no
/// materialized list.
void for_each_bracketing(int n, const std::function<void(const Bracketing&)>& fn);

/// Parses the textual form: "x" (optionally subscripted, e.g. "x12"), or
/// "(PQ)" with the outermost pair mandatory for sizes > 1. Whitespace is
/// ignored. Throws ParseError with a byte offset otherwise.
Bracketing parse_bracketing(std::string_view text);

/// Canonical text; with subscripts, leaves print as x1..xn left to right.
std::string to_string(const Bracketing& b, bool subscripts = false);

DepthProfile profile(const Bracketing& b);

bool is_depth_sequence(std::span<const int> depths);

/// Inverse of the depth-sequence map: the unique bracketing whose depth
/// sequence equals `depths`, found by splitting at the prefix of dyadic
/// mass 1/2. Throws std::invalid_argument if no bracketing matches.
Bracketing from_depth_sequence(std::span<const int> depths);

bool is_zag_sequence(std::span<const int> values);

/// Inverse of the right-depth map; the left factor ends just before the
/// last 1 of the sequence. Throws std::invalid_argument on non-zag input.
Bracketing from_zag_sequence(const ZagSequence& zag);

/// For each gap i (immediately after leaf i, 1-based), the number of right
/// parentheses printed there; injective over bracketings of a fixed size.
std::vector<int> right_paren_positions(const Bracketing& b);

/// Egg positions of the maximal nests; requires size >= 2.
EggSet egg_set(const Bracketing& b);

/// Whether two same-size bracketings share an egg pair.
bool adjacent(const Bracketing& a, const Bracketing& b);

/// Replaces the egg pair at position i (which must be in egg_set(b)) by a
/// single leaf, yielding the quotient of size n - 1.
Bracketing collapse_egg(const Bracketing& b, int egg_position);

/// Number of leading one-leaf wrappers x1(x2(...(xk(R))...)) down to a core
/// R that either starts with a non-trivial left factor or has size 2.
/// Requires size >= 3; a bracketing whose left factor is non-trivial has
/// priority 0 and no core.
BracketingPriority priority(const Bracketing& b);

}  // namespace aspec

#endif  // ASPEC_BRACKETING_HPP_
