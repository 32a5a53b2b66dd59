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

#include "aspec/bracketing.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "aspec/catalan.hpp"
#include "aspec/errors.hpp"

namespace aspec {

struct Bracketing::Node {
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  int size;
};

namespace {

const std::shared_ptr<const Bracketing::Node>& leaf_node() {
  static const auto node =
      std::make_shared<const Bracketing::Node>(Bracketing::Node{nullptr, nullptr, 1});
  return node;
}

constexpr int kMaxEnumerationSize = 25;

}  // namespace

Bracketing::Bracketing() : node_(leaf_node()) {}

Bracketing::Bracketing(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Bracketing Bracketing::leaf() { return Bracketing(); }

Bracketing Bracketing::pair(const Bracketing& left, const Bracketing& right) {
  return Bracketing(std::make_shared<const Node>(
      Node{left.node_, right.node_, left.size() + right.size()}));
}

bool Bracketing::is_leaf() const noexcept { return node_->left == nullptr; }

int Bracketing::size() const noexcept { return node_->size; }

Bracketing Bracketing::left() const {
  if (is_leaf()) throw std::logic_error("Bracketing::left: leaf has no factors");
  return Bracketing(node_->left);
}

Bracketing Bracketing::right() const {
  if (is_leaf()) throw std::logic_error("Bracketing::right: leaf has no factors");
  return Bracketing(node_->right);
}

bool operator==(const Bracketing& a, const Bracketing& b) {
  using Node = Bracketing::Node;
  const std::function<bool(const Node*, const Node*)> eq = [&](const Node* x,
                                                               const Node* y) {
    if (x == y) return true;
    if (x->size != y->size) return false;
    if (x->left == nullptr || y->left == nullptr) {
      return x->left == nullptr && y->left == nullptr;
    }
    return eq(x->left.get(), y->left.get()) && eq(x->right.get(), y->right.get());
  };
  return eq(a.node_.get(), b.node_.get());
}

void for_each_bracketing(int n,
                         const std::function<void(const Bracketing&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_bracketing: size must be >= 1");
  if (n == 1) {
    fn(Bracketing::leaf());
    return;
  }
  // Left-factor size ascending, then left order, then right order.
  for (int k = 1; k < n; ++k) {
    for_each_bracketing(k, [&](const Bracketing& left) {
      for_each_bracketing(n - k, [&](const Bracketing& right) {
        fn(Bracketing::pair(left, right));
      });
    });
  }
}

std::vector<Bracketing> enumerate_bracketings(int n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw std::invalid_argument(
        "enumerate_bracketings: size must be in [1, " +
        std::to_string(kMaxEnumerationSize) + "], got " + std::to_string(n));
  }
  // Materialize bottom-up; sublists share subtree structure.
  std::vector<std::vector<Bracketing>> lists(static_cast<std::size_t>(n) + 1);
  lists[1] = {Bracketing::leaf()};
  for (int m = 2; m <= n; ++m) {
    auto& out = lists[static_cast<std::size_t>(m)];
    out.reserve(static_cast<std::size_t>(catalan_u64(m - 1)));
    for (int k = 1; k < m; ++k) {
      for (const Bracketing& left : lists[static_cast<std::size_t>(k)]) {
        for (const Bracketing& right : lists[static_cast<std::size_t>(m - k)]) {
          out.push_back(Bracketing::pair(left, right));
        }
      }
    }
  }
  return std::move(lists[static_cast<std::size_t>(n)]);
}

namespace {

// Recursive descent for: bracketing := 'x' digits? | '(' bracketing bracketing ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Bracketing run() {
    Bracketing result = parse_term();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("trailing characters after complete bracketing", pos_);
    }
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Bracketing parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;  // subscripts are decorative
      }
      return Bracketing::leaf();
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Bracketing left = parse_term();
      Bracketing right = parse_term();
      skip_ws();
      if (pos_ >= text_.size()) {
        throw ParseError("unbalanced parenthesis", open);
      }
      if (text_[pos_] != ')') {
        throw ParseError("expected ')' closing a binary pair", pos_);
      }
      ++pos_;
      return Bracketing::pair(left, right);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Bracketing parse_bracketing(std::string_view text) { return Parser(text).run(); }

namespace {

void print_node(const Bracketing& b, std::string& out, bool subscripts,
                int& next_leaf) {
  if (b.is_leaf()) {
    out.push_back('x');
    if (subscripts) out += std::to_string(next_leaf++);
    return;
  }
  out.push_back('(');
  print_node(b.left(), out, subscripts, next_leaf);
  print_node(b.right(), out, subscripts, next_leaf);
  out.push_back(')');
}

}  // namespace

std::string to_string(const Bracketing& b, bool subscripts) {
  std::string out;
  out.reserve(static_cast<std::size_t>(3 * b.size()));
  int next_leaf = 1;
  print_node(b, out, subscripts, next_leaf);
  return out;
}

namespace {

void collect_words(const Bracketing& b, std::string& prefix,
                   std::vector<std::string>& words) {
  if (b.is_leaf()) {
    words.push_back(prefix);
    return;
  }
  prefix.push_back('0');
  collect_words(b.left(), prefix, words);
  prefix.back() = '1';
  collect_words(b.right(), prefix, words);
  prefix.pop_back();
}

}  // namespace

DepthProfile profile(const Bracketing& b) {
  DepthProfile p;
  std::string prefix;
  collect_words(b, prefix, p.fmpf_words);
  p.depths.reserve(p.fmpf_words.size());
  p.left_depths.reserve(p.fmpf_words.size());
  p.right_depths.reserve(p.fmpf_words.size());
  for (const std::string& w : p.fmpf_words) {
    int ones = static_cast<int>(std::count(w.begin(), w.end(), '1'));
    p.depths.push_back(static_cast<int>(w.size()));
    p.left_depths.push_back(static_cast<int>(w.size()) - ones);
    p.right_depths.push_back(ones);
  }
  return p;
}

namespace {

constexpr int kMaxDepthValue = 120;  // dyadic masses must fit 128 bits

bool depth_values_in_range(std::span<const int> depths) {
  return std::all_of(depths.begin(), depths.end(),
                     [](int d) { return d >= 0 && d <= kMaxDepthValue; });
}

uint128 dyadic_mass(std::span<const int> depths, int max_depth) {
  uint128 sum = 0;
  for (int d : depths) sum += uint128{1} << (max_depth - d);
  return sum;
}

Bracketing rebuild_from_depths(std::span<const int> depths) {
  if (depths.size() == 1) {
    if (depths[0] != 0) {
      throw std::invalid_argument("from_depth_sequence: not a depth sequence");
    }
    return Bracketing::leaf();
  }
  int max_depth = *std::max_element(depths.begin(), depths.end());
  if (max_depth == 0) {
    throw std::invalid_argument("from_depth_sequence: not a depth sequence");
  }
  // Split where the prefix masses sum to exactly one half.
  const uint128 half = uint128{1} << (max_depth - 1);
  uint128 running = 0;
  std::size_t split = 0;
  for (std::size_t i = 0; i + 1 < depths.size(); ++i) {
    running += uint128{1} << (max_depth - depths[i]);
    if (running == half) {
      split = i + 1;
      break;
    }
    if (running > half) break;
  }
  if (split == 0) {
    throw std::invalid_argument("from_depth_sequence: not a depth sequence");
  }
  std::vector<int> left(depths.begin(), depths.begin() + split);
  std::vector<int> right(depths.begin() + split, depths.end());
  for (int& d : left) --d;
  for (int& d : right) --d;
  if (!depth_values_in_range(left) || !depth_values_in_range(right)) {
    throw std::invalid_argument("from_depth_sequence: not a depth sequence");
  }
  return Bracketing::pair(rebuild_from_depths(left), rebuild_from_depths(right));
}

}  // namespace

bool is_depth_sequence(std::span<const int> depths) {
  if (depths.empty() || !depth_values_in_range(depths)) return false;
  int max_depth = *std::max_element(depths.begin(), depths.end());
  if (dyadic_mass(depths, max_depth) != uint128{1} << max_depth) return false;
  try {
    rebuild_from_depths(depths);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Bracketing from_depth_sequence(std::span<const int> depths) {
  if (depths.empty() || !depth_values_in_range(depths)) {
    throw std::invalid_argument("from_depth_sequence: not a depth sequence");
  }
  int max_depth = *std::max_element(depths.begin(), depths.end());
  if (dyadic_mass(depths, max_depth) != uint128{1} << max_depth) {
    throw std::invalid_argument(
        "from_depth_sequence: dyadic masses do not sum to 1");
  }
  return rebuild_from_depths(depths);
}

bool is_zag_sequence(std::span<const int> values) {
  if (values.empty()) return false;
  if (values[0] != 0) return false;
  if (values.size() >= 2 && values[1] != 1) return false;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] < 1 || values[i + 1] > values[i] + 1) return false;
  }
  return true;
}

namespace {

Bracketing rebuild_from_zag(std::span<const int> values) {
  if (values.size() == 1) return Bracketing::leaf();
  if (values.size() == 2) {
    return Bracketing::pair(Bracketing::leaf(), Bracketing::leaf());
  }
  // The left factor spans positions up to (not including) the last 1.
  std::size_t last_one = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 1) last_one = i;
  }
  std::vector<int> left(values.begin(), values.begin() + last_one);
  std::vector<int> right(values.begin() + last_one, values.end());
  for (int& d : right) --d;
  return Bracketing::pair(rebuild_from_zag(left), rebuild_from_zag(right));
}

}  // namespace

Bracketing from_zag_sequence(const ZagSequence& zag) {
  if (!is_zag_sequence(zag.values)) {
    throw std::invalid_argument("from_zag_sequence: not a zag sequence");
  }
  return rebuild_from_zag(zag.values);
}

namespace {

void count_closing_parens(const Bracketing& b, int offset, std::vector<int>& gaps) {
  if (b.is_leaf()) return;
  count_closing_parens(b.left(), offset, gaps);
  count_closing_parens(b.right(), offset + b.left().size(), gaps);
  // This pair closes right after its last leaf.
  gaps[static_cast<std::size_t>(offset + b.size() - 1)] += 1;
}

}  // namespace

std::vector<int> right_paren_positions(const Bracketing& b) {
  std::vector<int> gaps(static_cast<std::size_t>(b.size()), 0);
  count_closing_parens(b, 0, gaps);
  return gaps;
}

namespace {

void collect_eggs(const Bracketing& b, int offset, std::vector<int>& eggs) {
  if (b.is_leaf()) return;
  if (b.left().is_leaf() && b.right().is_leaf()) {
    eggs.push_back(offset + 1);
    return;
  }
  collect_eggs(b.left(), offset, eggs);
  collect_eggs(b.right(), offset + b.left().size(), eggs);
}

}  // namespace

EggSet egg_set(const Bracketing& b) {
  if (b.size() < 2) {
    throw std::invalid_argument("egg_set: bracketing must have size >= 2");
  }
  EggSet eggs;
  collect_eggs(b, 0, eggs.positions);
  return eggs;
}

bool adjacent(const Bracketing& a, const Bracketing& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("adjacent: bracketings must have equal size");
  }
  EggSet ea = egg_set(a);
  EggSet eb = egg_set(b);
  std::size_t i = 0, j = 0;
  while (i < ea.positions.size() && j < eb.positions.size()) {
    if (ea.positions[i] == eb.positions[j]) return true;
    if (ea.positions[i] < eb.positions[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

namespace {

// Returns nullopt when the egg position does not occur in this subtree.
std::optional<Bracketing> collapse_at(const Bracketing& b, int offset, int egg) {
  if (b.is_leaf()) return std::nullopt;
  if (b.left().is_leaf() && b.right().is_leaf()) {
    if (offset + 1 == egg) return Bracketing::leaf();
    return std::nullopt;
  }
  if (auto left = collapse_at(b.left(), offset, egg)) {
    return Bracketing::pair(*left, b.right());
  }
  if (auto right = collapse_at(b.right(), offset + b.left().size(), egg)) {
    return Bracketing::pair(b.left(), *right);
  }
  return std::nullopt;
}

}  // namespace

Bracketing collapse_egg(const Bracketing& b, int egg_position) {
  if (b.size() < 2) {
    throw std::invalid_argument("collapse_egg: bracketing must have size >= 2");
  }
  auto result = collapse_at(b, 0, egg_position);
  if (!result) {
    throw std::invalid_argument("collapse_egg: position " +
                                std::to_string(egg_position) +
                                " is not an egg pair");
  }
  return *result;
}

BracketingPriority priority(const Bracketing& b) {
  if (b.size() < 3) {
    throw std::invalid_argument("priority: bracketing must have size >= 3");
  }
  if (b.left().size() > 1) {
    return {0, std::nullopt};
  }
  int wrappers = 1;
  Bracketing core = b.right();
  while (core.size() > 2 && core.left().is_leaf()) {
    ++wrappers;
    core = core.right();
  }
  return {wrappers, core};
}

}  // namespace aspec
