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

#include "aspec/catalan.hpp"

#include <array>
#include <stdexcept>

namespace aspec {

namespace {

constexpr int kMaxCatalan = 60;

// binom(2n, n) via multiply-then-divide; every prefix product is itself a
// binomial coefficient, so the divisions are exact and intermediates stay
// within 128 bits for n <= 60.
uint128 central_binomial(int n) {
  uint128 result = 1;
  for (int i = 1; i <= n; ++i) {
    result = result * static_cast<uint128>(n + i) / static_cast<uint128>(i);
  }
  return result;
}

const std::array<uint128, kMaxCatalan + 1>& catalan_table() {
  static const auto table = [] {
    std::array<uint128, kMaxCatalan + 1> t{};
    t[0] = 1;
    for (int n = 1; n <= kMaxCatalan; ++n) {
      uint128 sum = 0;
      for (int k = 0; k < n; ++k) {
        sum += t[k] * t[n - 1 - k];
      }
      t[n] = sum;
      if (sum != central_binomial(n) / static_cast<uint128>(n + 1)) {
        throw std::logic_error("catalan: recurrence and closed form disagree");
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

uint128 catalan(int n) {
  if (n < 0 || n > kMaxCatalan) {
    throw std::out_of_range("catalan: n must be in [0, " +
                            std::to_string(kMaxCatalan) + "], got " +
                            std::to_string(n));
  }
  return catalan_table()[static_cast<std::size_t>(n)];
}

std::uint64_t catalan_u64(int n) {
  uint128 value = catalan(n);
  if (value > static_cast<uint128>(~std::uint64_t{0})) {
    throw std::overflow_error("catalan_u64: C_" + std::to_string(n) +
                              " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t fibonacci(int n) {
  if (n < 1 || n > 92) {
    throw std::out_of_range("fibonacci: n must be in [1, 92]");
  }
  std::uint64_t a = 1, b = 1;  // F_1, F_2
  for (int i = 3; i <= n; ++i) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return b;
}

std::string to_string_u128(uint128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

}  // namespace aspec
