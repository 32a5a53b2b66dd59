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

#ifndef ASPEC_CATALAN_HPP_
#define ASPEC_CATALAN_HPP_

#include <cstdint>
#include <string>

namespace aspec {

using uint128 = unsigned __int128;

/// Catalan number C_n for 0 <= n <= 60 (C_60 still fits 128 bits).
/// Values are produced by the convolution recurrence; the closed form
/// binom(2n, n) / (n + 1) is computed as well and the two are required
/// to agree. Throws std::out_of_range beyond the guard.
uint128 catalan(int n);

/// C_n narrowed to 64 bits; throws std::overflow_error if it does not fit
/// (first failure at n = 36).
std::uint64_t catalan_u64(int n);

/// Fibonacci number with F_1 = F_2 = 1; n in [1, 92].
std::uint64_t fibonacci(int n);

/// Decimal rendering for 128-bit values (iostreams cannot print them).
std::string to_string_u128(uint128 value);

}  // namespace aspec

#endif  // ASPEC_CATALAN_HPP_
