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
// Ready-made Cayley tables: the seven two-element operations, the
// three-element examples quoted by their Siena catalog numbers, and the
// parametric families (linear forms, successor, cross product, dihedral
// commutators, bounded min-decrement).

#ifndef ASPEC_BUILDERS_HPP_
#define ASPEC_BUILDERS_HPP_

#include <string>

#include "aspec/groupoid.hpp"

namespace aspec {

/// Two-element operations, numbered 1..7:
///   1 constant 1        2 first projection   3 min(x, y)
///   4 x + y mod 2       5 x + 1 mod 2        6 Sheffer stroke
///   7 implication
Groupoid boolean_op(int id);

/// 0 * 1 = 1 and x * y = 0 otherwise; isomorphic to implication.
Groupoid star_op();

/// Vector cross product folded onto {0, u, v, w}: unit vectors identified
/// with their negatives, encoded 0 -> 0, u -> 1, v -> 2, w -> 3.
Groupoid cross_product_c();

/// i o j = i + 1 mod n when i = j, and 0 otherwise. n = 2 is the Sheffer
/// stroke; n = 3 is table 2407.
Groupoid primal_family(int n);

/// Table 3242 (= x + 1 mod 3) with the single cell 1 o 2 rewritten to 0.
Groupoid op_3233();

/// The displayed three-element tables quoted by Siena catalog number;
/// supported codes: 10, 79, 82, 405, 1066, 2407, 3233, 3242.
Groupoid siena_example(int code);

/// Commutator of the dihedral group of degree m on {0..2m-1}; elements
/// 0..m-1 are the rotations, m..2m-1 the reflections, and every commutator
/// lands in the rotations.
Groupoid dihedral_commutator(int m);

/// a o b = min(a, b) - 1 when both are positive, else 0; restricted to the
/// carrier {0..n-1}, which is closed under the operation.
Groupoid min_decrement(int n);

/// a o b = p a + q b mod g.
Groupoid linear_mod(int g, int p, int q);

/// a o b = a + 1 mod g (ignores the right argument).
Groupoid successor_mod(int g);

/// Parses a groupoid description:
///   id:<0..728>      idempotent three-element code
///   fc<g>:<code>     full table code in base g (g <= 5)
///   bool:<1..7>      two-element operation
///   sheffer | implication | star | cross
///   xplus1:<g>       successor mod g
///   linear:<g>:<p>:<q>
///   primal:<n> | dihedral:<m> | mindec:<n>
///   op10 | op79 | op82 | op405 | op1066 | op2407 | op3233 | op3242
///   <path>           JSON file {"size": g, "table": [[...], ...]}
/// Throws std::invalid_argument (or ParseError for malformed JSON).
Groupoid parse_groupoid_spec(const std::string& spec);

}  // namespace aspec

#endif  // ASPEC_BUILDERS_HPP_
