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

#include "aspec/builders.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "aspec/json_io.hpp"

#include <json.hpp>

namespace aspec {

Groupoid boolean_op(int id) {
  switch (id) {
    case 1: return Groupoid::from_rows({{1, 1}, {1, 1}});
    case 2: return Groupoid::from_rows({{0, 0}, {1, 1}});
    case 3: return Groupoid::from_rows({{0, 0}, {0, 1}});
    case 4: return Groupoid::from_rows({{0, 1}, {1, 0}});
    case 5: return Groupoid::from_rows({{1, 1}, {0, 0}});
    case 6: return Groupoid::from_rows({{1, 0}, {0, 0}});
    case 7: return Groupoid::from_rows({{1, 1}, {0, 1}});
    default:
      throw std::invalid_argument("boolean_op: id must be in [1, 7]");
  }
}

Groupoid star_op() { return Groupoid::from_rows({{0, 1}, {0, 0}}); }

Groupoid cross_product_c() {
  return Groupoid::from_rows({{0, 0, 0, 0},
                              {0, 0, 3, 2},
                              {0, 3, 0, 1},
                              {0, 2, 1, 0}});
}

Groupoid primal_family(int n) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("primal_family: carrier size must be in [1, 16]");
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
  }
  return Groupoid(n, std::move(table));
}

Groupoid op_3233() {
  return Groupoid::from_rows({{1, 1, 1}, {2, 2, 0}, {0, 0, 0}});
}

Groupoid siena_example(int code) {
  switch (code) {
    case 10:   return Groupoid::from_rows({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
    case 79:   return Groupoid::from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    case 82:   return Groupoid::from_rows({{0, 0, 0}, {0, 1, 0}, {0, 1, 2}});
    case 405:  return Groupoid::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
    case 1066: return Groupoid::from_rows({{0, 0, 2}, {0, 0, 2}, {2, 2, 1}});
    case 2407: return primal_family(3);
    case 3233: return op_3233();
    case 3242: return successor_mod(3);
    default:
      throw std::invalid_argument("siena_example: no table recorded for code " +
                                  std::to_string(code));
  }
}

Groupoid dihedral_commutator(int m) {
  if (m < 1 || m > 64) {
    throw std::invalid_argument("dihedral_commutator: degree must be in [1, 64]");
  }
  const int n = 2 * m;
  auto rot = [m](int v) { return static_cast<std::uint8_t>(((v % m) + m) % m); };
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::uint8_t value;
      if (a < m && b < m) {
        value = 0;                      // [rot, rot]
      } else if (a < m) {
        value = rot(-2 * a);            // [rot, refl]
      } else if (b < m) {
        value = rot(2 * b);             // [refl, rot]
      } else {
        value = rot(2 * ((a - m) - (b - m)));
      }
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(b)] = value;
    }
  }
  return Groupoid(n, std::move(table));
}

Groupoid min_decrement(int n) {
  if (n < 1 || n > 255) {
    throw std::invalid_argument("min_decrement: carrier size must be in [1, 255]");
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(b)] =
          (a > 0 && b > 0) ? static_cast<std::uint8_t>(std::min(a, b) - 1) : 0;
    }
  }
  return Groupoid(n, std::move(table));
}

Groupoid linear_mod(int g, int p, int q) {
  if (g < 1 || g > 255) {
    throw std::invalid_argument("linear_mod: modulus must be in [1, 255]");
  }
  auto reduce = [g](int v) { return ((v % g) + g) % g; };
  std::vector<std::uint8_t> table(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b) {
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(g) +
            static_cast<std::size_t>(b)] =
          static_cast<std::uint8_t>(reduce(p * a + q * b));
    }
  }
  return Groupoid(g, std::move(table));
}

Groupoid successor_mod(int g) {
  if (g < 1 || g > 255) {
    throw std::invalid_argument("successor_mod: modulus must be in [1, 255]");
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b) {
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(g) +
            static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((a + 1) % g);
    }
  }
  return Groupoid(g, std::move(table));
}

namespace {

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(what + ": expected an integer, got '" +
                                std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(what + ": expected an integer, got '" +
                                std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Groupoid load_groupoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("unknown groupoid spec or unreadable file: '" +
                                path + "'");
  }
  nlohmann::json j;
  in >> j;
  return groupoid_from_json(j);
}

}  // namespace

Groupoid parse_groupoid_spec(const std::string& spec) {
  if (spec == "sheffer") return boolean_op(6);
  if (spec == "implication") return boolean_op(7);
  if (spec == "star") return star_op();
  if (spec == "cross") return cross_product_c();
  if (spec == "op3233") return op_3233();
  if (spec.size() > 2 && spec.compare(0, 2, "op") == 0 &&
      spec.find(':') == std::string::npos && spec.find('/') == std::string::npos) {
    return siena_example(parse_int(std::string_view(spec).substr(2), "groupoid spec"));
  }

  auto parts = split(spec, ':');
  const std::string_view head = parts[0];
  if (parts.size() == 2) {
    if (head == "id") return decode_idempotent(parse_int(parts[1], "id code"));
    if (head == "bool") return boolean_op(parse_int(parts[1], "bool id"));
    if (head == "xplus1") return successor_mod(parse_int(parts[1], "xplus1 modulus"));
    if (head == "primal") return primal_family(parse_int(parts[1], "primal size"));
    if (head == "dihedral") {
      return dihedral_commutator(parse_int(parts[1], "dihedral degree"));
    }
    if (head == "mindec") return min_decrement(parse_int(parts[1], "mindec size"));
    if (head.size() == 3 && head.compare(0, 2, "fc") == 0) {
      int g = head[2] - '0';
      return from_full_code(g, parse_u64(parts[1], "full code"));
    }
  }
  if (parts.size() == 4 && head == "linear") {
    return linear_mod(parse_int(parts[1], "linear modulus"),
                      parse_int(parts[2], "linear coefficient p"),
                      parse_int(parts[3], "linear coefficient q"));
  }
  if (parts.size() == 1) {
    return load_groupoid_file(spec);
  }
  throw std::invalid_argument("unknown groupoid spec: '" + spec + "'");
}

}  // namespace aspec
