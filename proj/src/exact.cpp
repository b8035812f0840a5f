// Copyright 2026 The Authors.
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

#include "hsr/exact.hpp"

#include <stdexcept>
#include <utility>

namespace hsr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  }
  return Integer(std::string(s));
}

// Column scaled by the lcm of its denominators.
std::vector<Integer> clear_denominators(const std::vector<Rational>& column) {
  Integer scale = 1;
  for (const auto& q : column) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
  std::vector<Integer> out;
  out.reserve(column.size());
  for (const auto& q : column) {
    out.push_back(boost::multiprecision::numerator(q) * (scale / boost::multiprecision::denominator(q)));
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int rank_over_rationals(const RationalColumns& columns, ElementSet selection) {
  const auto chosen = selection.members();
  if (chosen.empty()) return 0;
  const std::size_t rows = columns[static_cast<std::size_t>(chosen.front())].size();
  // m[i][j]: row i (coordinate), column j (selected element).
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(chosen.size()));
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    const auto col = clear_denominators(columns[static_cast<std::size_t>(chosen[j])]);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
  }

  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < chosen.size() && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < chosen.size(); ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / previous;
      }
      m[i][c] = 0;
    }
    previous = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_mod_prime(const ModularColumns& columns, ElementSet selection, std::int64_t p) {
  const auto chosen = selection.members();
  if (chosen.empty()) return 0;
  const std::size_t rows = columns[static_cast<std::size_t>(chosen.front())].size();
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(chosen.size()));
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = columns[static_cast<std::size_t>(chosen[j])][i] % p;
  }
  auto inverse = [p](std::int64_t a) {
    // Fermat; p is prime and small enough that products fit in 128 bits.
    std::int64_t result = 1;
    std::int64_t base = a % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % p);
      base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p);
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < chosen.size() && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = inverse(m[rank][c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const auto factor = static_cast<std::int64_t>((static_cast<__int128>(m[i][c]) * inv) % p);
      for (std::size_t j = c; j < chosen.size(); ++j) {
        const auto sub = static_cast<std::int64_t>((static_cast<__int128>(factor) * m[rank][j]) % p);
        m[i][j] = ((m[i][j] - sub) % p + p) % p;
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<Integer> hyperplane_normal(const RationalColumns& columns, ElementSet selection, int dimension) {
  const auto chosen = selection.members();
  const auto d = static_cast<std::size_t>(dimension);
  // Rows are the selected vectors; the normal spans the null space.
  std::vector<std::vector<Rational>> m;
  for (int e : chosen) m.push_back(columns[static_cast<std::size_t>(e)]);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < d && row < m.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < d; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  if (pivot_cols.size() + 1 != d) {
    throw std::invalid_argument("selected vectors do not span a hyperplane");
  }
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivot_cols.size() && pivot_cols[k] == free_col; ++k) ++free_col;

  std::vector<Rational> x(d, Rational(0));
  x[free_col] = 1;
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = -m[k][free_col];

  std::vector<Integer> out = clear_denominators(x);
  Integer g = 0;
  for (const auto& v : out) g = boost::multiprecision::gcd(g, v);
  for (auto& v : out) v /= g;
  for (const auto& v : out) {
    if (v == 0) continue;
    if (v < 0) {
      for (auto& w : out) w = -w;
    }
    break;
  }
  return out;
}

int dot_sign(const std::vector<Integer>& x, const std::vector<Rational>& v) {
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += Rational(x[i]) * v[i];
  return sum > 0 ? 1 : (sum < 0 ? -1 : 0);
}

}  // namespace hsr
