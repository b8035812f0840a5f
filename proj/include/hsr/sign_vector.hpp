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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsr {

enum class Sign : std::int8_t { Zero = 0, Plus = 1, Minus = -1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline char to_char(Sign s) { return s == Sign::Plus ? '+' : (s == Sign::Minus ? '-' : '0'); }

/// Element of {+,-,0}^I, ordered componentwise with 0 below both + and -.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t n) : entries_(n, Sign::Zero) {}
  explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {}
  /// "+-0+" (also accepts 'p'/'m'). Throws std::invalid_argument otherwise.
  static SignVector parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  Sign operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, Sign s) { entries_[i] = s; }
  const std::vector<Sign>& entries() const { return entries_; }

  bool is_zero() const;
  /// Indices with nonzero entries.
  std::vector<int> support() const;
  std::vector<int> zero_set() const;
  /// Componentwise order: each entry is 0 or equals the other's.
  bool leq(const SignVector& other) const;
  SignVector operator-() const;

  /// Composition: this(e) where nonzero, else other(e).
  SignVector compose(const SignVector& other) const;
  /// Greatest lower bound: entries kept where equal, 0 elsewhere.
  SignVector meet(const SignVector& other) const;
  /// Copy with the listed positions set to 0.
  SignVector restrict_zero(const std::vector<int>& positions) const;
  /// Copy with one more coordinate of value `s` appended.
  SignVector extend(Sign s) const;
  /// Nonzero entries only, in order.
  SignVector compressed() const;

  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  /// Canonical order: by support size, then entrywise with 0 < + < -.
  friend bool operator<(const SignVector& a, const SignVector& b);

 private:
  std::vector<Sign> entries_;
};

}  // namespace hsr
