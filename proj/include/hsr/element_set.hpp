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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hsr {

/// Subset of a ground set of at most 64 elements, addressed by position.
class ElementSet {
 public:
  static constexpr int kMaxElements = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
  }
  static ElementSet of(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
  }
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  /// Positions in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists; the canonical tie-break everywhere.
inline bool lex_less(ElementSet a, ElementSet b) {
  if (a == b) return false;
  // First differing position decides; the set holding it is smaller unless the
  // other set has run out of members before that position.
  const std::uint64_t diff = a.bits() ^ b.bits();
  const int first = std::countr_zero(diff);
  const std::uint64_t below = (first == 0) ? 0 : (std::uint64_t{1} << first) - 1;
  const bool a_has = a.contains(first);
  // If the side lacking `first` has no member above it, it is a proper prefix.
  const ElementSet other = a_has ? b : a;
  const bool other_continues = (other.bits() & ~below & ~(std::uint64_t{1} << first)) != 0;
  return a_has ? other_continues : !other_continues;
}

}  // namespace hsr
