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

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsr/element_set.hpp"
#include "hsr/report.hpp"

namespace hsr {

/// Malformed or inconsistent user input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered element labels. Load order is the canonical order for every tie-break.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  /// Labels "1".."n".
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_.at(static_cast<std::size_t>(e)); }
  std::optional<int> index_of(const std::string& label) const;
  ElementSet all() const { return ElementSet::full(size()); }

  /// Throws InputError for unknown labels.
  ElementSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;
  /// "{1,2,4}".
  std::string format(ElementSet s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using FlatId = int;

/// Finite family of subsets of a ground set ordered by inclusion, queried as a
/// lattice of flats. Flats are held in canonical order: by rank, then by
/// lex_less on member lists, so FlatId 0 is the bottom of any valid lattice.
///
/// Construction does not validate; verify_geometric() reports every axiom.
/// Queries on a family that fails validation are best-effort. The object is
/// immutable after construction.
class GeometricLattice {
 public:
  GeometricLattice() = default;
  /// Rank of each set is its height in the inclusion order of the family.
  static GeometricLattice from_flats(GroundSet ground, std::vector<ElementSet> flats);

  const GroundSet& ground_set() const { return ground_; }
  std::size_t size() const { return flats_.size(); }
  const std::vector<ElementSet>& flats() const { return flats_; }
  ElementSet flat(FlatId id) const { return flats_.at(static_cast<std::size_t>(id)); }
  std::optional<FlatId> find(ElementSet s) const;

  /// Total rank r = rank of the top.
  int rank() const { return rank_of_.empty() ? 0 : rank_of_.at(static_cast<std::size_t>(top())); }
  int rank(FlatId id) const { return rank_of_.at(static_cast<std::size_t>(id)); }
  int corank(FlatId id) const { return rank() - rank(id); }
  FlatId bottom() const { return 0; }
  FlatId top() const;

  bool leq(FlatId a, FlatId b) const { return flat(a).subset_of(flat(b)); }
  /// Intersection of all members containing `s`; equals the smallest flat above
  /// `s` when the family is meet-closed.
  ElementSet closure_set(ElementSet s) const;
  /// Throws std::logic_error if the closure is not a member (invalid family).
  FlatId closure(ElementSet s) const;
  FlatId meet(FlatId a, FlatId b) const;
  FlatId join(FlatId a, FlatId b) const;
  /// Rank of an arbitrary subset: rank of its closure.
  int subset_rank(ElementSet s) const;

  std::vector<FlatId> atoms() const;
  std::vector<FlatId> coatoms() const;
  /// Coatoms containing `x`; empty for the top.
  std::vector<FlatId> coat_above(FlatId x) const;
  /// Flats covering `x`, in canonical order.
  std::vector<FlatId> upper_covers(FlatId x) const;

  std::string format(FlatId id) const { return ground_.format(flat(id)); }

  /// The same lattice expressed over `order`, a permutation of this ground set.
  GeometricLattice reindexed(const GroundSet& order) const;

 private:
  GroundSet ground_;
  std::vector<ElementSet> flats_;
  std::vector<int> rank_of_;
  std::unordered_map<std::uint64_t, FlatId> index_;
};

/// Every axiom of a geometric lattice of flats, one report entry each.
ValidationReport verify_geometric(const GeometricLattice& lattice);

/// Complete flag F_0 = bottom < F_1 < ... < F_r = top with rank(F_i) = i.
struct Flag {
  std::vector<FlatId> chain;

  int length() const { return static_cast<int>(chain.size()) - 1; }
  FlatId operator[](std::size_t i) const { return chain.at(i); }
  friend bool operator==(const Flag&, const Flag&) = default;
};

/// Validates a chain of sets as a complete flag. Throws InputError naming the
/// first violation ("incomplete flag: ...").
Flag make_flag(const GeometricLattice& lattice, const std::vector<ElementSet>& chain);

/// Greedy flag: extend by the lex-smallest cover at every step.
Flag default_flag(const GeometricLattice& lattice);

/// Every complete flag, in lexicographic order of their FlatId chains.
std::vector<Flag> all_flags(const GeometricLattice& lattice);

struct FlagRestriction {
  std::vector<FlatId> upper;  ///< maximal chain in [x, top]
  std::vector<FlatId> lower;  ///< chain in [bottom, x]; meets can skip ranks, so not always maximal
};

/// Deduplicated {x v F_i} and {x ^ F_i}.
FlagRestriction flag_restrict(const GeometricLattice& lattice, const Flag& flag, FlatId x);

}  // namespace hsr
