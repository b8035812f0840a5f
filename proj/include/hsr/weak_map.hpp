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
#include <optional>
#include <string>
#include <vector>

#include "hsr/lattice.hpp"
#include "hsr/om.hpp"
#include "hsr/sign_vector.hpp"
#include "hsr/topo/complex.hpp"

namespace hsr {

/// Subset whose rank goes up from source to target.
struct RankWitness {
  ElementSet subset;
  int source_rank = 0;
  int target_rank = 0;
};

/// Outcome of a weak-map test. `verdict` is true iff there are no witnesses.
/// Subsets and covectors are expressed over `ground`, the source ground set.
struct WeakMapReport {
  bool verdict = false;
  GroundSet ground;
  std::vector<RankWitness> rank_witnesses;
  /// Covectors of the target covered by no covector of the source.
  std::vector<SignVector> covector_witnesses;
  /// Covector case only: whether the underlying matroids also form a weak map.
  std::optional<bool> underlying_weak_map;
};

/// rank_source(A) >= rank_target(A) for every subset A. The target may list
/// the same labels in another order; differing label sets throw InputError.
/// Throws std::length_error above 24 elements.
WeakMapReport is_weak_map_matroid(const GeometricLattice& source, const GeometricLattice& target);

/// Every covector of the target lies below some covector of the source.
WeakMapReport is_weak_map_covectors(const CovectorSet& source, const CovectorSet& target);

enum class SearchStatus {
  Found,
  None,
  /// The flag is complete in the source but not in the target.
  IncompleteFlag,
  CapExceeded,
};

std::string to_string(SearchStatus status);

/// Source face with no admissible image, with the candidate images of each vertex.
struct Obstruction {
  topo::Face face;
  std::vector<std::vector<int>> candidates;
  std::string reason;
};

struct SearchOptions {
  std::int64_t max_assignments = 10'000'000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::None;
  /// Target vertex id for each source vertex id, when found.
  std::optional<std::vector<int>> map;
  /// Lexicographically first minimal obstruction.
  std::optional<Obstruction> obstruction;
  /// Every obstruction of the smallest size that has any, in lex order. The
  /// scan gets its own budget of max_assignments.
  std::vector<Obstruction> minimal_obstructions;
  /// Vertex assignments made by the backtracking search.
  std::int64_t assignments = 0;
  std::string detail;
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
};

/// Simplicial maps S_0(F, source) -> S_0(F, target) sending each S_G into
/// S_{cl(G)} of the target. A vertex G_e may go to any H_e with cl_target(G)
/// contained in the coatom H; signs are kept. Backtracks over source vertices
/// in id order, rejecting as soon as an assigned part of a maximal face has an
/// image outside the target. `chain` lists the flag as element sets over the
/// source ground set; an incomplete chain in the source throws InputError.
SearchResult poset_map_search(const GeometricLattice& source, const GeometricLattice& target,
                              const std::vector<ElementSet>& chain, SearchOptions options = {});

}  // namespace hsr
