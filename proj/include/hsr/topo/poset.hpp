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
#include <functional>
#include <string>
#include <vector>

#include "hsr/topo/complex.hpp"

namespace hsr::topo {

/// Finite poset on elements 0..n-1 with a dense order relation.
class Poset {
 public:
  Poset() = default;
  /// `leq(a, b)` must be a partial order; throws std::invalid_argument if it
  /// is not reflexive, antisymmetric and transitive.
  Poset(int size, const std::function<bool(int, int)>& leq, std::vector<std::string> labels = {});

  int size() const { return size_; }
  bool leq(int a, int b) const {
    return (rows_[row_start(a) + static_cast<std::size_t>(b) / 64] >> (static_cast<std::size_t>(b) % 64)) & 1U;
  }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Pairs (a, b) with a covered by b.
  std::vector<std::pair<int, int>> covers() const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Elements >= x.
  std::vector<int> upper_set(int x) const;

  /// Sub-poset on `elements` (renumbered in the given order).
  Poset induced(const std::vector<int>& elements) const;

 private:
  std::size_t row_start(int a) const { return static_cast<std::size_t>(a) * words_; }

  int size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;  // bitset of the up-set of each element
  std::vector<std::string> labels_;
};

/// Chains of P as a simplicial complex on vertices 0..n-1.
SimplicialComplex order_complex(const Poset& poset);

struct FacePoset {
  std::vector<Face> faces;  ///< as in SimplicialComplex::all_faces()
  Poset poset;              ///< inclusion order on `faces`
};

/// Nonempty faces of K ordered by inclusion.
FacePoset face_poset(const SimplicialComplex& k);

}  // namespace hsr::topo
