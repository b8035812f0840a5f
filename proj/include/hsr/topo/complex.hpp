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

#include <map>
#include <string>
#include <vector>

#include "hsr/sign_vector.hpp"

namespace hsr::topo {

/// Sorted, duplicate-free list of vertex ids.
using Face = std::vector<int>;

Face make_face(std::vector<int> vertices);
bool is_subface(const Face& small, const Face& big);
Face face_intersection(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);

/// Finite abstract simplicial complex stored by its maximal faces. Vertex ids
/// are arbitrary integers, so complexes built over a common vertex universe can
/// be compared and intersected directly. The empty complex has no faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Complex generated by `faces`; empty generators are dropped and
  /// non-maximal ones absorbed.
  explicit SimplicialComplex(std::vector<Face> faces);
  static SimplicialComplex simplex(Face vertices);

  /// Sorted lexicographically.
  const std::vector<Face>& maximal_faces() const { return maximal_; }
  bool empty() const { return maximal_.empty(); }
  Face vertices() const;
  /// Largest face size minus one; -1 for the empty complex.
  int dimension() const;
  bool contains(const Face& face) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Every nonempty face, ordered by size and then lexicographically.
  std::vector<Face> all_faces() const;
  std::vector<Face> faces_of_dimension(int d) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Face> maximal_;
};

/// Common faces of two complexes.
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Boundary of the d-dimensional cross-polytope on vertices 2i (+e_i) and 2i+1 (-e_i).
SimplicialComplex cross_polytope_boundary(int d);
/// Boundary of the d-simplex on vertices 0..d.
SimplicialComplex simplex_boundary(int d);

/// Nerve of a family of sets: index sets J whose members share an element.
SimplicialComplex nerve(const std::vector<std::vector<int>>& family);
/// Nerve of the maximal faces of `k` (as vertex sets).
SimplicialComplex nerve_of_maximal_faces(const SimplicialComplex& k);

struct NerveIsoResult {
  bool isomorphic = false;
  std::string witness;  ///< reason when not isomorphic
  /// Sign vector in {+,-}^d assigned to each maximal face, in maximal_faces() order.
  std::vector<SignVector> labels;
};

/// Checks that `labels` (one per maximal face, each in {+,-}^d) is a bijection
/// onto {+,-}^d that carries the nerve of the maximal faces of `k` onto the
/// nerve of the facets of the d-dimensional cross-polytope.
NerveIsoResult cross_polytope_nerve_iso(const SimplicialComplex& k, int d, const std::vector<SignVector>& labels);

/// As above with the labelling derived from `k` itself: the inclusion-maximal
/// vertex stars must form d complementary pairs, which fix the coordinates.
NerveIsoResult cross_polytope_nerve_iso(const SimplicialComplex& k, int d);

}  // namespace hsr::topo
