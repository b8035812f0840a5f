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
#include <string>
#include <vector>

#include "hsr/exact.hpp"
#include "hsr/lattice.hpp"
#include "hsr/report.hpp"
#include "hsr/sign_vector.hpp"
#include "hsr/sphere_rep.hpp"
#include "hsr/topo/maps.hpp"
#include "hsr/topo/poset.hpp"

namespace hsr {

/// One exact rational vector per ground-set element, all of length `dimension`.
struct VectorConfig {
  GroundSet ground;
  int dimension = 0;
  RationalColumns columns;
};

/// Cocircuits +-(sign(x . v_e))_e, one pair per hyperplane flat, with x a
/// normal of the hyperplane. Sorted canonically. Throws InputError when the
/// columns do not span Q^dimension.
std::vector<SignVector> cocircuits_from_vectors(const VectorConfig& config);

/// Covectors of a realizable oriented matroid, held in canonical order so the
/// zero vector comes first.
class CovectorSet {
 public:
  CovectorSet() = default;
  /// Smallest composition-closed set containing 0 and `cocircuits`.
  /// Throws std::invalid_argument if the input is not closed under negation
  /// or the vectors differ in length.
  static CovectorSet span(GroundSet ground, const std::vector<SignVector>& cocircuits);

  const GroundSet& ground_set() const { return ground_; }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  std::size_t size() const { return covectors_.size(); }
  const SignVector& operator[](std::size_t i) const { return covectors_.at(i); }
  std::optional<int> index_of(const SignVector& x) const;
  /// Minimal nonzero covectors, recomputed from the set.
  std::vector<SignVector> cocircuits() const;

  bool closed_under_negation() const;
  bool closed_under_composition() const;

  /// Componentwise order on the listed covector indices.
  topo::Poset poset(const std::vector<int>& members) const;

 private:
  GroundSet ground_;
  std::vector<SignVector> covectors_;
};

CovectorSet covectors_from_vectors(const VectorConfig& config);

/// Lattice of zero sets of the covectors.
GeometricLattice underlying_matroid(const CovectorSet& covectors);

/// Indices of covectors vanishing on G. Throws std::invalid_argument when G
/// is not the zero set of some covector.
std::vector<int> covector_flat(const CovectorSet& covectors, ElementSet g);

/// Lex-smallest element of F_{i+1} minus F_i for i = 0..r-1.
std::vector<int> default_pivots(const GeometricLattice& lattice, const Flag& flag);

/// Covectors, a flag of their underlying matroid, and pivot elements e_i in
/// F_{i+1} minus F_i (i = 0..r-1), with the sphere complexes of that flag.
class Embedding {
 public:
  /// Throws InputError when a pivot is outside its difference set.
  Embedding(CovectorSet covectors, Flag flag, std::vector<int> pivots);
  Embedding(CovectorSet covectors, Flag flag);

  const CovectorSet& covectors() const { return covectors_; }
  const SphereRepresentation& rep() const { return rep_; }
  const GeometricLattice& lattice() const { return rep_.lattice(); }
  const std::vector<int>& pivots() const { return pivots_; }

  /// First pivot position where X is nonzero. Throws std::invalid_argument for X = 0.
  int first_pivot(const SignVector& x) const;
  /// A cocircuit goes to one signed vertex of its zero set; a general covector
  /// to the union of the images of the cocircuits below it. Throws
  /// std::invalid_argument for X = 0.
  topo::Face image_face(const SignVector& x) const;

  /// Covector indices of M_G minus the zero vector.
  std::vector<int> flat_members(FlatId g) const;
  /// Order complex of M_G minus 0, on covector indices.
  topo::SimplicialComplex order_complex_of(FlatId g) const;

 private:
  CovectorSet covectors_;
  SphereRepresentation rep_;
  std::vector<int> pivots_;
  std::vector<SignVector> cocircuits_;
};

/// coat(F_i) equals the zero sets of cocircuits containing e_0..e_{i-1}, for every i.
ValidationReport pivots_check(const Embedding& embedding);

/// Well-definedness, injectivity, order preservation, M_G into S_G,
/// Z2-equivariance and matching homology of M_G and S_G for every flat G.
ValidationReport verify_embedding(const Embedding& embedding);

/// Which covectors form the source cover member for a sign choice v.
enum class CoverReading {
  /// X(e_{i_X}) = v_{i_X} at the first pivot where X is nonzero.
  FirstPivot,
  /// image_face(X) lies in the simplex face_of_signs(v, G).
  ImagePreimage,
};

struct EmbeddingCovers {
  std::vector<SignVector> sign_choices;  ///< v in {+,-}^r, one per member
  topo::CoverFamily covectors;           ///< subcomplexes of the order complex of M_G minus 0
  topo::CoverFamily sphere;              ///< simplices on sigma(v, G) inside S_G
};

EmbeddingCovers build_covers(const Embedding& embedding, FlatId g, CoverReading reading = CoverReading::FirstPivot);

/// carrier_check of image_face against build_covers(g).
ValidationReport embedding_carrier_check(const Embedding& embedding, FlatId g,
                                         CoverReading reading = CoverReading::FirstPivot,
                                         topo::CarrierOptions options = {});

struct DeletionMap {
  topo::Poset source;    ///< A_v(G)
  topo::Poset target;    ///< A_v(G minus f) in the deletion
  std::vector<int> map;  ///< source index to target index
};

/// Restriction X -> X without coordinate f on A_v(G). Throws
/// std::invalid_argument when f is a pivot.
DeletionMap deletion_map(const Embedding& embedding, FlatId g, const SignVector& choice, int deleted);

}  // namespace hsr
