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

#include <string>
#include <vector>

#include "hsr/lattice.hpp"
#include "hsr/report.hpp"
#include "hsr/sign_vector.hpp"
#include "hsr/topo/complex.hpp"
#include "hsr/topo/maps.hpp"

namespace hsr {

/// Signed coatom C_+ or C_-.
struct SignedVertex {
  FlatId coatom = 0;
  Sign sign = Sign::Plus;

  friend bool operator==(const SignedVertex&, const SignedVertex&) = default;
};

/// Flag-dependent sphere complexes S_G of a geometric lattice.
///
/// Coatoms are numbered in canonical lattice order; the vertex for coatom k
/// with sign s has id 2k (s = +) or 2k+1 (s = -). Part i of the coatom
/// partition is coat(F_i) minus coat(F_{i+1}), for i = 0..r-1.
class SphereRepresentation {
 public:
  /// Throws std::logic_error if some part is empty, which cannot happen for a
  /// geometric lattice and a complete flag.
  SphereRepresentation(GeometricLattice lattice, Flag flag);

  const GeometricLattice& lattice() const { return lattice_; }
  const Flag& flag() const { return flag_; }
  int rank() const { return lattice_.rank(); }

  const std::vector<FlatId>& coatoms() const { return coatoms_; }
  int coatom_index(FlatId coatom) const;
  const std::vector<std::vector<FlatId>>& parts() const { return parts_; }
  /// Part index of a coatom.
  int part_of(FlatId coatom) const;

  static int vertex_id(int coatom_index, Sign sign) { return 2 * coatom_index + (sign == Sign::Minus ? 1 : 0); }
  SignedVertex vertex(int id) const;
  int vertex_id(SignedVertex v) const { return vertex_id(coatom_index(v.coatom), v.sign); }
  /// "{1,2}+".
  std::string vertex_label(int id) const;
  std::string face_label(const topo::Face& face) const;

  /// Maximal faces: one per sign choice on the parts meeting coat(G). Empty for the top.
  topo::SimplicialComplex build(FlatId g) const;
  /// Part indices i with coat(G) meeting part i.
  std::vector<int> support(FlatId g) const;
  /// Entry i is 0 when the face misses part i, else the common sign there.
  /// Throws std::invalid_argument ("not a face of S_G") for mixed signs or
  /// vertices outside coat(G).
  SignVector sign_of_simplex(const topo::Face& face, FlatId g) const;
  /// Union over nonzero v_i of (coat(G) in part i) with sign v_i.
  topo::Face face_of_signs(const SignVector& v, FlatId g) const;
  /// S_G and S_H share exactly the faces of S_{G v H}.
  bool intersection_law_holds(FlatId g, FlatId h) const;

  /// Swap of C_+ and C_- for every coatom.
  topo::SimplicialMap antipodal() const;
  /// sign(sigma) with zero entries removed, per maximal face of S_G.
  std::vector<SignVector> facet_labels(FlatId g) const;
  topo::NerveIsoResult nerve_iso(FlatId g) const;

 private:
  GeometricLattice lattice_;
  Flag flag_;
  std::vector<FlatId> coatoms_;
  std::vector<int> coatom_index_;  // by FlatId, -1 for non-coatoms
  std::vector<int> part_of_;       // by coatom index
  std::vector<std::vector<FlatId>> parts_;
};

/// Ambient S_0 with one member S_a per atom a.
struct HomotopyArrangement {
  int rank = 0;
  topo::SimplicialComplex ambient;
  std::vector<FlatId> atoms;
  std::vector<topo::SimplicialComplex> members;
};

HomotopyArrangement arrangement(const SphereRepresentation& rep);

/// Subsets S of member indices such that adding any other member strictly
/// shrinks the intersection of the members in S. Returned as a lattice whose
/// ground set is the member indices, labelled "0".."n-1". Throws
/// std::length_error above 24 members.
GeometricLattice arrangement_flats(const HomotopyArrangement& arrangement);

/// Whether `candidate`, a lattice over atom indices of `lattice`, has exactly
/// the flats {atoms below X : X in lattice}.
bool isomorphic_by_atoms(const GeometricLattice& lattice, const GeometricLattice& candidate);

struct ArrangementOptions {
  /// Also compare nerves with cross-polytopes for every flat, not just the ambient.
  bool exact_nerve = false;
};

/// Arrangement axioms: ambient sphere and cross-polytope nerve; members are
/// (r-2)-spheres; every intersection of members is the S_H of the join and a
/// sphere of the right dimension; the antipodal map acts freely and preserves
/// members; intersecting with a member not containing it drops the dimension
/// by one.
ValidationReport verify_arrangement(const SphereRepresentation& rep, const HomotopyArrangement& arrangement,
                                    ArrangementOptions options = {});

/// Intersection law over all pairs of flats.
ValidationReport intersection_law_report(const SphereRepresentation& rep);

/// Nerve isomorphism and sphere homology of S_G for every flat G.
ValidationReport sphere_report(const SphereRepresentation& rep);

}  // namespace hsr
