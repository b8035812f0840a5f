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

#include <vector>

#include "hsr/lattice.hpp"
#include "hsr/report.hpp"
#include "hsr/sphere_rep.hpp"
#include "hsr/topo/complex.hpp"
#include "hsr/topo/maps.hpp"

namespace hsr {

/// Coatoms C_0..C_{r-1} with C_i in part i under the first flag and pairwise
/// distinct parts under the second.
struct CrossSelection {
  std::vector<FlatId> coatoms;
  std::vector<int> first_parts;
  std::vector<int> second_parts;
};

/// Inductive selection over the upper interval above the atom F_1 of the first
/// flag, against the join flag {G_j v F_1}. The join flag collapses at the one
/// step k where G_{k+1} first contains F_1; C_0 is then the lex-smallest coatom
/// above G_k that misses F_1. Identical flags take the lex-smallest coatom of
/// every part.
CrossSelection select_cross_coatoms(const GeometricLattice& lattice, const Flag& first, const Flag& second);

/// Both distinctness conditions and part membership, checked from scratch.
ValidationReport verify_cross_selection(const GeometricLattice& lattice, const Flag& first, const Flag& second,
                                        const CrossSelection& selection);

/// Whether some choice of r coatoms meets every part of both partitions once.
bool cross_selection_exists(const GeometricLattice& lattice, const Flag& first, const Flag& second);

/// Vertex maps sending G_e to (C_i)_e, where G lies in part i of the first flag
/// (resp. in the part of C_i under the second flag), and the cross-polytope on
/// the vertices (C_i)_+-.
struct RetractDescriptor {
  SphereRepresentation first;
  SphereRepresentation second;
  CrossSelection selection;
  topo::SimplicialMap retract_first;
  topo::SimplicialMap retract_second;
  topo::SimplicialComplex cross_polytope;
};

RetractDescriptor retraction_map(const GeometricLattice& lattice, const Flag& first, const Flag& second);

/// Selection valid; both retractions simplicial and idempotent onto P; P lies
/// in both ambient complexes; retract-then-include is simplicial into the
/// second ambient complex; S_0 of both flags and P have the S^{r-1} profile.
ValidationReport verify_retraction(const RetractDescriptor& descriptor);

}  // namespace hsr
