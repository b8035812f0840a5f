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

#include "hsr/exact.hpp"
#include "hsr/topo/complex.hpp"

namespace hsr::topo {

/// Sparse integer matrix given by its nonzero entries.
struct SparseEntry {
  int row = 0;
  int col = 0;
  Integer value;
};

struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseEntry> entries;
};

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form, all
/// positive. The rank of the matrix is the length of the result.
std::vector<Integer> smith_invariants(const SparseMatrix& matrix);

/// Boundary map C_k -> C_{k-1} of K with faces indexed as in faces_of_dimension.
/// For k = 0 this is the augmentation C_0 -> Z (a single row of ones).
SparseMatrix boundary_matrix(const SimplicialComplex& k, int dimension);

struct DimensionHomology {
  int dimension = 0;
  long betti = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1

  friend bool operator==(const DimensionHomology&, const DimensionHomology&) = default;
};

/// Reduced integer homology in dimensions 0..dim(K). The empty complex has no
/// entries, which reads as zero in every dimension d >= 0.
struct HomologyProfile {
  std::vector<DimensionHomology> dims;

  long betti(int d) const;
  std::vector<Integer> torsion(int d) const;
  /// All reduced groups vanish.
  bool trivial() const;
  /// Z in dimension d and zero elsewhere.
  bool is_sphere_profile(int d) const;
  /// "b0=0 b1=1 ..." with torsion as "T1=[2]".
  std::string summary() const;

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

HomologyProfile reduced_homology(const SimplicialComplex& k);

/// Homology proxy for a (d)-sphere: d = -1 means K is empty.
bool is_homology_sphere(const SimplicialComplex& k, int d);
/// Nonempty with vanishing reduced homology.
bool is_homology_point(const SimplicialComplex& k);

}  // namespace hsr::topo
