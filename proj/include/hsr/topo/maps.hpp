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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hsr/report.hpp"
#include "hsr/topo/complex.hpp"
#include "hsr/topo/homology.hpp"
#include "hsr/topo/poset.hpp"

namespace hsr::topo {

/// Vertex map between complexes. Faces map to the set of vertex images.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  explicit SimplicialMap(std::map<int, int> vertex_map) : vertex_map_(std::move(vertex_map)) {}

  const std::map<int, int>& vertex_map() const { return vertex_map_; }
  /// Throws std::out_of_range for an unmapped vertex.
  int operator()(int v) const { return vertex_map_.at(v); }
  Face image(const Face& face) const;
  SimplicialComplex image(const SimplicialComplex& k) const;
  SimplicialMap compose_after(const SimplicialMap& first) const;

 private:
  std::map<int, int> vertex_map_;
};

/// Empty string when every face of `source` maps to a face of `target`,
/// otherwise a description of an offending maximal face.
std::string simplicial_violation(const SimplicialMap& f, const SimplicialComplex& source,
                                 const SimplicialComplex& target);

/// Involution check on K: the map squares to the identity on vertices, is
/// simplicial, and no face contains both v and its image.
ValidationReport z2_free_check(const SimplicialComplex& k, const SimplicialMap& involution);

/// Subcomplexes of a single ambient complex.
struct CoverFamily {
  SimplicialComplex ambient;
  std::vector<SimplicialComplex> members;
};

/// Image of a face under a (possibly face-valued) carrier.
using FaceCarrier = std::function<Face(const Face&)>;

struct CarrierOptions {
  /// Largest |J| inspected; 0 selects the full power set for at most 16
  /// members and |J| <= 3 otherwise.
  int max_subset_size = 0;
};

/// Hypotheses of the carrier lemma for `f` against covers `a` (source) and
/// `b` (target) indexed alike: both families cover their ambient; every
/// nonempty intersection is a homology point; the intersection patterns agree;
/// f carries each a_i into b_i. Throws std::invalid_argument on mismatched
/// index sets.
ValidationReport carrier_check(const FaceCarrier& f, const CoverFamily& a, const CoverFamily& b,
                               CarrierOptions options = {});
ValidationReport carrier_check(const SimplicialMap& f, const CoverFamily& a, const CoverFamily& b,
                               CarrierOptions options = {});

/// Quillen fiber condition for an order-preserving map f: P -> Q given by
/// images: each preimage of Q_{>=q} has an acyclic nonempty order complex.
/// Throws std::invalid_argument if f is not order-preserving.
ValidationReport quillen_fibers_check(const Poset& source, const Poset& target, const std::vector<int>& f);

struct OrderHomotopyResult {
  std::vector<int> elements;  ///< elements of f(P), increasing
  Poset image;                ///< induced on `elements`
  bool lowering = false;
  ValidationReport report;
};

/// Image of a lowering (f(x) <= x) or raising (f(x) >= x) self-map of P.
/// The report compares the homology of the order complexes of P and f(P).
/// Throws std::invalid_argument when f is neither.
OrderHomotopyResult order_homotopy_image(const Poset& poset, const std::vector<int>& f);

}  // namespace hsr::topo
