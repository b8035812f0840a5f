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
#include <variant>
#include <vector>

#include "hsr/exact.hpp"
#include "hsr/lattice.hpp"

namespace hsr {

struct FlatsInput {
  GroundSet ground;
  std::vector<std::vector<std::string>> flats;
};

enum class Field { Rationals, PrimeField };

struct LinearInput {
  Field field = Field::Rationals;
  std::int64_t p = 0;  ///< used when field == PrimeField
  RationalColumns columns;
  std::optional<std::vector<std::string>> labels;  ///< defaults to "1".."n"
};

struct UniformInput {
  int r = 0;
  int n = 0;
};

using MatroidInput = std::variant<FlatsInput, LinearInput, UniformInput>;

/// Column matroid over Q or GF(p): rank and closure by exact elimination.
class LinearMatroid {
 public:
  explicit LinearMatroid(const LinearInput& desc);

  int size() const { return n_; }
  int rank(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  /// Flats enumerated rank by rank via closures of (flat + element).
  std::vector<ElementSet> flats() const;

 private:
  Field field_;
  std::int64_t p_ = 0;
  int n_ = 0;
  RationalColumns rational_;
  ModularColumns modular_;
};

/// Lattice of flats described by `desc`, without running verify_geometric.
/// Still throws InputError for structural problems (bad sizes, non-prime p).
GeometricLattice build_lattice(const MatroidInput& desc);

/// build_lattice followed by verify_geometric; throws InputError carrying the
/// first failing check's detail (e.g. "not meet-closed: ...").
GeometricLattice load_matroid(const MatroidInput& desc);

}  // namespace hsr
