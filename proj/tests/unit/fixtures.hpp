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

#include <filesystem>
#include <string>

#include "hsr/io.hpp"
#include "hsr/lattice.hpp"
#include "hsr/matroid_input.hpp"
#include "hsr/om.hpp"

namespace fixtures {

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(HSR_TEST_DATA) / name; }

inline hsr::GeometricLattice matroid(const std::string& name) {
  return hsr::load_matroid(hsr::io::parse_matroid(hsr::io::read_json(data(name))));
}

inline hsr::VectorConfig vectors(const std::string& name) {
  return hsr::io::parse_vector_config(hsr::io::read_json(data(name)));
}

inline hsr::FlatId flat(const hsr::GeometricLattice& lattice, const std::vector<std::string>& labels) {
  return *lattice.find(lattice.ground_set().subset(labels));
}

inline hsr::Flag flag(const hsr::GeometricLattice& lattice, const std::vector<std::vector<std::string>>& chain) {
  std::vector<hsr::ElementSet> sets;
  for (const auto& step : chain) sets.push_back(lattice.ground_set().subset(step));
  return hsr::make_flag(lattice, sets);
}

}  // namespace fixtures
