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
#include <vector>

#include <nlohmann/json.hpp>

#include "hsr/flag_change.hpp"
#include "hsr/lattice.hpp"
#include "hsr/matroid_input.hpp"
#include "hsr/om.hpp"
#include "hsr/report.hpp"
#include "hsr/sphere_rep.hpp"
#include "hsr/topo/homology.hpp"
#include "hsr/weak_map.hpp"

namespace hsr::io {

using Json = nlohmann::ordered_json;

/// Throws InputError for a missing file or malformed JSON.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& value);

/// {"format":"flats"|"linear"|"uniform", ...}. Entries of linear columns may be
/// integers or "num/den" strings; "ground_set" optionally labels the columns.
MatroidInput parse_matroid(const Json& value);

/// {"chain":[[...],...]} over the labels of `ground`.
std::vector<ElementSet> parse_chain(const GroundSet& ground, const Json& value);

/// "default" or a path to a flag file.
Flag load_flag(const GeometricLattice& lattice, const std::string& selector);

/// {"dimension":r,"columns":{"<element>":["<num>/<den>",...],...}}, elements in file order.
VectorConfig parse_vector_config(const Json& value);
bool looks_like_vector_config(const Json& value);

/// Vertices sorted by id, faces as indices into the vertex list.
Json complex_json(const SphereRepresentation& rep, const topo::SimplicialComplex& complex);
Json homology_json(const topo::HomologyProfile& profile);
Json report_json(const ValidationReport& report);
Json covectors_json(const CovectorSet& covectors);
Json weak_map_json(const WeakMapReport& report);
Json search_json(const SearchResult& result);
Json selection_json(const GeometricLattice& lattice, const CrossSelection& selection);

/// One "PASS name" / "FAIL name: detail" line per check.
std::string report_text(const ValidationReport& report);

}  // namespace hsr::io
