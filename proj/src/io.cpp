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

#include "hsr/io.hpp"

#include <fstream>
#include <sstream>

namespace hsr::io {

namespace {

std::string label_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw InputError("element labels must be strings or integers, got " + value.dump());
}

Rational entry_value(const Json& value) {
  try {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad rational entry: ") + e.what());
  }
  throw InputError("vector entries must be integers or \"num/den\" strings, got " + value.dump());
}

const Json& member(const Json& value, const char* key) {
  if (!value.is_object() || !value.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return value.at(key);
}

std::vector<std::string> labels_of(const Json& list) {
  if (!list.is_array()) throw InputError("expected a list of element labels, got " + list.dump());
  std::vector<std::string> out;
  for (const auto& x : list) out.push_back(label_text(x));
  return out;
}

Json labels_json(const GroundSet& ground, ElementSet s) {
  Json out = Json::array();
  for (const auto& l : ground.labels_of(s)) out.push_back(l);
  return out;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << value.dump(2) << '\n';
}

MatroidInput parse_matroid(const Json& value) {
  const std::string format = member(value, "format").get<std::string>();
  if (format == "uniform") {
    UniformInput desc;
    desc.r = member(value, "r").get<int>();
    desc.n = member(value, "n").get<int>();
    return desc;
  }
  if (format == "flats") {
    FlatsInput desc;
    desc.ground = GroundSet(labels_of(member(value, "ground_set")));
    for (const auto& f : member(value, "flats")) desc.flats.push_back(labels_of(f));
    return desc;
  }
  if (format == "linear") {
    LinearInput desc;
    const std::string field = value.value("field", std::string("Q"));
    if (field == "Q") {
      desc.field = Field::Rationals;
    } else if (field == "GF") {
      desc.field = Field::PrimeField;
      desc.p = member(value, "p").get<std::int64_t>();
    } else {
      throw InputError("field must be \"Q\" or \"GF\", got \"" + field + "\"");
    }
    for (const auto& column : member(value, "columns")) {
      std::vector<Rational> entries;
      for (const auto& x : column) entries.push_back(entry_value(x));
      desc.columns.push_back(std::move(entries));
    }
    if (value.contains("ground_set")) desc.labels = labels_of(value.at("ground_set"));
    return desc;
  }
  throw InputError("unknown matroid format \"" + format + "\"");
}

std::vector<ElementSet> parse_chain(const GroundSet& ground, const Json& value) {
  std::vector<ElementSet> chain;
  for (const auto& step : member(value, "chain")) chain.push_back(ground.subset(labels_of(step)));
  return chain;
}

Flag load_flag(const GeometricLattice& lattice, const std::string& selector) {
  if (selector == "default") return default_flag(lattice);
  return make_flag(lattice, parse_chain(lattice.ground_set(), read_json(selector)));
}

bool looks_like_vector_config(const Json& value) {
  return value.is_object() && value.contains("dimension") && value.contains("columns") &&
         value.at("columns").is_object();
}

VectorConfig parse_vector_config(const Json& value) {
  VectorConfig config;
  config.dimension = member(value, "dimension").get<int>();
  const Json& columns = member(value, "columns");
  if (!columns.is_object()) throw InputError("\"columns\" must map element labels to vectors");
  std::vector<std::string> labels;
  for (const auto& [label, vec] : columns.items()) {
    labels.push_back(label);
    std::vector<Rational> entries;
    for (const auto& x : vec) entries.push_back(entry_value(x));
    config.columns.push_back(std::move(entries));
  }
  config.ground = GroundSet(std::move(labels));
  return config;
}

Json complex_json(const SphereRepresentation& rep, const topo::SimplicialComplex& complex) {
  const topo::Face vertices = complex.vertices();
  const GroundSet& ground = rep.lattice().ground_set();
  Json out;
  Json vs = Json::array();
  for (int v : vertices) {
    const SignedVertex sv = rep.vertex(v);
    vs.push_back(Json{{"coatom", labels_json(ground, rep.lattice().flat(sv.coatom))},
                      {"sign", std::string(1, to_char(sv.sign))}});
  }
  Json faces = Json::array();
  for (const auto& f : complex.maximal_faces()) {
    Json face = Json::array();
    for (int v : f) {
      face.push_back(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    }
    faces.push_back(std::move(face));
  }
  out["vertices"] = std::move(vs);
  out["maximal_faces"] = std::move(faces);
  return out;
}

Json homology_json(const topo::HomologyProfile& profile) {
  Json dims = Json::array();
  for (const auto& h : profile.dims) {
    Json torsion = Json::array();
    for (const auto& t : h.torsion) torsion.push_back(t.str());
    dims.push_back(Json{{"d", h.dimension}, {"betti", h.betti}, {"torsion", std::move(torsion)}});
  }
  return Json{{"dims", std::move(dims)}};
}

Json report_json(const ValidationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks()) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"passed", report.ok()}, {"checks", std::move(checks)}};
}

Json covectors_json(const CovectorSet& covectors) {
  Json list = Json::array();
  for (const auto& x : covectors.covectors()) list.push_back(x.to_string());
  Json cocircuits = Json::array();
  for (const auto& x : covectors.cocircuits()) cocircuits.push_back(x.to_string());
  return Json{{"ground_set", covectors.ground_set().labels()},
              {"count", covectors.size()},
              {"covectors", std::move(list)},
              {"cocircuits", std::move(cocircuits)}};
}

Json weak_map_json(const WeakMapReport& report) {
  Json out{{"weak_map", report.verdict}};
  Json ranks = Json::array();
  for (const auto& w : report.rank_witnesses) {
    ranks.push_back(Json{{"subset", labels_json(report.ground, w.subset)},
                         {"source_rank", w.source_rank},
                         {"target_rank", w.target_rank}});
  }
  out["rank_witnesses"] = std::move(ranks);
  Json covectors = Json::array();
  for (const auto& x : report.covector_witnesses) covectors.push_back(x.to_string());
  out["covector_witnesses"] = std::move(covectors);
  out["underlying_weak_map"] = report.underlying_weak_map ? Json(*report.underlying_weak_map) : Json(nullptr);
  return out;
}

Json search_json(const SearchResult& result) {
  Json out{{"found", result.status == SearchStatus::Found}, {"status", to_string(result.status)}};
  if (result.map) {
    Json map = Json::object();
    for (std::size_t v = 0; v < result.map->size(); ++v) {
      map[result.source_labels[v]] = result.target_labels[static_cast<std::size_t>((*result.map)[v])];
    }
    out["map"] = std::move(map);
  } else {
    out["map"] = nullptr;
  }
  const auto obstruction = [&](const Obstruction& o) {
    Json face = Json::array();
    for (int v : o.face) face.push_back(result.source_labels[static_cast<std::size_t>(v)]);
    return Json{{"face", std::move(face)}, {"reason", o.reason}};
  };
  out["obstruction"] = result.obstruction ? obstruction(*result.obstruction) : Json(nullptr);
  Json all = Json::array();
  for (const auto& o : result.minimal_obstructions) all.push_back(obstruction(o));
  out["minimal_obstructions"] = std::move(all);
  out["assignments"] = result.assignments;
  out["detail"] = result.detail;
  return out;
}

Json selection_json(const GeometricLattice& lattice, const CrossSelection& selection) {
  Json list = Json::array();
  for (std::size_t i = 0; i < selection.coatoms.size(); ++i) {
    list.push_back(Json{{"coatom", labels_json(lattice.ground_set(), lattice.flat(selection.coatoms[i]))},
                        {"first_part", selection.first_parts[i]},
                        {"second_part", selection.second_parts[i]}});
  }
  return list;
}

std::string report_text(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace hsr::io
