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

// Python bindings. Inputs and outputs travel as JSON text; the Python
// package converts to and from dicts.

#include <pybind11/pybind11.h>

#include <string>

#include "hsr/flag_change.hpp"
#include "hsr/io.hpp"
#include "hsr/om.hpp"
#include "hsr/sphere_rep.hpp"
#include "hsr/topo/homology.hpp"
#include "hsr/weak_map.hpp"

namespace py = pybind11;
using hsr::io::Json;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw hsr::InputError(e.what());
  }
}

hsr::GeometricLattice lattice_of(const std::string& text) { return hsr::load_matroid(hsr::io::parse_matroid(parse(text))); }

// An empty string selects the default flag; otherwise {"chain": [...]}.
hsr::Flag flag_of(const hsr::GeometricLattice& lattice, const std::string& text) {
  if (text.empty()) return hsr::default_flag(lattice);
  return hsr::make_flag(lattice, hsr::io::parse_chain(lattice.ground_set(), parse(text)));
}

Json chain_json(const hsr::GeometricLattice& lattice, const hsr::Flag& flag) {
  Json out = Json::array();
  for (hsr::FlatId f : flag.chain) out.push_back(lattice.ground_set().labels_of(lattice.flat(f)));
  return out;
}

std::string validate(const std::string& matroid) {
  const auto lattice = hsr::build_lattice(hsr::io::parse_matroid(parse(matroid)));
  return hsr::io::report_json(hsr::verify_geometric(lattice)).dump();
}

std::string represent(const std::string& matroid, const std::string& flag) {
  const auto lattice = lattice_of(matroid);
  const hsr::SphereRepresentation rep(lattice, flag_of(lattice, flag));
  Json out{{"flag", chain_json(lattice, rep.flag())}, {"complexes", Json::array()}};
  for (hsr::FlatId g = 0; g < static_cast<hsr::FlatId>(lattice.size()); ++g) {
    Json entry = hsr::io::complex_json(rep, rep.build(g));
    entry["flat"] = lattice.ground_set().labels_of(lattice.flat(g));
    out["complexes"].push_back(std::move(entry));
  }
  return out.dump();
}

std::string verify(const std::string& matroid, const std::string& flag, bool exact_nerve) {
  const auto lattice = lattice_of(matroid);
  const hsr::SphereRepresentation rep(lattice, flag_of(lattice, flag));
  const auto arr = hsr::arrangement(rep);
  hsr::ValidationReport report = hsr::verify_arrangement(rep, arr, hsr::ArrangementOptions{exact_nerve});
  report.append(hsr::intersection_law_report(rep));
  report.add("arrangement flats recover the lattice", hsr::isomorphic_by_atoms(lattice, hsr::arrangement_flats(arr)));
  return hsr::io::report_json(report).dump();
}

std::string homology(const std::string& faces) {
  const Json list = parse(faces);
  if (!list.is_array()) throw hsr::InputError("expected a list of faces");
  std::vector<hsr::topo::Face> out;
  for (const auto& f : list) out.push_back(f.get<hsr::topo::Face>());
  return hsr::io::homology_json(hsr::topo::reduced_homology(hsr::topo::SimplicialComplex(std::move(out)))).dump();
}

std::string covectors(const std::string& config) {
  return hsr::io::covectors_json(hsr::covectors_from_vectors(hsr::io::parse_vector_config(parse(config)))).dump();
}

std::string weak_map(const std::string& source, const std::string& target) {
  const Json a = parse(source);
  const Json b = parse(target);
  if (hsr::io::looks_like_vector_config(a) && hsr::io::looks_like_vector_config(b)) {
    return hsr::io::weak_map_json(
               hsr::is_weak_map_covectors(hsr::covectors_from_vectors(hsr::io::parse_vector_config(a)),
                                          hsr::covectors_from_vectors(hsr::io::parse_vector_config(b))))
        .dump();
  }
  return hsr::io::weak_map_json(hsr::is_weak_map_matroid(hsr::load_matroid(hsr::io::parse_matroid(a)),
                                                         hsr::load_matroid(hsr::io::parse_matroid(b))))
      .dump();
}

std::string poset_map_search(const std::string& source, const std::string& target, const std::string& flag,
                             std::int64_t max_assignments) {
  const auto from = lattice_of(source);
  const auto to = lattice_of(target);
  std::vector<hsr::ElementSet> chain;
  if (flag.empty()) {
    for (hsr::FlatId f : hsr::default_flag(from).chain) chain.push_back(from.flat(f));
  } else {
    chain = hsr::io::parse_chain(from.ground_set(), parse(flag));
  }
  return hsr::io::search_json(hsr::poset_map_search(from, to, chain, hsr::SearchOptions{max_assignments})).dump();
}

std::string compare_flags(const std::string& matroid, const std::string& first, const std::string& second) {
  const auto lattice = lattice_of(matroid);
  const auto d = hsr::retraction_map(lattice, flag_of(lattice, first), flag_of(lattice, second));
  Json out = hsr::io::report_json(hsr::verify_retraction(d));
  out["selection"] = hsr::io::selection_json(lattice, d.selection);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sphere representations of geometric lattices (JSON-text interface)";
  py::register_exception<hsr::InputError>(m, "InputError", PyExc_ValueError);
  m.def("validate", &validate, py::arg("matroid"));
  m.def("represent", &represent, py::arg("matroid"), py::arg("flag") = "");
  m.def("verify", &verify, py::arg("matroid"), py::arg("flag") = "", py::arg("exact_nerve") = false);
  m.def("homology", &homology, py::arg("faces"));
  m.def("covectors", &covectors, py::arg("config"));
  m.def("weak_map", &weak_map, py::arg("source"), py::arg("target"));
  m.def("poset_map_search", &poset_map_search, py::arg("source"), py::arg("target"), py::arg("flag") = "",
        py::arg("max_assignments") = 10'000'000);
  m.def("compare_flags", &compare_flags, py::arg("matroid"), py::arg("first") = "", py::arg("second") = "");
}
