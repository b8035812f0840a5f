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

// Command-line front end: hsr <command> [options].

#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsr/flag_change.hpp"
#include "hsr/io.hpp"
#include "hsr/om.hpp"
#include "hsr/sphere_rep.hpp"
#include "hsr/topo/homology.hpp"
#include "hsr/weak_map.hpp"

namespace {

using hsr::io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
  std::vector<std::string> inputs;
  std::vector<std::string> flags;
  std::string out_dir;
  bool json = false;
  bool exact_nerve = false;
  bool search = false;
  std::int64_t max_assignments = 10'000'000;
};

std::string flag_selector(const Options& o, std::size_t i) { return i < o.flags.size() ? o.flags[i] : "default"; }

hsr::GeometricLattice load_lattice(const std::string& path) {
  return hsr::load_matroid(hsr::io::parse_matroid(hsr::io::read_json(path)));
}

Json chain_json(const hsr::GeometricLattice& lattice, const hsr::Flag& flag) {
  Json out = Json::array();
  for (hsr::FlatId f : flag.chain) out.push_back(lattice.ground_set().labels_of(lattice.flat(f)));
  return out;
}

int finish(const hsr::ValidationReport& report, const Options& o, Json extra = Json::object()) {
  if (o.json) {
    Json out = hsr::io::report_json(report);
    for (auto& [k, v] : extra.items()) out[k] = v;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << hsr::io::report_text(report) << "RESULT: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  }
  return report.ok() ? kPass : kFail;
}

int cmd_validate(const Options& o) {
  const auto lattice = hsr::build_lattice(hsr::io::parse_matroid(hsr::io::read_json(o.inputs.at(0))));
  return finish(hsr::verify_geometric(lattice), o);
}

int cmd_represent(const Options& o) {
  const auto lattice = load_lattice(o.inputs.at(0));
  const hsr::SphereRepresentation rep(lattice, hsr::io::load_flag(lattice, flag_selector(o, 0)));
  Json manifest{{"flag", chain_json(lattice, rep.flag())}, {"complexes", Json::array()}};
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  for (hsr::FlatId g = 0; g < static_cast<hsr::FlatId>(lattice.size()); ++g) {
    const auto complex = rep.build(g);
    const std::string file = "S_" + std::to_string(g) + ".json";
    if (!o.out_dir.empty()) hsr::io::write_json(std::filesystem::path(o.out_dir) / file, hsr::io::complex_json(rep, complex));
    manifest["complexes"].push_back(Json{{"index", g},
                                         {"flat", lattice.ground_set().labels_of(lattice.flat(g))},
                                         {"file", file},
                                         {"vertices", complex.vertices().size()},
                                         {"maximal_faces", complex.maximal_faces().size()}});
    if (!o.json) {
      std::cout << "S_" << g << " " << lattice.format(g) << ": " << complex.maximal_faces().size()
                << " maximal faces, " << complex.vertices().size() << " vertices\n";
    }
  }
  if (!o.out_dir.empty()) hsr::io::write_json(std::filesystem::path(o.out_dir) / "manifest.json", manifest);
  if (o.json) std::cout << manifest.dump(2) << '\n';
  return kPass;
}

int cmd_verify(const Options& o) {
  const auto lattice = load_lattice(o.inputs.at(0));
  const hsr::SphereRepresentation rep(lattice, hsr::io::load_flag(lattice, flag_selector(o, 0)));
  const auto arr = hsr::arrangement(rep);
  hsr::ValidationReport report = hsr::verify_arrangement(rep, arr, hsr::ArrangementOptions{o.exact_nerve});
  report.append(hsr::intersection_law_report(rep));
  const bool roundtrip = hsr::isomorphic_by_atoms(lattice, hsr::arrangement_flats(arr));
  report.add("arrangement flats recover the lattice", roundtrip);
  return finish(report, o);
}

hsr::topo::SimplicialComplex complex_from_json(const Json& value) {
  std::vector<hsr::topo::Face> faces;
  const Json& list = value.at("maximal_faces");
  if (!list.is_array()) throw hsr::InputError("\"maximal_faces\" must be a list");
  for (const auto& f : list) faces.push_back(f.get<std::vector<int>>());
  return hsr::topo::SimplicialComplex(std::move(faces));
}

int cmd_homology(const Options& o) {
  const Json value = hsr::io::read_json(o.inputs.at(0));
  if (!value.contains("format")) {
    const auto profile = hsr::topo::reduced_homology(complex_from_json(value));
    if (o.json) {
      std::cout << hsr::io::homology_json(profile).dump(2) << '\n';
    } else {
      std::cout << profile.summary() << '\n';
    }
    return kPass;
  }
  const auto lattice = hsr::load_matroid(hsr::io::parse_matroid(value));
  const hsr::SphereRepresentation rep(lattice, hsr::io::load_flag(lattice, flag_selector(o, 0)));
  Json out = Json::array();
  for (hsr::FlatId g = 0; g < static_cast<hsr::FlatId>(lattice.size()); ++g) {
    const auto profile = hsr::topo::reduced_homology(rep.build(g));
    if (o.json) {
      Json entry = hsr::io::homology_json(profile);
      entry["flat"] = lattice.ground_set().labels_of(lattice.flat(g));
      out.push_back(std::move(entry));
    } else {
      std::cout << "S_" << g << " " << lattice.format(g) << ": " << profile.summary() << '\n';
    }
  }
  if (o.json) std::cout << out.dump(2) << '\n';
  return kPass;
}

int cmd_om_covectors(const Options& o) {
  const auto covectors = hsr::covectors_from_vectors(hsr::io::parse_vector_config(hsr::io::read_json(o.inputs.at(0))));
  if (o.json) {
    std::cout << hsr::io::covectors_json(covectors).dump(2) << '\n';
    return kPass;
  }
  std::cout << covectors.size() << " covectors, " << covectors.cocircuits().size() << " cocircuits\n";
  for (const auto& x : covectors.covectors()) std::cout << x.to_string() << '\n';
  return kPass;
}

int cmd_om_embed(const Options& o) {
  auto covectors = hsr::covectors_from_vectors(hsr::io::parse_vector_config(hsr::io::read_json(o.inputs.at(0))));
  const auto lattice = hsr::underlying_matroid(covectors);
  const hsr::Flag flag = hsr::io::load_flag(lattice, flag_selector(o, 0));
  const hsr::Embedding embedding(std::move(covectors), flag);
  hsr::ValidationReport report = hsr::pivots_check(embedding);
  report.append(hsr::verify_embedding(embedding));
  for (hsr::FlatId g = 0; g < static_cast<hsr::FlatId>(lattice.size()); ++g) {
    if (g == lattice.top()) continue;
    const std::string scope = "G=" + lattice.format(g) + " ";
    report.append(hsr::embedding_carrier_check(embedding, g, hsr::CoverReading::FirstPivot),
                  scope + "first-pivot covers: ");
    report.append(hsr::embedding_carrier_check(embedding, g, hsr::CoverReading::ImagePreimage),
                  scope + "preimage covers: ");
  }
  return finish(report, o, Json{{"flag", chain_json(lattice, flag)}, {"pivots", embedding.pivots()}});
}

int cmd_flags_compare(const Options& o) {
  const auto lattice = load_lattice(o.inputs.at(0));
  const hsr::Flag first = hsr::io::load_flag(lattice, flag_selector(o, 0));
  const hsr::Flag second = hsr::io::load_flag(lattice, flag_selector(o, 1));
  const auto descriptor = hsr::retraction_map(lattice, first, second);
  if (!o.json) {
    for (std::size_t i = 0; i < descriptor.selection.coatoms.size(); ++i) {
      std::cout << "C_" << i << " = " << lattice.format(descriptor.selection.coatoms[i]) << " (parts "
                << descriptor.selection.first_parts[i] << ", " << descriptor.selection.second_parts[i] << ")\n";
    }
  }
  return finish(hsr::verify_retraction(descriptor), o,
                Json{{"selection", hsr::io::selection_json(lattice, descriptor.selection)}});
}

int cmd_weakmap(const Options& o) {
  const Json a = hsr::io::read_json(o.inputs.at(0));
  const Json b = hsr::io::read_json(o.inputs.at(1));
  const bool vectors = hsr::io::looks_like_vector_config(a);
  if (vectors != hsr::io::looks_like_vector_config(b)) {
    throw hsr::InputError("both inputs must be matroids or both vector configurations");
  }
  Json out;
  bool ok = true;
  std::optional<hsr::GeometricLattice> source;
  std::optional<hsr::GeometricLattice> target;
  if (vectors) {
    const auto m = hsr::covectors_from_vectors(hsr::io::parse_vector_config(a));
    const auto n = hsr::covectors_from_vectors(hsr::io::parse_vector_config(b));
    const auto report = hsr::is_weak_map_covectors(m, n);
    ok = report.verdict;
    out = hsr::io::weak_map_json(report);
    if (!o.json) {
      std::cout << "WEAK MAP: " << (report.verdict ? "yes" : "no") << '\n';
      for (const auto& x : report.covector_witnesses) std::cout << "uncovered covector " << x.to_string() << '\n';
      if (report.underlying_weak_map) {
        std::cout << "underlying matroids: " << (*report.underlying_weak_map ? "weak map" : "not a weak map") << '\n';
      }
    }
    if (o.search) {
      source = hsr::underlying_matroid(m);
      target = hsr::underlying_matroid(n);
    }
  } else {
    source = hsr::load_matroid(hsr::io::parse_matroid(a));
    target = hsr::load_matroid(hsr::io::parse_matroid(b));
    const auto report = hsr::is_weak_map_matroid(*source, *target);
    ok = report.verdict;
    out = hsr::io::weak_map_json(report);
    if (!o.json) {
      std::cout << "WEAK MAP: " << (report.verdict ? "yes" : "no") << '\n';
      for (const auto& w : report.rank_witnesses) {
        std::cout << "witness " << report.ground.format(w.subset) << ": rank " << w.source_rank << " < "
                  << w.target_rank << '\n';
      }
    }
  }
  if (o.search) {
    const hsr::Flag flag = hsr::io::load_flag(*source, flag_selector(o, 0));
    std::vector<hsr::ElementSet> chain;
    for (hsr::FlatId f : flag.chain) chain.push_back(source->flat(f));
    const auto result = hsr::poset_map_search(*source, *target, chain, hsr::SearchOptions{o.max_assignments});
    ok = ok && result.status == hsr::SearchStatus::Found;
    out["search"] = hsr::io::search_json(result);
    if (!o.json) {
      std::cout << "POSET MAP: " << (result.status == hsr::SearchStatus::Found ? "found" : "NONE") << " ("
                << hsr::to_string(result.status) << ", " << result.assignments << " assignments)\n";
      if (!result.detail.empty()) std::cout << result.detail << '\n';
      if (result.map) {
        for (std::size_t v = 0; v < result.map->size(); ++v) {
          std::cout << "  " << result.source_labels[v] << " -> "
                    << result.target_labels[static_cast<std::size_t>((*result.map)[v])] << '\n';
        }
      }
      for (const auto& ob : result.minimal_obstructions) std::cout << "obstruction: " << ob.reason << '\n';
    }
  }
  if (o.json) std::cout << out.dump(2) << '\n';
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sphere representations of geometric lattices"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* cmd, int inputs) {
    cmd->add_option("inputs", o.inputs, "input JSON files")->required()->expected(inputs);
    cmd->add_option("--flag", o.flags, "flag file or \"default\"")->type_size(1)->allow_extra_args(false);
    cmd->add_flag("--json", o.json, "machine-readable output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the lattice-of-flats axioms");
  add_common(validate, 1);
  CLI::App* represent = app.add_subcommand("represent", "build S_G for every flat G");
  add_common(represent, 1);
  represent->add_option("--out", o.out_dir, "directory for S_<k>.json and manifest.json");
  CLI::App* verify = app.add_subcommand("verify", "arrangement axioms, intersection law, roundtrip");
  add_common(verify, 1);
  verify->add_flag("--exact-nerve", o.exact_nerve, "compare nerves with cross-polytopes for every flat");
  CLI::App* homology = app.add_subcommand("homology", "reduced integer homology of a complex or of every S_G");
  add_common(homology, 1);
  CLI::App* om = app.add_subcommand("om", "oriented matroids from vector configurations");
  om->require_subcommand(1);
  CLI::App* covectors = om->add_subcommand("covectors", "list covectors");
  add_common(covectors, 1);
  CLI::App* embed = om->add_subcommand("embed", "embedding of covectors into S_0 and its checks");
  add_common(embed, 1);
  CLI::App* flags = app.add_subcommand("flags", "change of flag");
  flags->require_subcommand(1);
  CLI::App* compare = flags->add_subcommand("compare", "cross selection and retraction between two flags");
  add_common(compare, 1);
  CLI::App* weakmap = app.add_subcommand("weakmap", "weak map test and poset-map search");
  add_common(weakmap, 2);
  weakmap->add_flag("--search-poset-map", o.search, "search for a poset map between the sphere complexes");
  weakmap->add_option("--max-assignments", o.max_assignments, "search budget")->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*represent) return cmd_represent(o);
    if (*verify) return cmd_verify(o);
    if (*homology) return cmd_homology(o);
    if (*covectors) return cmd_om_covectors(o);
    if (*embed) return cmd_om_embed(o);
    if (*compare) return cmd_flags_compare(o);
    if (*weakmap) return cmd_weakmap(o);
  } catch (const hsr::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
