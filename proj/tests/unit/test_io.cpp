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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "hsr/io.hpp"
#include "hsr/topo/homology.hpp"

using namespace hsr;
using io::Json;

TEST_CASE("matroid formats") {
  const auto uniform = load_matroid(io::parse_matroid(Json::parse(R"({"format":"uniform","r":2,"n":3})")));
  CHECK(uniform.size() == 5);
  CHECK(uniform.ground_set().labels() == std::vector<std::string>{"1", "2", "3"});

  const auto flats = load_matroid(io::parse_matroid(Json::parse(
      R"({"format":"flats","ground_set":["a","b"],"flats":[[],["a"],["b"],["a","b"]]})")));
  CHECK(flats.rank() == 2);

  const auto linear = load_matroid(io::parse_matroid(Json::parse(
      R"({"format":"linear","field":"Q","columns":[[1,0],["1/2",0],[0,"-3"]],"ground_set":["x","y","z"]})")));
  CHECK(linear.atoms().size() == 2);
  CHECK(linear.find(linear.ground_set().subset({"x", "y"})).has_value());

  const auto gf3 = load_matroid(io::parse_matroid(Json::parse(
      R"({"format":"linear","field":"GF","p":3,"columns":[[1,0],[0,1],[1,1],[1,2]]})")));
  CHECK(gf3.atoms().size() == 4);
  CHECK(gf3.rank() == 2);
  const auto gf2 = load_matroid(io::parse_matroid(Json::parse(
      R"({"format":"linear","field":"GF","p":2,"columns":[[1,0],[0,1],[1,1],[1,3]]})")));
  CHECK(gf2.atoms().size() == 3);
}

TEST_CASE("malformed matroid input") {
  CHECK_THROWS_AS(io::parse_matroid(Json::parse(R"({"format":"wheel"})")), InputError);
  CHECK_THROWS_AS(io::parse_matroid(Json::parse(R"({"r":2,"n":3})")), InputError);
  CHECK_THROWS_AS(io::parse_matroid(Json::parse(R"({"format":"linear","field":"R","columns":[[1]]})")), InputError);
  CHECK_THROWS_AS(io::parse_matroid(Json::parse(R"({"format":"linear","columns":[["1/0"]]})")), InputError);
  CHECK_THROWS_AS(io::parse_matroid(Json::parse(R"({"format":"linear","columns":[[1.5]]})")), InputError);
  CHECK_THROWS_AS(io::parse_matroid(Json::parse(R"({"format":"flats","ground_set":[{"x":1}],"flats":[]})")),
                  InputError);
  CHECK_THROWS_AS(load_matroid(io::parse_matroid(Json::parse(
                      R"({"format":"flats","ground_set":["1","2"],"flats":[[],["1"],["1","2"]]})"))),
                  InputError);
}

TEST_CASE("flags from files") {
  const auto u34 = fixtures::matroid("u34.json");
  CHECK(io::load_flag(u34, "default").chain == default_flag(u34).chain);
  const Flag b = io::load_flag(u34, fixtures::data("flag_u34_b.json").string());
  CHECK(u34.ground_set().labels_of(u34.flat(b.chain[1])) == std::vector<std::string>{"3"});
  CHECK_THROWS_AS(io::load_flag(u34, fixtures::data("flag_incomplete.json").string()), InputError);
  CHECK_THROWS_AS(io::load_flag(u34, fixtures::data("nowhere.json").string()), InputError);
  CHECK_THROWS_AS(io::parse_chain(u34.ground_set(), Json::parse(R"({"chain":[["9"]]})")), InputError);
}

TEST_CASE("vector configurations") {
  const Json text = io::read_json(fixtures::data("u24_vec.json"));
  CHECK(io::looks_like_vector_config(text));
  CHECK_FALSE(io::looks_like_vector_config(io::read_json(fixtures::data("u24.json"))));
  const auto config = io::parse_vector_config(text);
  CHECK(config.dimension == 2);
  CHECK(config.ground.labels() == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(config.columns[3] == std::vector<Rational>{1, -1});
  CHECK_THROWS_AS(io::parse_vector_config(Json::parse(R"({"dimension":2,"columns":[[1,0]]})")), InputError);
}

TEST_CASE("complex output reloads to the same complex") {
  const auto u34 = fixtures::matroid("u34.json");
  const SphereRepresentation rep(u34, default_flag(u34));
  for (FlatId g = 0; g < static_cast<FlatId>(u34.size()); ++g) {
    const auto k = rep.build(g);
    const Json out = io::complex_json(rep, k);
    const Json& vs = out.at("vertices");
    std::vector<int> ids;
    for (const auto& v : vs) {
      const auto coatom = u34.find(u34.ground_set().subset(v.at("coatom").get<std::vector<std::string>>()));
      REQUIRE(coatom.has_value());
      ids.push_back(rep.vertex_id(SignedVertex{*coatom, v.at("sign") == "+" ? Sign::Plus : Sign::Minus}));
    }
    std::vector<topo::Face> faces;
    for (const auto& f : out.at("maximal_faces")) {
      topo::Face face;
      for (const auto& i : f) face.push_back(ids.at(i.get<std::size_t>()));
      faces.push_back(topo::make_face(std::move(face)));
    }
    CHECK(topo::SimplicialComplex(faces) == k);
  }
}

TEST_CASE("report and homology output") {
  ValidationReport report;
  report.add("first", true);
  report.add("second", false, "broken here");
  const Json j = io::report_json(report);
  CHECK(j.at("passed") == false);
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("checks")[1].at("detail") == "broken here");
  CHECK(io::report_text(report) == "PASS first\nFAIL second: broken here\n");

  const Json rp2 = io::read_json(fixtures::data("rp2.json"));
  std::vector<topo::Face> faces;
  for (const auto& f : rp2.at("maximal_faces")) faces.push_back(f.get<topo::Face>());
  const Json h = io::homology_json(topo::reduced_homology(topo::SimplicialComplex(faces)));
  CHECK(h.dump() ==
        R"({"dims":[{"d":0,"betti":0,"torsion":[]},{"d":1,"betti":0,"torsion":["2"]},{"d":2,"betti":0,"torsion":[]}]})");
}

TEST_CASE("search and weak map output") {
  const auto u34 = fixtures::matroid("u34.json");
  const auto n134 = fixtures::matroid("n134.json");
  std::vector<ElementSet> chain;
  for (FlatId f : default_flag(u34).chain) chain.push_back(u34.flat(f));
  const Json none = io::search_json(poset_map_search(u34, n134, chain));
  CHECK(none.at("found") == false);
  CHECK(none.at("status") == "none");
  CHECK(none.at("map").is_null());
  CHECK(none.at("obstruction").at("face") == Json::parse(R"(["{1,3}+","{3,4}-"])"));
  CHECK(none.at("minimal_obstructions").size() == 4);

  const Json found = io::search_json(poset_map_search(u34, u34, chain));
  CHECK(found.at("found") == true);
  CHECK(found.at("map").at("{2,4}-") == "{2,4}-");
  CHECK(found.at("obstruction").is_null());

  const Json weak = io::weak_map_json(is_weak_map_matroid(n134, u34));
  CHECK(weak.at("weak_map") == false);
  CHECK(weak.at("rank_witnesses")[0].at("subset") == Json::parse(R"(["1","3","4"])"));
  CHECK(weak.at("underlying_weak_map").is_null());
}

TEST_CASE("writing files") {
  const auto dir = std::filesystem::temp_directory_path() / "hsr_io_test";
  std::filesystem::create_directories(dir);
  const Json value = Json::parse(R"({"b":1,"a":[1,2]})");
  io::write_json(dir / "x.json", value);
  CHECK(io::read_json(dir / "x.json") == value);
  CHECK(io::read_json(dir / "x.json").begin().key() == "b");
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(io::write_json(dir / "missing" / "x.json", value), InputError);
}
