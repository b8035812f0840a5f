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

#include "fixtures.hpp"
#include "hsr/sphere_rep.hpp"
#include "hsr/topo/homology.hpp"

using namespace hsr;
using fixtures::flat;
using topo::Face;

namespace {

const char* const kFixtures[] = {"u24.json", "u34.json", "bool3.json", "fano_gf2.json", "n134.json", "rank1.json"};

std::vector<std::vector<std::string>> part_labels(const SphereRepresentation& rep, int i) {
  std::vector<std::vector<std::string>> out;
  for (FlatId c : rep.parts()[static_cast<std::size_t>(i)]) out.push_back(rep.lattice().ground_set().labels_of(rep.lattice().flat(c)));
  return out;
}

int vid(const SphereRepresentation& rep, const std::vector<std::string>& coatom, Sign s) {
  return rep.vertex_id(SignedVertex{flat(rep.lattice(), coatom), s});
}

}  // namespace

TEST_CASE("coatom partitions") {
  const auto u24 = fixtures::matroid("u24.json");
  const SphereRepresentation r24(u24, default_flag(u24));
  CHECK(part_labels(r24, 0) == std::vector<std::vector<std::string>>{{"2"}, {"3"}, {"4"}});
  CHECK(part_labels(r24, 1) == std::vector<std::vector<std::string>>{{"1"}});

  const auto bool3 = fixtures::matroid("bool3.json");
  const SphereRepresentation rb(bool3, default_flag(bool3));
  CHECK(part_labels(rb, 0) == std::vector<std::vector<std::string>>{{"2", "3"}});
  CHECK(part_labels(rb, 1) == std::vector<std::vector<std::string>>{{"1", "3"}});
  CHECK(part_labels(rb, 2) == std::vector<std::vector<std::string>>{{"1", "2"}});

  const auto u34 = fixtures::matroid("u34.json");
  const SphereRepresentation r34(u34, default_flag(u34));
  CHECK(part_labels(r34, 0) == std::vector<std::vector<std::string>>{{"2", "3"}, {"2", "4"}, {"3", "4"}});
  CHECK(part_labels(r34, 1) == std::vector<std::vector<std::string>>{{"1", "3"}, {"1", "4"}});
  CHECK(part_labels(r34, 2) == std::vector<std::vector<std::string>>{{"1", "2"}});
}

TEST_CASE("building S_G") {
  const auto u24 = fixtures::matroid("u24.json");
  const SphereRepresentation rep(u24, default_flag(u24));
  const auto s0 = rep.build(u24.bottom());
  CHECK(s0.maximal_faces().size() == 4);
  for (const auto& f : s0.maximal_faces()) CHECK(f.size() == 4);
  CHECK(s0.dimension() == 3);
  const auto s3 = rep.build(flat(u24, {"3"}));
  CHECK(s3.maximal_faces() ==
        std::vector<Face>{{vid(rep, {"3"}, Sign::Plus)}, {vid(rep, {"3"}, Sign::Minus)}});
  CHECK(rep.build(u24.top()).empty());
  CHECK(rep.vertex_label(vid(rep, {"3"}, Sign::Minus)) == "{3}-");
}

TEST_CASE("sign vectors of simplices") {
  const auto u24 = fixtures::matroid("u24.json");
  const SphereRepresentation rep(u24, default_flag(u24));
  const Face sigma = topo::make_face({vid(rep, {"2"}, Sign::Plus), vid(rep, {"3"}, Sign::Plus),
                                      vid(rep, {"4"}, Sign::Plus), vid(rep, {"1"}, Sign::Minus)});
  CHECK(rep.sign_of_simplex(sigma, u24.bottom()).to_string() == "+-");
  CHECK(rep.sign_of_simplex({}, u24.bottom()).to_string() == "00");
  const Face mixed = topo::make_face({vid(rep, {"2"}, Sign::Plus), vid(rep, {"3"}, Sign::Minus)});
  CHECK_THROWS_WITH_AS(rep.sign_of_simplex(mixed, u24.bottom()), doctest::Contains("not a face of S_G"),
                       std::invalid_argument);

  CHECK(rep.face_of_signs(SignVector::parse("++"), u24.bottom()) ==
        topo::make_face({vid(rep, {"1"}, Sign::Plus), vid(rep, {"2"}, Sign::Plus), vid(rep, {"3"}, Sign::Plus),
                         vid(rep, {"4"}, Sign::Plus)}));
  CHECK(rep.face_of_signs(SignVector::parse("00"), u24.bottom()).empty());
  CHECK(rep.face_of_signs(SignVector::parse("++"), flat(u24, {"1"})) == Face{vid(rep, {"1"}, Sign::Plus)});

  const auto u34 = fixtures::matroid("u34.json");
  const SphereRepresentation r34(u34, default_flag(u34));
  const Face edge = topo::make_face({vid(r34, {"3", "4"}, Sign::Plus), vid(r34, {"1", "4"}, Sign::Minus)});
  CHECK(r34.sign_of_simplex(edge, u34.bottom()).to_string() == "+-0");

  for (const char* name : kFixtures) {
    const auto lattice = fixtures::matroid(name);
    const SphereRepresentation r(lattice, default_flag(lattice));
    for (FlatId g = 0; g < static_cast<FlatId>(lattice.size()); ++g) {
      const auto k = r.build(g);
      for (const auto& f : k.maximal_faces()) CHECK(r.face_of_signs(r.sign_of_simplex(f, g), g) == f);
    }
  }
}

TEST_CASE("supports") {
  const auto u24 = fixtures::matroid("u24.json");
  const SphereRepresentation r24(u24, default_flag(u24));
  CHECK(r24.support(flat(u24, {"1"})) == std::vector<int>{1});
  CHECK(r24.support(u24.bottom()) == std::vector<int>{0, 1});
  const auto u34 = fixtures::matroid("u34.json");
  const SphereRepresentation r34(u34, default_flag(u34));
  CHECK(r34.support(flat(u34, {"1", "2"})) == std::vector<int>{2});
  for (const char* name : kFixtures) {
    const auto lattice = fixtures::matroid(name);
    for (const Flag& f : all_flags(lattice)) {
      const SphereRepresentation r(lattice, f);
      for (FlatId g = 0; g < static_cast<FlatId>(lattice.size()); ++g) {
        CHECK(static_cast<int>(r.support(g).size()) == lattice.corank(g));
        const auto k = r.build(g);
        const std::size_t expected = g == lattice.top() ? 0 : std::size_t{1} << lattice.corank(g);
        CHECK(k.maximal_faces().size() == expected);
        for (const auto& face : k.maximal_faces()) CHECK(face.size() == lattice.coat_above(g).size());
      }
    }
  }
}

TEST_CASE("intersection law") {
  const auto u24 = fixtures::matroid("u24.json");
  const SphereRepresentation r24(u24, default_flag(u24));
  CHECK(topo::intersect(r24.build(flat(u24, {"1"})), r24.build(flat(u24, {"2"}))).empty());
  const auto u34 = fixtures::matroid("u34.json");
  const SphereRepresentation r34(u34, default_flag(u34));
  CHECK(topo::intersect(r34.build(flat(u34, {"3", "4"})), r34.build(flat(u34, {"1", "4"}))).empty());
  const auto meet12 = topo::intersect(r34.build(flat(u34, {"1"})), r34.build(flat(u34, {"2"})));
  CHECK(meet12 == r34.build(flat(u34, {"1", "2"})));
  CHECK(meet12.vertices().size() == 2);
  for (const char* name : kFixtures) {
    const auto lattice = fixtures::matroid(name);
    CHECK(intersection_law_report(SphereRepresentation(lattice, default_flag(lattice))).ok());
  }
}

TEST_CASE("arrangements") {
  const auto u24 = fixtures::matroid("u24.json");
  const auto a24 = arrangement(SphereRepresentation(u24, default_flag(u24)));
  CHECK(a24.ambient.vertices().size() == 8);
  CHECK(a24.members.size() == 4);
  for (const auto& m : a24.members) CHECK(m.vertices().size() == 2);

  const auto rank1 = fixtures::matroid("rank1.json");
  const auto a1 = arrangement(SphereRepresentation(rank1, default_flag(rank1)));
  CHECK(a1.ambient.maximal_faces().size() == 2);
  CHECK(a1.ambient.dimension() == 0);
  CHECK(a1.members.size() == 1);
  CHECK(a1.members.front().empty());
  CHECK(arrangement_flats(a1).size() == 2);

  const auto fano = fixtures::matroid("fano_gf2.json");
  const SphereRepresentation rf(fano, default_flag(fano));
  const auto af = arrangement(rf);
  CHECK(af.ambient.vertices().size() == 14);
  CHECK(af.ambient.maximal_faces().size() == 8);
  for (const auto& f : af.ambient.maximal_faces()) CHECK(f.size() == 7);
  CHECK(af.members.size() == 7);
  std::vector<std::size_t> sizes;
  for (const auto& p : rf.parts()) sizes.push_back(p.size());
  CHECK(sizes == std::vector<std::size_t>{4, 2, 1});
}

TEST_CASE("arrangement axioms and roundtrip") {
  for (const char* name : kFixtures) {
    INFO(name);
    const auto lattice = fixtures::matroid(name);
    const SphereRepresentation rep(lattice, default_flag(lattice));
    const auto arr = arrangement(rep);
    const auto report = verify_arrangement(rep, arr, ArrangementOptions{true});
    for (const auto& c : report.checks()) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.passed);
    }
    const auto flats = arrangement_flats(arr);
    CHECK(isomorphic_by_atoms(lattice, flats));
    CHECK(verify_geometric(flats).ok());
  }
}

TEST_CASE("nerves of S_G are cross-polytope nerves") {
  for (const char* name : kFixtures) {
    const auto lattice = fixtures::matroid(name);
    for (const Flag& f : all_flags(lattice)) {
      const SphereRepresentation rep(lattice, f);
      for (FlatId g = 0; g < static_cast<FlatId>(lattice.size()); ++g) {
        const auto iso = rep.nerve_iso(g);
        INFO(name << " " << lattice.format(g) << " " << iso.witness);
        CHECK(iso.isomorphic);
        CHECK(topo::is_homology_sphere(rep.build(g), lattice.corank(g) - 1));
      }
      CHECK(topo::z2_free_check(rep.build(lattice.bottom()), rep.antipodal()).ok());
    }
  }
}

TEST_CASE("maximal face intersections follow sign-vector meets") {
  const auto u34 = fixtures::matroid("u34.json");
  const SphereRepresentation rep(u34, default_flag(u34));
  for (FlatId g = 0; g < static_cast<FlatId>(u34.size()); ++g) {
    const auto k = rep.build(g);
    const auto& facets = k.maximal_faces();
    for (const auto& a : facets) {
      for (const auto& b : facets) {
        const SignVector m = rep.sign_of_simplex(a, g).meet(rep.sign_of_simplex(b, g));
        CHECK(topo::face_intersection(a, b) == rep.face_of_signs(m, g));
      }
    }
  }
}
