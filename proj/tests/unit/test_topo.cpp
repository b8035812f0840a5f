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
#include "hsr/exact.hpp"
#include "hsr/sphere_rep.hpp"
#include "hsr/topo/complex.hpp"
#include "hsr/topo/homology.hpp"
#include "hsr/topo/maps.hpp"
#include "hsr/topo/poset.hpp"

using namespace hsr;
using namespace hsr::topo;

namespace {

SimplicialComplex complex_file(const std::string& name) {
  std::vector<Face> faces;
  const auto json = io::read_json(fixtures::data(name));
  for (const auto& f : json.at("maximal_faces")) faces.push_back(f.get<Face>());
  return SimplicialComplex(std::move(faces));
}

int dense_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < width && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& top = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational t = rows[r][c] / top[c];
      for (std::size_t j = c; j < width; ++j) rows[r][j] -= t * top[j];
    }
    ++rank;
  }
  return rank;
}

// Betti numbers from ranks of boundary matrices over Q, independent of the
// Smith normal form.
std::vector<long> rational_betti(const SimplicialComplex& k) {
  std::vector<long> out;
  const int top = k.dimension();
  std::vector<int> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int d = 0; d <= top; ++d) {
    const SparseMatrix m = boundary_matrix(k, d);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m.rows),
                                            std::vector<Rational>(static_cast<std::size_t>(m.cols)));
    for (const auto& e : m.entries) rows[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] += Rational(e.value);
    rank[static_cast<std::size_t>(d)] = dense_rank(std::move(rows));
  }
  for (int d = 0; d <= top; ++d) {
    const long faces = static_cast<long>(k.faces_of_dimension(d).size());
    out.push_back(faces - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d) + 1]);
  }
  return out;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (const auto& f : k.all_faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

Poset chain_poset(int n) {
  return Poset(n, [](int a, int b) { return a <= b; });
}

}  // namespace

TEST_CASE("faces and dimension") {
  const auto octahedron = complex_file("octahedron.json");
  CHECK(octahedron.all_faces().size() == 26);
  CHECK(octahedron.faces_of_dimension(0).size() == 6);
  CHECK(octahedron.faces_of_dimension(1).size() == 12);
  CHECK(octahedron.faces_of_dimension(2).size() == 8);
  CHECK(octahedron == cross_polytope_boundary(3));
  const SimplicialComplex empty;
  CHECK(empty.all_faces().empty());
  CHECK(empty.dimension() == -1);
  const SimplicialComplex absorbed({{1, 2}, {1, 2, 3}, {3, 1}});
  CHECK(absorbed.maximal_faces() == std::vector<Face>{{1, 2, 3}});
}

TEST_CASE("nerves") {
  const auto two = nerve({{1, 2}, {3}});
  CHECK(two.maximal_faces() == std::vector<Face>{{0}, {1}});
  const auto cross = cross_polytope_boundary(3);
  CHECK(cross_polytope_nerve_iso(cross, 3).isomorphic);
  for (int d = 1; d <= 4; ++d) CHECK(cross_polytope_nerve_iso(cross_polytope_boundary(d), d).isomorphic);
  const SimplicialComplex cone({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}});
  const auto result = cross_polytope_nerve_iso(cone, 2);
  CHECK_FALSE(result.isomorphic);
  CHECK_FALSE(result.witness.empty());
  CHECK(cross_polytope_nerve_iso(SimplicialComplex(), 0).isomorphic);
  const SimplicialComplex disjoint({{0, 1}, {2, 3}, {4}});
  CHECK(nerve_of_maximal_faces(disjoint).maximal_faces().size() == 3);
  CHECK(nerve_of_maximal_faces(disjoint).dimension() == 0);
}

TEST_CASE("smith normal form") {
  SparseMatrix m{2, 2, {{0, 0, 2}, {0, 1, 4}, {1, 0, 6}, {1, 1, 8}}};
  CHECK(smith_invariants(m) == std::vector<Integer>{2, 4});
  SparseMatrix diag{3, 3, {{0, 0, 4}, {1, 1, 6}, {2, 2, 1}}};
  CHECK(smith_invariants(diag) == std::vector<Integer>{1, 2, 12});
  SparseMatrix zero{2, 3, {}};
  CHECK(smith_invariants(zero).empty());
}

TEST_CASE("sphere profiles of cross-polytopes and simplices") {
  for (int d = 1; d <= 5; ++d) {
    INFO("d = " << d);
    const auto cross = cross_polytope_boundary(d);
    CHECK(is_homology_sphere(cross, d - 1));
    CHECK(euler_characteristic(cross) == 1 + ((d - 1) % 2 == 0 ? 1 : -1));
    CHECK(is_homology_sphere(simplex_boundary(d), d - 1));
  }
  CHECK(reduced_homology(simplex_boundary(3)).summary() == "b0=0 b1=0 b2=1");
}

TEST_CASE("torsion of the projective plane") {
  const auto rp2 = complex_file("rp2.json");
  const auto profile = reduced_homology(rp2);
  CHECK(profile.torsion(1) == std::vector<Integer>{2});
  CHECK(profile.betti(1) == 0);
  CHECK(profile.betti(2) == 0);
  CHECK_FALSE(profile.is_sphere_profile(2));
  CHECK(rational_betti(rp2) == std::vector<long>{0, 0, 0});
}

TEST_CASE("homology conventions") {
  CHECK(is_homology_sphere(SimplicialComplex(), -1));
  CHECK_FALSE(is_homology_sphere(SimplicialComplex(), 0));
  CHECK(reduced_homology(SimplicialComplex()).dims.empty());
  CHECK(is_homology_point(SimplicialComplex::simplex({0, 1, 2})));
  CHECK_FALSE(is_homology_point(SimplicialComplex()));
  CHECK_FALSE(is_homology_point(SimplicialComplex({{0}, {1}})));
}

TEST_CASE("dual oracle on torsion-free fixtures") {
  std::vector<SimplicialComplex> complexes{cross_polytope_boundary(3), simplex_boundary(4),
                                           SimplicialComplex({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})};
  for (const char* name : {"u24.json", "u34.json", "bool3.json"}) {
    const auto lattice = fixtures::matroid(name);
    const SphereRepresentation rep(lattice, default_flag(lattice));
    for (FlatId g = 0; g < static_cast<FlatId>(lattice.size()); ++g) complexes.push_back(rep.build(g));
  }
  for (const auto& k : complexes) {
    if (k.empty()) continue;
    const auto profile = reduced_homology(k);
    const auto betti = rational_betti(k);
    for (int d = 0; d <= k.dimension(); ++d) CHECK(profile.betti(d) == betti[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("order complexes") {
  CHECK(order_complex(chain_poset(3)).maximal_faces() == std::vector<Face>{{0, 1, 2}});
  const SimplicialComplex square({{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto fp = face_poset(square);
  CHECK(fp.faces.size() == 8);
  CHECK(is_homology_sphere(order_complex(fp.poset), 1));
  for (const auto& k : {cross_polytope_boundary(3), complex_file("rp2.json"), simplex_boundary(3)}) {
    CHECK(reduced_homology(order_complex(face_poset(k).poset)) == reduced_homology(k));
  }
  const Poset p = chain_poset(4);
  CHECK(p.covers().size() == 3);
  CHECK(p.minimal_elements() == std::vector<int>{0});
  CHECK(p.maximal_elements() == std::vector<int>{3});
  CHECK(p.upper_set(1) == std::vector<int>{1, 2, 3});
  CHECK_THROWS(Poset(2, [](int, int) { return true; }));
}

TEST_CASE("free involutions") {
  const auto octahedron = cross_polytope_boundary(3);
  std::map<int, int> swap;
  for (int v = 0; v < 6; ++v) swap[v] = v ^ 1;
  CHECK(z2_free_check(octahedron, SimplicialMap(swap)).ok());

  const SimplicialComplex edge({{0, 1}});
  const auto report = z2_free_check(edge, SimplicialMap({{0, 1}, {1, 0}}));
  CHECK(report.passed("simplicial"));
  CHECK_FALSE(report.passed("free"));

  const auto u24 = fixtures::matroid("u24.json");
  const SphereRepresentation rep(u24, default_flag(u24));
  CHECK(z2_free_check(rep.build(u24.bottom()), rep.antipodal()).ok());
}

TEST_CASE("simplicial maps") {
  const SimplicialComplex path({{0, 1}, {1, 2}});
  const SimplicialMap fold({{0, 0}, {1, 1}, {2, 0}});
  CHECK(simplicial_violation(fold, path, SimplicialComplex({{0, 1}})).empty());
  CHECK_FALSE(simplicial_violation(SimplicialMap({{0, 0}, {1, 2}, {2, 1}}), path, path).empty());
  CHECK(fold.image(path).maximal_faces() == std::vector<Face>{{0, 1}});
  CHECK(fold.compose_after(fold)(2) == 0);
}

TEST_CASE("carrier lemma hypotheses") {
  const auto x = SimplicialComplex::simplex({0, 1, 2});
  const CoverFamily single{x, {x}};
  const SimplicialMap id({{0, 0}, {1, 1}, {2, 2}});
  CHECK(carrier_check(id, single, single).ok());

  // Source members meet, target members do not.
  const SimplicialComplex source_ambient({{0, 1}, {1, 2}});
  const CoverFamily a{source_ambient, {SimplicialComplex({{0, 1}}), SimplicialComplex({{1, 2}})}};
  const SimplicialComplex target_ambient({{0, 1}, {2, 3}});
  const CoverFamily b{target_ambient, {SimplicialComplex({{0, 1}}), SimplicialComplex({{2, 3}})}};
  const auto report = carrier_check(SimplicialMap({{0, 0}, {1, 1}, {2, 3}}), a, b);
  CHECK(report.passed("source cover"));
  CHECK_FALSE(report.passed("intersection patterns agree"));
  CHECK_THROWS_AS(carrier_check(id, single, CoverFamily{x, {x, x}}), std::invalid_argument);
}

TEST_CASE("Quillen fibers") {
  const Poset p = chain_poset(3);
  CHECK(quillen_fibers_check(p, p, {0, 1, 2}).ok());
  const Poset antichain(2, [](int a, int b) { return a == b; });
  const Poset point(1, [](int, int) { return true; });
  CHECK_FALSE(quillen_fibers_check(antichain, point, {0, 0}).ok());
  CHECK_THROWS_AS(quillen_fibers_check(p, p, {2, 1, 0}), std::invalid_argument);
}

TEST_CASE("order homotopies") {
  const Poset p = chain_poset(4);
  const auto to_min = order_homotopy_image(p, {0, 0, 0, 0});
  CHECK(to_min.lowering);
  CHECK(to_min.elements == std::vector<int>{0});
  CHECK(to_min.report.ok());
  const auto id = order_homotopy_image(p, {0, 1, 2, 3});
  CHECK(id.elements.size() == 4);
  const Poset antichain(3, [](int a, int b) { return a == b; });
  CHECK_THROWS_AS(order_homotopy_image(antichain, {1, 0, 2}), std::invalid_argument);
}
