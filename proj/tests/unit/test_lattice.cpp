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
#include "hsr/lattice.hpp"
#include "hsr/matroid_input.hpp"

using namespace hsr;
using fixtures::flat;

namespace {

std::vector<std::string> labels(const GeometricLattice& lattice, FlatId f) {
  return lattice.ground_set().labels_of(lattice.flat(f));
}

}  // namespace

TEST_CASE("exact rationals and ranks") {
  CHECK(parse_rational(" 2 / 6 ") == Rational(1, 3));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));

  const RationalColumns cols{{1, 0}, {0, 1}, {1, 1}, {Rational(1, 2), Rational(1, 2)}};
  CHECK(rank_over_rationals(cols, ElementSet::of({0, 1})) == 2);
  CHECK(rank_over_rationals(cols, ElementSet::of({2, 3})) == 1);
  CHECK(rank_over_rationals(cols, ElementSet{}) == 0);

  const ModularColumns mod{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  CHECK(rank_mod_prime(mod, ElementSet::of({0, 1, 2}), 2) == 2);
  CHECK(rank_mod_prime(mod, ElementSet::of({0, 1, 2}), 3) == 3);

  const RationalColumns plane{{1, 0, 0}, {0, 1, 0}};
  const auto normal = hyperplane_normal(plane, ElementSet::of({0, 1}), 3);
  CHECK(normal == std::vector<Integer>{0, 0, 1});
  CHECK(dot_sign(normal, {Rational(1), Rational(5), Rational(-1, 7)}) == -1);
}

TEST_CASE("uniform U(2,4) lattice") {
  const auto lattice = fixtures::matroid("u24.json");
  CHECK(lattice.size() == 6);
  CHECK(lattice.rank() == 2);
  CHECK(lattice.atoms().size() == 4);
  CHECK(lattice.flat(lattice.closure(ElementSet::of({0, 2}))) == lattice.ground_set().all());
  CHECK(lattice.closure(ElementSet::of({1})) == flat(lattice, {"2"}));
  CHECK(lattice.meet(flat(lattice, {"1"}), flat(lattice, {"2"})) == lattice.bottom());
  CHECK(lattice.join(flat(lattice, {"1"}), flat(lattice, {"2"})) == lattice.top());
  CHECK(lattice.coat_above(lattice.bottom()).size() == 4);
  CHECK(lattice.coat_above(lattice.top()).empty());
  for (FlatId x = 0; x < static_cast<FlatId>(lattice.size()); ++x) CHECK(lattice.join(x, lattice.bottom()) == x);
}

TEST_CASE("Fano lattice over GF(2)") {
  const auto lattice = fixtures::matroid("fano_gf2.json");
  CHECK(lattice.rank() == 3);
  CHECK(lattice.atoms().size() == 7);
  CHECK(lattice.coatoms().size() == 7);
  CHECK(labels(lattice, lattice.closure(lattice.ground_set().subset({"1", "2"}))) ==
        std::vector<std::string>{"1", "2", "4"});
  const FlatId l1 = flat(lattice, {"1", "2", "4"});
  const FlatId l2 = flat(lattice, {"1", "3", "5"});
  CHECK(lattice.meet(l1, l2) == flat(lattice, {"1"}));
  CHECK(lattice.coat_above(flat(lattice, {"1"})).size() == 3);
  CHECK(verify_geometric(lattice).ok());
}

TEST_CASE("rank from lattice equals column rank") {
  LinearInput desc;
  desc.columns = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  const LinearMatroid matroid(desc);
  const auto lattice = load_matroid(desc);
  for (std::uint64_t bits = 0; bits < 128; ++bits) {
    CHECK(lattice.subset_rank(ElementSet(bits)) == rank_over_rationals(desc.columns, ElementSet(bits)));
    CHECK(lattice.flat(lattice.closure(ElementSet(bits))) == matroid.closure(ElementSet(bits)));
  }
}

TEST_CASE("closure is a closure operator") {
  for (const char* name : {"u34.json", "fano_gf2.json", "nonfano_q.json", "n134.json"}) {
    const auto lattice = fixtures::matroid(name);
    const int n = lattice.ground_set().size();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const ElementSet ca = lattice.closure_set(ElementSet(a));
      CHECK(ElementSet(a).subset_of(ca));
      CHECK(lattice.closure_set(ca) == ca);
      for (int e = 0; e < n; ++e) {
        ElementSet b(a);
        b.insert(e);
        CHECK(ca.subset_of(lattice.closure_set(b)));
      }
    }
  }
}

TEST_CASE("geometric axioms") {
  for (const char* name : {"u24.json", "u34.json", "bool3.json", "fano_gf2.json", "nonfano_q.json", "n134.json",
                           "rank1.json"}) {
    INFO(name);
    CHECK(verify_geometric(fixtures::matroid(name)).ok());
  }
  CHECK(fixtures::matroid("u34.json").size() == 12);

  const auto broken = build_lattice(io::parse_matroid(io::read_json(fixtures::data("broken.json"))));
  const auto report = verify_geometric(broken);
  CHECK_FALSE(report.passed("meet is intersection"));
  CHECK(report.find("meet is intersection")->detail.rfind("not meet-closed", 0) == 0);
  CHECK_THROWS_WITH_AS(fixtures::matroid("broken.json"), doctest::Contains("not meet-closed"), InputError);

  const auto chain = build_lattice(io::parse_matroid(io::read_json(fixtures::data("chain3.json"))));
  const auto chain_report = verify_geometric(chain);
  CHECK_FALSE(chain_report.passed("atomic"));
  CHECK(chain_report.passed("meet is intersection"));
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(load_matroid(UniformInput{5, 3}), InputError);
  LinearInput bad;
  bad.field = Field::PrimeField;
  bad.p = 4;
  bad.columns = {{1, 0}};
  CHECK_THROWS_AS(load_matroid(bad), InputError);
  CHECK_THROWS_AS(io::read_json(fixtures::data("malformed.json")), InputError);
  CHECK_THROWS_AS(io::read_json(fixtures::data("missing.json")), InputError);
}

TEST_CASE("default flags") {
  const auto u24 = fixtures::matroid("u24.json");
  CHECK(default_flag(u24).chain == std::vector<FlatId>{u24.bottom(), flat(u24, {"1"}), u24.top()});
  const auto u34 = fixtures::matroid("u34.json");
  CHECK(default_flag(u34).chain ==
        std::vector<FlatId>{u34.bottom(), flat(u34, {"1"}), flat(u34, {"1", "2"}), u34.top()});
  const auto fano = fixtures::matroid("fano_gf2.json");
  CHECK(default_flag(fano).chain ==
        std::vector<FlatId>{fano.bottom(), flat(fano, {"1"}), flat(fano, {"1", "2", "4"}), fano.top()});
  CHECK(all_flags(u34).size() == 12);
  CHECK(all_flags(fano).size() == 21);
  CHECK_THROWS_AS(fixtures::flag(u34, {{}, {"1"}, {"1", "2", "3", "4"}}), InputError);
  CHECK_THROWS_AS(fixtures::flag(u34, {{}, {"1"}, {"1", "2", "3"}, {"1", "2", "3", "4"}}), InputError);
}

TEST_CASE("flag restriction") {
  const auto u24 = fixtures::matroid("u24.json");
  const Flag f24 = default_flag(u24);
  CHECK(flag_restrict(u24, f24, flat(u24, {"2"})).upper == std::vector<FlatId>{flat(u24, {"2"}), u24.top()});
  CHECK(flag_restrict(u24, f24, u24.bottom()).upper == f24.chain);

  const auto u34 = fixtures::matroid("u34.json");
  const Flag f34 = default_flag(u34);
  CHECK(flag_restrict(u34, f34, flat(u34, {"3", "4"})).upper ==
        std::vector<FlatId>{flat(u34, {"3", "4"}), u34.top()});

  for (const char* name : {"u24.json", "u34.json", "bool3.json", "fano_gf2.json", "n134.json"}) {
    const auto lattice = fixtures::matroid(name);
    for (const Flag& f : all_flags(lattice)) {
      for (FlatId x = 0; x < static_cast<FlatId>(lattice.size()); ++x) {
        const auto r = flag_restrict(lattice, f, x);
        CHECK(static_cast<int>(r.upper.size()) == lattice.corank(x) + 1);
        for (std::size_t i = 0; i + 1 < r.upper.size(); ++i) CHECK(lattice.rank(r.upper[i + 1]) == lattice.rank(r.upper[i]) + 1);
        CHECK(r.lower.front() == lattice.bottom());
        CHECK(r.lower.back() == x);
      }
    }
  }

  // Meets with a flag can skip ranks: this lower chain has no rank-1 step.
  const Flag g = fixtures::flag(u34, {{}, {"3"}, {"3", "4"}, {"1", "2", "3", "4"}});
  CHECK(flag_restrict(u34, g, flat(u34, {"1", "2"})).lower == std::vector<FlatId>{u34.bottom(), flat(u34, {"1", "2"})});
}

TEST_CASE("reindexing by labels") {
  const auto n134 = fixtures::matroid("n134.json");
  const GroundSet reversed({"4", "3", "2", "1"});
  const auto moved = n134.reindexed(reversed);
  CHECK(moved.find(reversed.subset({"1", "3", "4"})).has_value());
  CHECK(moved.size() == n134.size());
  CHECK_THROWS_AS(n134.reindexed(GroundSet({"1", "2", "3", "5"})), InputError);
}
