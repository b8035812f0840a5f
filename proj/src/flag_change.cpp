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

#include "hsr/flag_change.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "hsr/topo/homology.hpp"

namespace hsr {

namespace {

using Chain = std::vector<FlatId>;

// Index j with chain[j] <= x but not chain[j+1] <= x; x must lie below the chain top.
int part_in_chain(const GeometricLattice& lattice, const Chain& chain, FlatId x) {
  int j = 0;
  while (j + 1 < static_cast<int>(chain.size()) && lattice.leq(chain[static_cast<std::size_t>(j) + 1], x)) ++j;
  return j;
}

// Selection for two maximal chains from a common flat B up to the top, where
// every coatom above B lies in exactly one part of each chain. Entry i lies in
// part i of `first`.
Chain select_above(const GeometricLattice& lattice, const Chain& first, const Chain& second) {
  const int k = static_cast<int>(first.size()) - 1;
  if (k == 1) return {first.front()};
  const auto candidates = lattice.coat_above(first.front());
  if (first == second) {
    Chain out;
    for (int i = 0; i < k; ++i) {
      for (FlatId c : candidates) {
        if (part_in_chain(lattice, first, c) == i) {
          out.push_back(c);
          break;
        }
      }
    }
    return out;
  }
  // The join chain {G_j v F_1} is maximal above F_1 and collapses exactly once,
  // at the step of `second` that first reaches F_1.
  const FlatId atom = first[1];
  Chain joined;
  for (FlatId g : second) {
    const FlatId x = lattice.join(g, atom);
    if (joined.empty() || joined.back() != x) joined.push_back(x);
  }
  int collapse = 0;
  while (!lattice.leq(atom, second[static_cast<std::size_t>(collapse) + 1])) ++collapse;

  const Chain upper(first.begin() + 1, first.end());
  Chain out;
  const FlatId base = second[static_cast<std::size_t>(collapse)];
  const auto it = std::find_if(candidates.begin(), candidates.end(),
                               [&](FlatId c) { return lattice.leq(base, c) && !lattice.leq(atom, c); });
  if (it == candidates.end()) throw std::logic_error("no coatom above " + lattice.format(base) + " avoids " + lattice.format(atom));
  out.push_back(*it);
  const Chain rest = select_above(lattice, upper, joined);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

CrossSelection select_cross_coatoms(const GeometricLattice& lattice, const Flag& first, const Flag& second) {
  if (first.length() != lattice.rank() || second.length() != lattice.rank()) {
    throw InputError("incomplete flag: flags must have length " + std::to_string(lattice.rank()));
  }
  CrossSelection out;
  if (lattice.rank() == 0) return out;
  out.coatoms = select_above(lattice, first.chain, second.chain);
  for (FlatId c : out.coatoms) {
    out.first_parts.push_back(part_in_chain(lattice, first.chain, c));
    out.second_parts.push_back(part_in_chain(lattice, second.chain, c));
  }
  return out;
}

ValidationReport verify_cross_selection(const GeometricLattice& lattice, const Flag& first, const Flag& second,
                                        const CrossSelection& selection) {
  ValidationReport report;
  const int r = lattice.rank();
  std::string membership;
  std::set<int> first_seen;
  std::set<int> second_seen;
  for (std::size_t i = 0; i < selection.coatoms.size(); ++i) {
    const FlatId c = selection.coatoms[i];
    if (lattice.rank(c) != r - 1 && membership.empty()) membership = lattice.format(c) + " is not a coatom";
    const int fp = part_in_chain(lattice, first.chain, c);
    if (fp != static_cast<int>(i) && membership.empty()) {
      membership = "C_" + std::to_string(i) + " = " + lattice.format(c) + " lies in part " + std::to_string(fp);
    }
    first_seen.insert(fp);
    second_seen.insert(part_in_chain(lattice, second.chain, c));
  }
  const bool sized = static_cast<int>(selection.coatoms.size()) == r;
  report.add("selection in first parts", sized && membership.empty(), sized ? membership : "wrong selection size");
  report.add("first parts distinct", static_cast<int>(first_seen.size()) == r);
  report.add("second parts distinct", static_cast<int>(second_seen.size()) == r);
  return report;
}

bool cross_selection_exists(const GeometricLattice& lattice, const Flag& first, const Flag& second) {
  const int r = lattice.rank();
  const auto coatoms = lattice.coatoms();
  std::vector<bool> used_second(static_cast<std::size_t>(r), false);
  std::function<bool(int)> place = [&](int part) {
    if (part == r) return true;
    for (FlatId c : coatoms) {
      if (part_in_chain(lattice, first.chain, c) != part) continue;
      const auto sp = static_cast<std::size_t>(part_in_chain(lattice, second.chain, c));
      if (used_second[sp]) continue;
      used_second[sp] = true;
      if (place(part + 1)) return true;
      used_second[sp] = false;
    }
    return false;
  };
  return place(0);
}

RetractDescriptor retraction_map(const GeometricLattice& lattice, const Flag& first, const Flag& second) {
  RetractDescriptor out{SphereRepresentation(lattice, first), SphereRepresentation(lattice, second),
                        select_cross_coatoms(lattice, first, second), {}, {}, {}};
  const auto& rep = out.first;
  std::map<int, int> to_first;
  std::map<int, int> to_second;
  std::vector<FlatId> by_second_part(out.selection.coatoms.size());
  for (std::size_t i = 0; i < out.selection.coatoms.size(); ++i) {
    by_second_part[static_cast<std::size_t>(out.selection.second_parts[i])] = out.selection.coatoms[i];
  }
  for (FlatId g : rep.coatoms()) {
    const FlatId target_first = out.selection.coatoms[static_cast<std::size_t>(out.first.part_of(g))];
    const FlatId target_second = by_second_part[static_cast<std::size_t>(out.second.part_of(g))];
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const int v = rep.vertex_id(SignedVertex{g, s});
      to_first[v] = rep.vertex_id(SignedVertex{target_first, s});
      to_second[v] = rep.vertex_id(SignedVertex{target_second, s});
    }
  }
  out.retract_first = topo::SimplicialMap(std::move(to_first));
  out.retract_second = topo::SimplicialMap(std::move(to_second));

  std::vector<topo::Face> faces;
  const std::size_t k = out.selection.coatoms.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> face;
    for (std::size_t i = 0; i < k; ++i) {
      face.push_back(rep.vertex_id(SignedVertex{out.selection.coatoms[i], ((mask >> i) & 1U) ? Sign::Minus : Sign::Plus}));
    }
    faces.push_back(std::move(face));
  }
  out.cross_polytope = topo::SimplicialComplex(std::move(faces));
  return out;
}

namespace {

std::string retraction_issue(const topo::SimplicialMap& f, const topo::SimplicialComplex& ambient,
                             const topo::SimplicialComplex& polytope) {
  if (auto v = topo::simplicial_violation(f, ambient, polytope); !v.empty()) return v;
  for (const auto& [v, w] : f.vertex_map()) {
    if (f(w) != w) return "not idempotent at vertex " + std::to_string(v);
  }
  for (int v : polytope.vertices()) {
    if (f(v) != v) return "moves cross-polytope vertex " + std::to_string(v);
  }
  return {};
}

}  // namespace

ValidationReport verify_retraction(const RetractDescriptor& d) {
  const GeometricLattice& lattice = d.first.lattice();
  ValidationReport report;
  report.append(verify_cross_selection(lattice, d.first.flag(), d.second.flag(), d.selection));

  const auto first_ambient = d.first.build(lattice.bottom());
  const auto second_ambient = d.second.build(lattice.bottom());
  const bool inside = d.cross_polytope.is_subcomplex_of(first_ambient) && d.cross_polytope.is_subcomplex_of(second_ambient);
  report.add("cross-polytope in both", inside);

  const std::string first_issue = retraction_issue(d.retract_first, first_ambient, d.cross_polytope);
  report.add("first retraction", first_issue.empty(), first_issue);
  const std::string second_issue = retraction_issue(d.retract_second, second_ambient, d.cross_polytope);
  report.add("second retraction", second_issue.empty(), second_issue);
  const std::string composite = topo::simplicial_violation(d.retract_first, first_ambient, second_ambient);
  report.add("composite simplicial", composite.empty(), composite);

  const int r = lattice.rank();
  const auto p1 = topo::reduced_homology(first_ambient);
  const auto p2 = topo::reduced_homology(second_ambient);
  const auto p3 = topo::reduced_homology(d.cross_polytope);
  const bool spheres = p1.is_sphere_profile(r - 1) && p2.is_sphere_profile(r - 1) && p3.is_sphere_profile(r - 1);
  report.add("sphere profiles", spheres, p1.summary() + " | " + p2.summary() + " | " + p3.summary());
  return report;
}

}  // namespace hsr
