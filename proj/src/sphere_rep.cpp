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

#include "hsr/sphere_rep.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hsr/topo/homology.hpp"

namespace hsr {

using topo::Face;
using topo::SimplicialComplex;

SphereRepresentation::SphereRepresentation(GeometricLattice lattice, Flag flag)
    : lattice_(std::move(lattice)), flag_(std::move(flag)) {
  const int r = lattice_.rank();
  if (flag_.length() != r) throw std::invalid_argument("flag length differs from lattice rank");
  coatoms_ = lattice_.coatoms();
  coatom_index_.assign(lattice_.size(), -1);
  for (std::size_t k = 0; k < coatoms_.size(); ++k) coatom_index_[static_cast<std::size_t>(coatoms_[k])] = static_cast<int>(k);
  part_of_.assign(coatoms_.size(), -1);
  parts_.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (FlatId c : lattice_.coat_above(flag_[static_cast<std::size_t>(i)])) {
      if (!lattice_.leq(flag_[static_cast<std::size_t>(i) + 1], c)) {
        parts_[static_cast<std::size_t>(i)].push_back(c);
        part_of_[static_cast<std::size_t>(coatom_index(c))] = i;
      }
    }
    if (parts_[static_cast<std::size_t>(i)].empty()) {
      throw std::logic_error("coatom part " + std::to_string(i) + " is empty; the lattice is not geometric");
    }
  }
}

int SphereRepresentation::coatom_index(FlatId coatom) const {
  const int k = coatom_index_.at(static_cast<std::size_t>(coatom));
  if (k < 0) throw std::invalid_argument(lattice_.format(coatom) + " is not a coatom");
  return k;
}

int SphereRepresentation::part_of(FlatId coatom) const {
  return part_of_.at(static_cast<std::size_t>(coatom_index(coatom)));
}

SignedVertex SphereRepresentation::vertex(int id) const {
  return SignedVertex{coatoms_.at(static_cast<std::size_t>(id / 2)), id % 2 == 0 ? Sign::Plus : Sign::Minus};
}

std::string SphereRepresentation::vertex_label(int id) const {
  const SignedVertex v = vertex(id);
  return lattice_.format(v.coatom) + to_char(v.sign);
}

std::string SphereRepresentation::face_label(const Face& face) const {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) out += (i ? ", " : "") + vertex_label(face[i]);
  return out + "}";
}

std::vector<int> SphereRepresentation::support(FlatId g) const {
  std::set<int> hit;
  for (FlatId c : lattice_.coat_above(g)) hit.insert(part_of(c));
  return {hit.begin(), hit.end()};
}

SimplicialComplex SphereRepresentation::build(FlatId g) const {
  const auto above = lattice_.coat_above(g);
  if (above.empty()) return {};
  // coat(G) grouped by part, in part order.
  std::map<int, std::vector<int>> blocks;
  for (FlatId c : above) blocks[part_of(c)].push_back(coatom_index(c));
  std::vector<Face> faces;
  const std::size_t k = blocks.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Face face;
    std::size_t bit = 0;
    for (const auto& [part, members] : blocks) {
      const Sign s = ((mask >> bit) & 1U) ? Sign::Minus : Sign::Plus;
      for (int idx : members) face.push_back(vertex_id(idx, s));
      ++bit;
    }
    faces.push_back(std::move(face));
  }
  return SimplicialComplex(std::move(faces));
}

SignVector SphereRepresentation::sign_of_simplex(const Face& face, FlatId g) const {
  SignVector out(static_cast<std::size_t>(rank()));
  for (int id : face) {
    const SignedVertex v = vertex(id);
    if (!lattice_.leq(g, v.coatom)) {
      throw std::invalid_argument("not a face of S_G: " + vertex_label(id) + " lies outside coat(" + lattice_.format(g) + ")");
    }
    const auto i = static_cast<std::size_t>(part_of(v.coatom));
    if (out[i] != Sign::Zero && out[i] != v.sign) {
      throw std::invalid_argument("not a face of S_G: mixed signs in part " + std::to_string(i));
    }
    out.set(i, v.sign);
  }
  return out;
}

Face SphereRepresentation::face_of_signs(const SignVector& v, FlatId g) const {
  if (static_cast<int>(v.size()) != rank()) throw std::invalid_argument("sign vector length differs from rank");
  std::vector<int> out;
  for (FlatId c : lattice_.coat_above(g)) {
    const Sign s = v[static_cast<std::size_t>(part_of(c))];
    if (s != Sign::Zero) out.push_back(vertex_id(coatom_index(c), s));
  }
  return topo::make_face(std::move(out));
}

bool SphereRepresentation::intersection_law_holds(FlatId g, FlatId h) const {
  return topo::intersect(build(g), build(h)) == build(lattice_.join(g, h));
}

topo::SimplicialMap SphereRepresentation::antipodal() const {
  std::map<int, int> swap;
  for (std::size_t k = 0; k < coatoms_.size(); ++k) {
    const int plus = vertex_id(static_cast<int>(k), Sign::Plus);
    swap[plus] = plus + 1;
    swap[plus + 1] = plus;
  }
  return topo::SimplicialMap(std::move(swap));
}

std::vector<SignVector> SphereRepresentation::facet_labels(FlatId g) const {
  std::vector<SignVector> labels;
  const SimplicialComplex complex = build(g);
  for (const auto& face : complex.maximal_faces()) labels.push_back(sign_of_simplex(face, g).compressed());
  return labels;
}

topo::NerveIsoResult SphereRepresentation::nerve_iso(FlatId g) const {
  return topo::cross_polytope_nerve_iso(build(g), lattice_.corank(g), facet_labels(g));
}

HomotopyArrangement arrangement(const SphereRepresentation& rep) {
  HomotopyArrangement out;
  out.rank = rep.rank();
  out.ambient = rep.build(rep.lattice().bottom());
  out.atoms = rep.lattice().atoms();
  for (FlatId a : out.atoms) out.members.push_back(rep.build(a));
  return out;
}

GeometricLattice arrangement_flats(const HomotopyArrangement& arrangement) {
  const int n = static_cast<int>(arrangement.members.size());
  if (n > 24) throw std::length_error("too many arrangement members to enumerate subsets");
  // Intersection of the members in each subset, built from the subset minus its top bit.
  std::vector<SimplicialComplex> meet(std::size_t{1} << n);
  meet[0] = arrangement.ambient;
  for (std::uint64_t s = 1; s < meet.size(); ++s) {
    const int top = 63 - std::countl_zero(s);
    const std::uint64_t rest = s & ~(std::uint64_t{1} << top);
    meet[s] = rest == 0 ? arrangement.members[static_cast<std::size_t>(top)]
                        : topo::intersect(meet[rest], arrangement.members[static_cast<std::size_t>(top)]);
  }
  std::vector<ElementSet> flats;
  for (std::uint64_t s = 0; s < meet.size(); ++s) {
    bool closed = true;
    for (int f = 0; f < n && closed; ++f) {
      const std::uint64_t bit = std::uint64_t{1} << f;
      if (!(s & bit)) closed = !(meet[s | bit] == meet[s]);
    }
    if (closed) flats.push_back(ElementSet(s));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GeometricLattice::from_flats(GroundSet(std::move(labels)), std::move(flats));
}

bool isomorphic_by_atoms(const GeometricLattice& lattice, const GeometricLattice& candidate) {
  const auto atoms = lattice.atoms();
  if (candidate.ground_set().size() != static_cast<int>(atoms.size())) return false;
  std::set<std::uint64_t> expected;
  for (FlatId x = 0; x < static_cast<FlatId>(lattice.size()); ++x) {
    ElementSet below;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (lattice.leq(atoms[i], x)) below.insert(static_cast<int>(i));
    }
    expected.insert(below.bits());
  }
  std::set<std::uint64_t> found;
  for (ElementSet s : candidate.flats()) found.insert(s.bits());
  return expected == found;
}

namespace {

std::string join_labels(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

}  // namespace

ValidationReport verify_arrangement(const SphereRepresentation& rep, const HomotopyArrangement& arr,
                                    ArrangementOptions options) {
  ValidationReport report;
  const GeometricLattice& lattice = rep.lattice();
  const int r = arr.rank;

  const auto ambient_profile = topo::reduced_homology(arr.ambient);
  report.add("ambient homology sphere", topo::is_homology_sphere(arr.ambient, r - 1),
             "S^" + std::to_string(r - 1) + " expected, got " + ambient_profile.summary());
  const auto nerve = rep.nerve_iso(lattice.bottom());
  report.add("ambient nerve is cross-polytope", nerve.isomorphic, nerve.witness);

  std::vector<std::string> bad_members;
  for (std::size_t i = 0; i < arr.members.size(); ++i) {
    if (!topo::is_homology_sphere(arr.members[i], r - 2)) bad_members.push_back(lattice.format(arr.atoms[i]));
  }
  report.add("members homology spheres", bad_members.empty(),
             bad_members.empty() ? "" : "not S^" + std::to_string(r - 2) + ": " + join_labels(bad_members));

  // Sphere test per flat, shared by the intersection and dimension-drop checks.
  std::map<FlatId, bool> sphere_of;
  auto flat_is_sphere = [&](FlatId g) {
    const auto [it, inserted] = sphere_of.try_emplace(g, false);
    if (inserted) it->second = topo::is_homology_sphere(rep.build(g), lattice.corank(g) - 1);
    return it->second;
  };

  std::string intersection_issue;
  long subsets = 0;
  const int n = static_cast<int>(arr.members.size());
  const int bound = n <= 16 ? n : 3;
  std::vector<int> chosen;
  std::function<void(int, const SimplicialComplex&, FlatId)> visit = [&](int next, const SimplicialComplex& acc,
                                                                         FlatId join) {
    for (int i = next; i < n && intersection_issue.empty(); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const SimplicialComplex meet = chosen.empty() ? arr.members[idx] : topo::intersect(acc, arr.members[idx]);
      const FlatId joined = chosen.empty() ? arr.atoms[idx] : lattice.join(join, arr.atoms[idx]);
      chosen.push_back(i);
      ++subsets;
      if (!(meet == rep.build(joined))) {
        intersection_issue = "intersection over atoms " + std::to_string(chosen.size()) + " differs from S_" + lattice.format(joined);
      } else if (!flat_is_sphere(joined)) {
        intersection_issue = "S_" + lattice.format(joined) + " is not a homology S^" + std::to_string(lattice.corank(joined) - 1);
      }
      if (static_cast<int>(chosen.size()) < bound) visit(i + 1, meet, joined);
      chosen.pop_back();
    }
  };
  visit(0, SimplicialComplex(), lattice.bottom());
  report.add("intersections are spheres", intersection_issue.empty(),
             intersection_issue.empty() ? std::to_string(subsets) + " member subsets" : intersection_issue);

  const auto z2 = topo::z2_free_check(arr.ambient, rep.antipodal());
  report.add("free Z2 action", z2.ok(), z2.ok() ? "" : z2.checks().back().detail);
  std::string asymmetric;
  for (std::size_t i = 0; i < arr.members.size() && asymmetric.empty(); ++i) {
    if (!(rep.antipodal().image(arr.members[i]) == arr.members[i])) asymmetric = lattice.format(arr.atoms[i]);
  }
  report.add("members Z2-invariant", asymmetric.empty(), asymmetric);

  std::string drop_issue;
  for (FlatId h = 0; h < static_cast<FlatId>(lattice.size()) && drop_issue.empty(); ++h) {
    for (std::size_t i = 0; i < arr.atoms.size() && drop_issue.empty(); ++i) {
      const FlatId g = arr.atoms[i];
      if (lattice.leq(g, h)) continue;
      const FlatId joined = lattice.join(g, h);
      if (lattice.rank(joined) != lattice.rank(h) + 1) {
        drop_issue = "rank(" + lattice.format(g) + " v " + lattice.format(h) + ") is not rank(H)+1";
      } else if (!(topo::intersect(rep.build(h), arr.members[i]) == rep.build(joined)) || !flat_is_sphere(joined)) {
        drop_issue = "S_" + lattice.format(h) + " meets S_" + lattice.format(g) + " in no S^" +
                     std::to_string(lattice.corank(h) - 2);
      }
    }
  }
  report.add("dimension drops by one", drop_issue.empty(), drop_issue);

  if (options.exact_nerve) report.append(sphere_report(rep));
  return report;
}

ValidationReport intersection_law_report(const SphereRepresentation& rep) {
  const GeometricLattice& lattice = rep.lattice();
  const auto n = static_cast<FlatId>(lattice.size());
  std::vector<SimplicialComplex> complexes;
  for (FlatId g = 0; g < n; ++g) complexes.push_back(rep.build(g));
  std::string issue;
  long pairs = 0;
  for (FlatId g = 0; g < n && issue.empty(); ++g) {
    for (FlatId h = g; h < n && issue.empty(); ++h) {
      ++pairs;
      const auto lhs = topo::intersect(complexes[static_cast<std::size_t>(g)], complexes[static_cast<std::size_t>(h)]);
      if (!(lhs == complexes[static_cast<std::size_t>(lattice.join(g, h))])) {
        issue = "S_" + lattice.format(g) + " meets S_" + lattice.format(h) + " outside S_" + lattice.format(lattice.join(g, h));
      }
    }
  }
  ValidationReport report;
  report.add("intersection law", issue.empty(), issue.empty() ? std::to_string(pairs) + " flat pairs" : issue);
  return report;
}

ValidationReport sphere_report(const SphereRepresentation& rep) {
  const GeometricLattice& lattice = rep.lattice();
  std::string count_issue;
  std::string nerve_issue;
  std::string homology_issue;
  for (FlatId g = 0; g < static_cast<FlatId>(lattice.size()); ++g) {
    const auto complex = rep.build(g);
    const int corank = lattice.corank(g);
    const std::size_t coat = lattice.coat_above(g).size();
    const bool counts = corank == 0 ? complex.empty()
                                    : complex.maximal_faces().size() == (std::size_t{1} << corank) &&
                                          std::all_of(complex.maximal_faces().begin(), complex.maximal_faces().end(),
                                                      [coat](const Face& f) { return f.size() == coat; });
    if (!counts && count_issue.empty()) count_issue = "S_" + lattice.format(g) + " has the wrong facet count or size";
    const auto nerve = rep.nerve_iso(g);
    if (!nerve.isomorphic && nerve_issue.empty()) nerve_issue = "S_" + lattice.format(g) + ": " + nerve.witness;
    if (!topo::is_homology_sphere(complex, corank - 1) && homology_issue.empty()) {
      homology_issue = "S_" + lattice.format(g) + " has " + topo::reduced_homology(complex).summary();
    }
  }
  const std::string all = std::to_string(lattice.size()) + " flats";
  ValidationReport report;
  report.add("facet counts", count_issue.empty(), count_issue.empty() ? all : count_issue);
  report.add("nerve is cross-polytope", nerve_issue.empty(), nerve_issue.empty() ? all : nerve_issue);
  report.add("homology spheres", homology_issue.empty(), homology_issue.empty() ? all : homology_issue);
  return report;
}

}  // namespace hsr
