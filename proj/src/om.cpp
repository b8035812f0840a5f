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

#include "hsr/om.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hsr/matroid_input.hpp"
#include "hsr/topo/homology.hpp"

namespace hsr {

using topo::Face;
using topo::SimplicialComplex;

namespace {


ElementSet zero_set(const SignVector& x) { return ElementSet::of(x.zero_set()); }

}  // namespace

std::vector<SignVector> cocircuits_from_vectors(const VectorConfig& config) {
  if (static_cast<int>(config.columns.size()) != config.ground.size()) {
    throw InputError("column count differs from ground set size");
  }
  for (const auto& c : config.columns) {
    if (static_cast<int>(c.size()) != config.dimension) throw InputError("column length differs from dimension");
  }
  LinearInput desc;
  desc.columns = config.columns;
  const LinearMatroid matroid(desc);
  const int r = matroid.rank(config.ground.all());
  if (r != config.dimension) {
    throw InputError("rank-deficient configuration: rank " + std::to_string(r) + " in dimension " +
                     std::to_string(config.dimension));
  }
  std::vector<SignVector> out;
  for (ElementSet h : matroid.flats()) {
    if (matroid.rank(h) != r - 1) continue;
    const auto normal = hyperplane_normal(config.columns, h, config.dimension);
    SignVector x(config.columns.size());
    for (std::size_t e = 0; e < config.columns.size(); ++e) {
      const int s = dot_sign(normal, config.columns[e]);
      x.set(e, s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero));
    }
    out.push_back(x);
    out.push_back(-x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CovectorSet CovectorSet::span(GroundSet ground, const std::vector<SignVector>& cocircuits) {
  const auto n = static_cast<std::size_t>(ground.size());
  std::set<SignVector> input(cocircuits.begin(), cocircuits.end());
  for (const auto& c : cocircuits) {
    if (c.size() != n) throw std::invalid_argument("sign vector length differs from ground set size");
    if (!input.contains(-c)) throw std::invalid_argument("cocircuits are not closed under negation: " + c.to_string());
  }
  // Every covector composes from cocircuits left to right.
  std::set<SignVector> seen{SignVector(n)};
  std::vector<SignVector> frontier{SignVector(n)};
  while (!frontier.empty()) {
    std::vector<SignVector> next;
    for (const auto& x : frontier) {
      for (const auto& c : input) {
        SignVector y = x.compose(c);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  CovectorSet out;
  out.ground_ = std::move(ground);
  out.covectors_.assign(seen.begin(), seen.end());
  return out;
}

std::optional<int> CovectorSet::index_of(const SignVector& x) const {
  const auto it = std::lower_bound(covectors_.begin(), covectors_.end(), x);
  if (it == covectors_.end() || !(*it == x)) return std::nullopt;
  return static_cast<int>(it - covectors_.begin());
}

std::vector<SignVector> CovectorSet::cocircuits() const {
  std::vector<SignVector> out;
  for (const auto& x : covectors_) {
    if (x.is_zero()) continue;
    const bool minimal = std::none_of(covectors_.begin(), covectors_.end(), [&](const SignVector& y) {
      return !y.is_zero() && !(y == x) && y.leq(x);
    });
    if (minimal) out.push_back(x);
  }
  return out;
}

bool CovectorSet::closed_under_negation() const {
  return std::all_of(covectors_.begin(), covectors_.end(), [this](const SignVector& x) { return index_of(-x).has_value(); });
}

bool CovectorSet::closed_under_composition() const {
  for (const auto& x : covectors_) {
    for (const auto& y : covectors_) {
      if (!index_of(x.compose(y))) return false;
    }
  }
  return true;
}

topo::Poset CovectorSet::poset(const std::vector<int>& members) const {
  std::vector<std::string> labels;
  for (int m : members) labels.push_back(covectors_.at(static_cast<std::size_t>(m)).to_string());
  return topo::Poset(
      static_cast<int>(members.size()),
      [&](int a, int b) {
        return covectors_[static_cast<std::size_t>(members[static_cast<std::size_t>(a)])].leq(
            covectors_[static_cast<std::size_t>(members[static_cast<std::size_t>(b)])]);
      },
      std::move(labels));
}

CovectorSet covectors_from_vectors(const VectorConfig& config) {
  return CovectorSet::span(config.ground, cocircuits_from_vectors(config));
}

GeometricLattice underlying_matroid(const CovectorSet& covectors) {
  std::set<std::uint64_t> zero_sets;
  for (const auto& x : covectors.covectors()) zero_sets.insert(zero_set(x).bits());
  std::vector<ElementSet> flats;
  for (auto bits : zero_sets) flats.emplace_back(bits);
  return GeometricLattice::from_flats(covectors.ground_set(), std::move(flats));
}

std::vector<int> covector_flat(const CovectorSet& covectors, ElementSet g) {
  std::vector<int> out;
  bool is_flat = false;
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    const ElementSet zeros = zero_set(covectors[i]);
    if (zeros == g) is_flat = true;
    if (g.subset_of(zeros)) out.push_back(static_cast<int>(i));
  }
  if (!is_flat) throw std::invalid_argument(covectors.ground_set().format(g) + " is not a flat");
  return out;
}

std::vector<int> default_pivots(const GeometricLattice& lattice, const Flag& flag) {
  std::vector<int> out;
  for (int i = 0; i < flag.length(); ++i) {
    const ElementSet diff = lattice.flat(flag[static_cast<std::size_t>(i) + 1]) - lattice.flat(flag[static_cast<std::size_t>(i)]);
    out.push_back(diff.members().front());
  }
  return out;
}

Embedding::Embedding(CovectorSet covectors, Flag flag, std::vector<int> pivots)
    : covectors_(std::move(covectors)),
      rep_(underlying_matroid(covectors_), std::move(flag)),
      pivots_(std::move(pivots)),
      cocircuits_(covectors_.cocircuits()) {
  const GeometricLattice& lattice = rep_.lattice();
  if (static_cast<int>(pivots_.size()) != lattice.rank()) {
    throw InputError("expected " + std::to_string(lattice.rank()) + " pivots, got " + std::to_string(pivots_.size()));
  }
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const ElementSet diff = lattice.flat(rep_.flag()[i + 1]) - lattice.flat(rep_.flag()[i]);
    if (pivots_[i] < 0 || pivots_[i] >= lattice.ground_set().size() || !diff.contains(pivots_[i])) {
      throw InputError("pivot " + std::to_string(i) + " is not in " + lattice.format(rep_.flag()[i + 1]) + " minus " +
                       lattice.format(rep_.flag()[i]));
    }
  }
}

Embedding::Embedding(CovectorSet covectors, Flag flag)
    : Embedding(covectors, flag, default_pivots(underlying_matroid(covectors), flag)) {}

int Embedding::first_pivot(const SignVector& x) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (x[static_cast<std::size_t>(pivots_[i])] != Sign::Zero) return static_cast<int>(i);
  }
  throw std::invalid_argument("covector vanishes on every pivot");
}

Face Embedding::image_face(const SignVector& x) const {
  if (x.is_zero()) throw std::invalid_argument("image_face is undefined on the zero covector");
  std::vector<int> vertices;
  for (const auto& c : cocircuits_) {
    if (!c.leq(x)) continue;
    const auto coatom = lattice().find(zero_set(c));
    if (!coatom) throw std::logic_error("cocircuit zero set is not a flat");
    const Sign s = c[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(first_pivot(c))])];
    vertices.push_back(SphereRepresentation::vertex_id(rep_.coatom_index(*coatom), s));
  }
  return topo::make_face(std::move(vertices));
}

std::vector<int> Embedding::flat_members(FlatId g) const {
  std::vector<int> out;
  for (int i : covector_flat(covectors_, lattice().flat(g))) {
    if (!covectors_[static_cast<std::size_t>(i)].is_zero()) out.push_back(i);
  }
  return out;
}

SimplicialComplex Embedding::order_complex_of(FlatId g) const {
  const auto members = flat_members(g);
  const SimplicialComplex local = topo::order_complex(covectors_.poset(members));
  std::vector<Face> faces;
  for (const auto& f : local.maximal_faces()) {
    Face global;
    for (int v : f) global.push_back(members[static_cast<std::size_t>(v)]);
    faces.push_back(std::move(global));
  }
  return SimplicialComplex(std::move(faces));
}

ValidationReport pivots_check(const Embedding& embedding) {
  const GeometricLattice& lattice = embedding.lattice();
  const auto cocircuits = embedding.covectors().cocircuits();
  std::string issue;
  for (int i = 0; i <= lattice.rank() && issue.empty(); ++i) {
    std::set<std::uint64_t> expected;
    for (FlatId c : lattice.coat_above(embedding.rep().flag()[static_cast<std::size_t>(i)])) expected.insert(lattice.flat(c).bits());
    ElementSet required;
    for (int k = 0; k < i; ++k) required.insert(embedding.pivots()[static_cast<std::size_t>(k)]);
    std::set<std::uint64_t> found;
    for (const auto& x : cocircuits) {
      if (required.subset_of(zero_set(x))) found.insert(zero_set(x).bits());
    }
    if (expected != found) issue = "coat(F_" + std::to_string(i) + ") differs from the cocircuit zero sets containing the first " + std::to_string(i) + " pivots";
  }
  ValidationReport report;
  report.add("pivot coatoms", issue.empty(), issue.empty() ? std::to_string(lattice.rank() + 1) + " flag levels" : issue);
  return report;
}

ValidationReport verify_embedding(const Embedding& embedding) {
  ValidationReport report;
  const CovectorSet& covectors = embedding.covectors();
  const SphereRepresentation& rep = embedding.rep();
  const GeometricLattice& lattice = embedding.lattice();
  const FlatId bottom = lattice.bottom();

  std::vector<Face> images(covectors.size());
  std::string defined_issue;
  std::string sign_issue;
  const auto cocircuits = covectors.cocircuits();
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    const SignVector& y = covectors[i];
    if (y.is_zero()) continue;
    images[i] = embedding.image_face(y);
    if (images[i].empty() && defined_issue.empty()) defined_issue = y.to_string() + " has an empty image";
    try {
      (void)rep.sign_of_simplex(images[i], bottom);
    } catch (const std::invalid_argument& e) {
      if (defined_issue.empty()) defined_issue = y.to_string() + ": " + e.what();
    }
    // Cocircuits below Y whose zero sets share a part carry one sign.
    std::map<int, Sign> part_sign;
    for (const auto& c : cocircuits) {
      if (!c.leq(y)) continue;
      const FlatId coatom = *lattice.find(ElementSet::of(c.zero_set()));
      const int part = rep.part_of(coatom);
      const Sign s = c[static_cast<std::size_t>(embedding.pivots()[static_cast<std::size_t>(embedding.first_pivot(c))])];
      const auto [it, inserted] = part_sign.emplace(part, s);
      if (!inserted && it->second != s && sign_issue.empty()) {
        sign_issue = y.to_string() + " has cocircuits of both signs in part " + std::to_string(part);
      }
    }
  }
  report.add("image faces exist", defined_issue.empty(), defined_issue);
  report.add("part signs agree", sign_issue.empty(), sign_issue);

  std::map<Face, std::size_t> seen;
  std::string injective_issue;
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    if (covectors[i].is_zero()) continue;
    const auto [it, inserted] = seen.emplace(images[i], i);
    if (!inserted && injective_issue.empty()) {
      injective_issue = covectors[it->second].to_string() + " and " + covectors[i].to_string() + " share an image";
    }
  }
  report.add("injective", injective_issue.empty(), injective_issue);

  std::string order_issue;
  for (std::size_t i = 0; i < covectors.size() && order_issue.empty(); ++i) {
    for (std::size_t j = 0; j < covectors.size() && order_issue.empty(); ++j) {
      if (covectors[i].is_zero() || covectors[j].is_zero() || !covectors[i].leq(covectors[j])) continue;
      if (!topo::is_subface(images[i], images[j])) {
        order_issue = covectors[i].to_string() + " <= " + covectors[j].to_string() + " but images are not nested";
      }
    }
  }
  report.add("order-preserving", order_issue.empty(), order_issue);

  std::string flat_issue;
  for (FlatId g = 0; g < static_cast<FlatId>(lattice.size()) && flat_issue.empty(); ++g) {
    const SimplicialComplex s_g = rep.build(g);
    for (int i : embedding.flat_members(g)) {
      if (!s_g.contains(images[static_cast<std::size_t>(i)])) {
        flat_issue = covectors[static_cast<std::size_t>(i)].to_string() + " does not land in S_" + lattice.format(g);
        break;
      }
    }
  }
  report.add("flats map into S_G", flat_issue.empty(), flat_issue);

  const topo::SimplicialMap swap = rep.antipodal();
  std::string z2_issue;
  for (std::size_t i = 0; i < covectors.size() && z2_issue.empty(); ++i) {
    if (covectors[i].is_zero()) continue;
    const auto j = static_cast<std::size_t>(*covectors.index_of(-covectors[i]));
    if (swap.image(images[i]) != images[j]) z2_issue = "image of -" + covectors[i].to_string() + " is not the swapped image";
  }
  report.add("Z2-equivariant", z2_issue.empty(), z2_issue);

  std::string homology_issue;
  std::string ambient_detail;
  for (FlatId g = 0; g < static_cast<FlatId>(lattice.size()) && homology_issue.empty(); ++g) {
    const auto covector_side = topo::reduced_homology(embedding.order_complex_of(g));
    const auto sphere_side = topo::reduced_homology(rep.build(g));
    const int d = lattice.corank(g) - 1;
    const bool sphere = d < 0 ? covector_side.dims.empty() : covector_side.is_sphere_profile(d);
    if (!(covector_side == sphere_side) || !sphere) {
      homology_issue = "G=" + lattice.format(g) + ": " + covector_side.summary() + " vs " + sphere_side.summary();
    }
    if (g == bottom) ambient_detail = covector_side.summary();
  }
  report.add("homology matches", homology_issue.empty(),
             homology_issue.empty() ? "ambient " + ambient_detail + " over " + std::to_string(lattice.size()) + " flats"
                                    : homology_issue);
  return report;
}

EmbeddingCovers build_covers(const Embedding& embedding, FlatId g, CoverReading reading) {
  const SphereRepresentation& rep = embedding.rep();
  const CovectorSet& covectors = embedding.covectors();
  const int r = rep.rank();
  const auto members = embedding.flat_members(g);

  EmbeddingCovers out;
  out.covectors.ambient = embedding.order_complex_of(g);
  out.sphere.ambient = rep.build(g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    SignVector v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v.set(static_cast<std::size_t>(i), ((mask >> (r - 1 - i)) & 1U) ? Sign::Minus : Sign::Plus);
    const Face simplex = rep.face_of_signs(v, g);
    std::vector<int> chosen;
    for (int m : members) {
      const SignVector& x = covectors[static_cast<std::size_t>(m)];
      bool in_member = false;
      if (reading == CoverReading::FirstPivot) {
        const int i = embedding.first_pivot(x);
        in_member = x[static_cast<std::size_t>(embedding.pivots()[static_cast<std::size_t>(i)])] == v[static_cast<std::size_t>(i)];
      } else {
        in_member = topo::is_subface(embedding.image_face(x), simplex);
      }
      if (in_member) chosen.push_back(m);
    }
    const SimplicialComplex local = topo::order_complex(covectors.poset(chosen));
    std::vector<Face> faces;
    for (const auto& f : local.maximal_faces()) {
      Face global;
      for (int idx : f) global.push_back(chosen[static_cast<std::size_t>(idx)]);
      faces.push_back(std::move(global));
    }
    out.sign_choices.push_back(v);
    out.covectors.members.emplace_back(std::move(faces));
    out.sphere.members.push_back(simplex.empty() ? SimplicialComplex() : SimplicialComplex::simplex(simplex));
  }
  return out;
}

ValidationReport embedding_carrier_check(const Embedding& embedding, FlatId g, CoverReading reading,
                                         topo::CarrierOptions options) {
  const auto covers = build_covers(embedding, g, reading);
  const auto carrier = [&embedding](const Face& chain) {
    std::vector<int> out;
    for (int idx : chain) {
      const Face img = embedding.image_face(embedding.covectors()[static_cast<std::size_t>(idx)]);
      out.insert(out.end(), img.begin(), img.end());
    }
    return topo::make_face(std::move(out));
  };
  return topo::carrier_check(carrier, covers.covectors, covers.sphere, options);
}

DeletionMap deletion_map(const Embedding& embedding, FlatId g, const SignVector& choice, int deleted) {
  const auto& pivots = embedding.pivots();
  if (std::find(pivots.begin(), pivots.end(), deleted) != pivots.end()) {
    throw std::invalid_argument("cannot delete a pivot element");
  }
  const CovectorSet& covectors = embedding.covectors();
  const ElementSet g_set = embedding.lattice().flat(g);
  ElementSet g_rest = g_set;
  g_rest.erase(deleted);
  auto matches = [&](const SignVector& x) {
    if (x.is_zero()) return false;
    const int i = embedding.first_pivot(x);
    return x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] == choice[static_cast<std::size_t>(i)];
  };

  std::vector<int> source_members;
  for (int m : embedding.flat_members(g)) {
    if (matches(covectors[static_cast<std::size_t>(m)])) source_members.push_back(m);
  }
  // Deleted coordinate kept as a zero entry, so pivot positions are unchanged.
  std::set<SignVector> restricted;
  for (const auto& y : covectors.covectors()) {
    const SignVector x = y.restrict_zero({deleted});
    if (g_rest.subset_of(ElementSet::of(x.zero_set())) && matches(x)) restricted.insert(x);
  }
  const std::vector<SignVector> targets(restricted.begin(), restricted.end());

  DeletionMap out;
  out.source = covectors.poset(source_members);
  std::vector<std::string> labels;
  for (const auto& t : targets) labels.push_back(t.to_string());
  out.target = topo::Poset(
      static_cast<int>(targets.size()),
      [&](int a, int b) { return targets[static_cast<std::size_t>(a)].leq(targets[static_cast<std::size_t>(b)]); },
      std::move(labels));
  for (int m : source_members) {
    const SignVector x = covectors[static_cast<std::size_t>(m)].restrict_zero({deleted});
    out.map.push_back(static_cast<int>(std::lower_bound(targets.begin(), targets.end(), x) - targets.begin()));
  }
  return out;
}

}  // namespace hsr
