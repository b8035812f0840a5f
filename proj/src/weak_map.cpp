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

#include "hsr/weak_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hsr/sphere_rep.hpp"

namespace hsr {

using topo::Face;
using topo::SimplicialComplex;

namespace {

// Target re-expressed over the source's label order.
GeometricLattice aligned(const GeometricLattice& source, const GeometricLattice& target) {
  if (target.ground_set() == source.ground_set()) return target;
  return target.reindexed(source.ground_set());
}

SignVector permuted(const SignVector& x, const std::vector<int>& to_source) {
  SignVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.set(static_cast<std::size_t>(to_source[i]), x[i]);
  return out;
}

class Searcher {
 public:
  Searcher(const SphereRepresentation& source, const SphereRepresentation& target, std::int64_t cap)
      : source_(source), target_(target), cap_(cap) {
    source_complex_ = source_.build(source_.lattice().bottom());
    target_complex_ = target_.build(target_.lattice().bottom());
    const int n = 2 * static_cast<int>(source_.coatoms().size());
    candidates_.resize(static_cast<std::size_t>(n));
    facets_of_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const SignedVertex sv = source_.vertex(v);
      const ElementSet closure = target_.lattice().closure_set(source_.lattice().flat(sv.coatom));
      for (FlatId h : target_.coatoms()) {
        if (closure.subset_of(target_.lattice().flat(h))) {
          candidates_[static_cast<std::size_t>(v)].push_back(target_.vertex_id(SignedVertex{h, sv.sign}));
        }
      }
    }
    const auto& facets = source_complex_.maximal_faces();
    for (std::size_t f = 0; f < facets.size(); ++f) {
      for (int v : facets[f]) facets_of_[static_cast<std::size_t>(v)].push_back(f);
    }
    for (FlatId g = 0; g < static_cast<FlatId>(source_.lattice().size()); ++g) {
      if (g == source_.lattice().top()) continue;
      const FlatId h = target_.lattice().closure(source_.lattice().flat(g));
      flat_checks_.emplace_back(source_.build(g), target_.build(h));
    }
  }

  const std::vector<int>& candidates(int v) const { return candidates_.at(static_cast<std::size_t>(v)); }
  std::int64_t assignments() const { return assignments_; }
  void reset_budget() {
    assignments_ = 0;
    capped_ = false;
  }
  bool capped() const { return capped_; }

  std::optional<std::vector<int>> run() {
    image_.assign(candidates_.size(), -1);
    if (extend(0)) return image_;
    return std::nullopt;
  }

  bool face_admissible(const Face& image) const { return target_complex_.contains(topo::make_face(image)); }

  // Some choice of candidates for the vertices of `face` spans a target face.
  // Counts toward the assignment budget.
  bool locally_admissible(const Face& face) {
    std::vector<int> chosen(face.size());
    return choose(face, 0, chosen);
  }

 private:
  bool choose(const Face& face, std::size_t i, std::vector<int>& chosen) {
    if (i == face.size()) return face_admissible(chosen);
    for (int c : candidates(face[i])) {
      if (assignments_ == cap_) {
        capped_ = true;
        return false;
      }
      ++assignments_;
      chosen[i] = c;
      if (face_admissible(Face(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(i) + 1)) &&
          choose(face, i + 1, chosen)) {
        return true;
      }
      if (capped_) return false;
    }
    return false;
  }

  bool consistent(int v) const {
    for (std::size_t f : facets_of_[static_cast<std::size_t>(v)]) {
      Face image;
      for (int u : source_complex_.maximal_faces()[f]) {
        if (u <= v) image.push_back(image_[static_cast<std::size_t>(u)]);
      }
      if (!face_admissible(image)) return false;
    }
    return true;
  }

  bool flats_respected() const {
    const topo::SimplicialMap f(as_map());
    return std::all_of(flat_checks_.begin(), flat_checks_.end(), [&](const auto& pair) {
      return f.image(pair.first).is_subcomplex_of(pair.second);
    });
  }

  std::map<int, int> as_map() const {
    std::map<int, int> m;
    for (std::size_t v = 0; v < image_.size(); ++v) m.emplace(static_cast<int>(v), image_[v]);
    return m;
  }

  bool extend(std::size_t v) {
    if (v == image_.size()) return flats_respected();
    for (int c : candidates_[v]) {
      if (assignments_ == cap_) {
        capped_ = true;
        return false;
      }
      ++assignments_;
      image_[v] = c;
      if (consistent(static_cast<int>(v)) && extend(v + 1)) return true;
      if (capped_) return false;
    }
    image_[v] = -1;
    return false;
  }

  const SphereRepresentation& source_;
  const SphereRepresentation& target_;
  std::int64_t cap_;
  std::int64_t assignments_ = 0;
  bool capped_ = false;
  SimplicialComplex source_complex_;
  SimplicialComplex target_complex_;
  std::vector<std::vector<int>> candidates_;
  std::vector<std::vector<std::size_t>> facets_of_;
  std::vector<std::pair<SimplicialComplex, SimplicialComplex>> flat_checks_;
  std::vector<int> image_;
};

std::vector<std::string> vertex_labels(const SphereRepresentation& rep) {
  std::vector<std::string> out;
  for (int v = 0; v < 2 * static_cast<int>(rep.coatoms().size()); ++v) out.push_back(rep.vertex_label(v));
  return out;
}

std::string obstruction_reason(const Obstruction& o, const std::vector<std::string>& source,
                               const std::vector<std::string>& target) {
  std::string out;
  for (std::size_t i = 0; i < o.face.size(); ++i) {
    if (i) out += ", ";
    out += source[static_cast<std::size_t>(o.face[i])] + " -> {";
    for (std::size_t j = 0; j < o.candidates[i].size(); ++j) {
      out += (j ? "," : "") + target[static_cast<std::size_t>(o.candidates[i][j])];
    }
    out += "}";
  }
  return out + "; no choice of images spans a face of the target";
}

}  // namespace

WeakMapReport is_weak_map_matroid(const GeometricLattice& source, const GeometricLattice& target) {
  const GeometricLattice other = aligned(source, target);
  const int n = source.ground_set().size();
  if (n > 24) throw std::length_error("weak-map test enumerates subsets; at most 24 elements");
  WeakMapReport report;
  report.ground = source.ground_set();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const ElementSet a(bits);
    const int rs = source.subset_rank(a);
    const int rt = other.subset_rank(a);
    if (rs < rt) report.rank_witnesses.push_back(RankWitness{a, rs, rt});
  }
  std::sort(report.rank_witnesses.begin(), report.rank_witnesses.end(),
            [](const RankWitness& x, const RankWitness& y) {
              return x.subset.size() != y.subset.size() ? x.subset.size() < y.subset.size()
                                                        : lex_less(x.subset, y.subset);
            });
  report.verdict = report.rank_witnesses.empty();
  return report;
}

WeakMapReport is_weak_map_covectors(const CovectorSet& source, const CovectorSet& target) {
  const GroundSet& ground = source.ground_set();
  if (target.ground_set().size() != ground.size()) throw InputError("ground sets differ in size");
  std::vector<int> to_source(static_cast<std::size_t>(ground.size()));
  for (int e = 0; e < ground.size(); ++e) {
    const auto pos = ground.index_of(target.ground_set().label(e));
    if (!pos) throw InputError("ground sets differ: '" + target.ground_set().label(e) + "' missing");
    to_source[static_cast<std::size_t>(e)] = *pos;
  }
  WeakMapReport report;
  report.ground = ground;
  for (const auto& raw : target.covectors()) {
    const SignVector x = permuted(raw, to_source);
    const bool covered = std::any_of(source.covectors().begin(), source.covectors().end(),
                                     [&](const SignVector& y) { return x.leq(y); });
    if (!covered) report.covector_witnesses.push_back(x);
  }
  std::sort(report.covector_witnesses.begin(), report.covector_witnesses.end());
  report.verdict = report.covector_witnesses.empty();
  if (report.verdict) {
    report.underlying_weak_map = is_weak_map_matroid(underlying_matroid(source), underlying_matroid(target)).verdict;
  }
  return report;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::None:
      return "none";
    case SearchStatus::IncompleteFlag:
      return "obstacle-1";
    case SearchStatus::CapExceeded:
      return "cap-exceeded";
  }
  return "none";
}

SearchResult poset_map_search(const GeometricLattice& source, const GeometricLattice& target,
                              const std::vector<ElementSet>& chain, SearchOptions options) {
  if (options.max_assignments <= 0) throw InputError("max-assignments must be positive");
  const GeometricLattice other = aligned(source, target);
  const Flag source_flag = make_flag(source, chain);
  SearchResult result;
  Flag target_flag;
  try {
    target_flag = make_flag(other, chain);
  } catch (const InputError& e) {
    result.status = SearchStatus::IncompleteFlag;
    result.detail = std::string("flag is not complete in the target: ") + e.what();
    return result;
  }
  const SphereRepresentation from(source, source_flag);
  const SphereRepresentation to(other, target_flag);
  result.source_labels = vertex_labels(from);
  result.target_labels = vertex_labels(to);

  Searcher searcher(from, to, options.max_assignments);
  result.map = searcher.run();
  result.assignments = searcher.assignments();
  if (result.map) {
    result.status = SearchStatus::Found;
    return result;
  }
  if (searcher.capped()) {
    result.status = SearchStatus::CapExceeded;
    result.detail = "search stopped after " + std::to_string(options.max_assignments) + " assignments";
    return result;
  }
  result.status = SearchStatus::None;

  // Minimal local obstructions, smallest size first, under a fresh budget.
  searcher.reset_budget();
  const auto faces = from.build(source.bottom()).all_faces();
  std::size_t size = 0;
  for (const auto& face : faces) {
    if (!result.minimal_obstructions.empty() && face.size() > size) break;
    size = face.size();
    if (searcher.locally_admissible(face)) continue;
    if (searcher.capped()) {
      result.detail = "obstruction scan stopped at the assignment cap";
      break;
    }
    Obstruction o;
    o.face = face;
    for (int v : face) o.candidates.push_back(searcher.candidates(v));
    o.reason = obstruction_reason(o, result.source_labels, result.target_labels);
    result.minimal_obstructions.push_back(std::move(o));
  }
  if (!result.minimal_obstructions.empty()) {
    result.obstruction = result.minimal_obstructions.front();
  } else if (result.detail.empty()) {
    result.detail = "no single face is obstructed; the constraints fail only jointly";
  }
  return result;
}

}  // namespace hsr
