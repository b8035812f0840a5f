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

#include "hsr/topo/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hsr::topo {

Face make_face(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_subface(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SimplicialComplex::SimplicialComplex(std::vector<Face> faces) {
  for (auto& f : faces) f = make_face(std::move(f));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& f : faces) {
    if (f.empty()) continue;
    const bool absorbed =
        std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& m) { return is_subface(f, m); });
    if (!absorbed) maximal_.push_back(std::move(f));
  }
  std::sort(maximal_.begin(), maximal_.end());
}

SimplicialComplex SimplicialComplex::simplex(Face vertices) {
  return SimplicialComplex(std::vector<Face>{std::move(vertices)});
}

Face SimplicialComplex::vertices() const {
  std::set<int> vs;
  for (const auto& f : maximal_) vs.insert(f.begin(), f.end());
  return Face(vs.begin(), vs.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : maximal_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::contains(const Face& face) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& m) { return is_subface(face, m); });
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](const Face& f) { return other.contains(f); });
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::set<Face> seen;
  for (const auto& m : maximal_) {
    if (m.size() >= 31) throw std::length_error("maximal face too large to enumerate");
    const std::uint32_t count = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      Face f;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if ((mask >> i) & 1U) f.push_back(m[i]);
      }
      seen.insert(std::move(f));
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<Face> out;
  for (auto& f : all_faces()) {
    if (static_cast<int>(f.size()) == d + 1) out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> faces;
  for (const auto& x : a.maximal_faces()) {
    for (const auto& y : b.maximal_faces()) faces.push_back(face_intersection(x, y));
  }
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> faces = a.maximal_faces();
  faces.insert(faces.end(), b.maximal_faces().begin(), b.maximal_faces().end());
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex cross_polytope_boundary(int d) {
  std::vector<Face> faces;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    Face f;
    for (int i = 0; i < d; ++i) f.push_back(2 * i + static_cast<int>((mask >> i) & 1U));
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex simplex_boundary(int d) {
  std::vector<Face> faces;
  for (int skip = 0; skip <= d; ++skip) {
    Face f;
    for (int v = 0; v <= d; ++v) {
      if (v != skip) f.push_back(v);
    }
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex nerve(const std::vector<std::vector<int>>& family) {
  // The nerve is generated by the stars {i : x in U_i} of the elements x.
  std::map<int, Face> stars;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (int x : family[i]) stars[x].push_back(static_cast<int>(i));
  }
  std::vector<Face> faces;
  for (auto& [x, star] : stars) faces.push_back(std::move(star));
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex nerve_of_maximal_faces(const SimplicialComplex& k) {
  return nerve(std::vector<std::vector<int>>(k.maximal_faces().begin(), k.maximal_faces().end()));
}

NerveIsoResult cross_polytope_nerve_iso(const SimplicialComplex& k, int d, const std::vector<SignVector>& labels) {
  NerveIsoResult result;
  result.labels = labels;
  const auto& facets = k.maximal_faces();
  if (d == 0) {
    result.isomorphic = facets.empty();
    if (!result.isomorphic) result.witness = "0-dimensional cross-polytope has no proper facets";
    return result;
  }
  const std::size_t expected = std::size_t{1} << d;
  if (facets.size() != expected || labels.size() != expected) {
    result.witness = "expected " + std::to_string(expected) + " maximal faces, found " + std::to_string(facets.size());
    return result;
  }
  std::set<SignVector> distinct;
  for (const auto& v : labels) {
    if (static_cast<int>(v.size()) != d || static_cast<int>(v.support().size()) != d) {
      result.witness = "label " + v.to_string() + " is not in {+,-}^" + std::to_string(d);
      return result;
    }
    distinct.insert(v);
  }
  if (distinct.size() != expected) {
    result.witness = "labels are not a bijection onto {+,-}^" + std::to_string(d);
    return result;
  }

  // Both nerves are determined by their maximal faces: the vertex stars on the
  // complex side and the coordinate half-spaces {v : v_i = s} on the polytope side.
  std::set<Face> polytope;
  for (int i = 0; i < d; ++i) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      Face half;
      for (std::size_t f = 0; f < labels.size(); ++f) {
        if (labels[f][static_cast<std::size_t>(i)] == s) half.push_back(static_cast<int>(f));
      }
      polytope.insert(half);
    }
  }
  const SimplicialComplex nerve_complex = nerve_of_maximal_faces(k);
  const auto& complex_side = nerve_complex.maximal_faces();
  const std::set<Face> ours(complex_side.begin(), complex_side.end());
  if (ours != polytope) {
    for (const auto& f : ours) {
      if (!polytope.contains(f)) {
        std::string w = "facets {";
        for (std::size_t j = 0; j < f.size(); ++j) w += (j ? "," : "") + labels[static_cast<std::size_t>(f[j])].to_string();
        result.witness = w + "} share a vertex but do not form a cross-polytope vertex star";
        return result;
      }
    }
    result.witness = "a cross-polytope vertex star has no counterpart";
    return result;
  }
  result.isomorphic = true;
  return result;
}

NerveIsoResult cross_polytope_nerve_iso(const SimplicialComplex& k, int d) {
  NerveIsoResult result;
  const auto& facets = k.maximal_faces();
  if (d == 0) return cross_polytope_nerve_iso(k, d, {});
  if (facets.size() != (std::size_t{1} << d)) {
    result.witness = "expected " + std::to_string(std::size_t{1} << d) + " maximal faces, found " +
                     std::to_string(facets.size());
    return result;
  }
  const SimplicialComplex nerve_complex = nerve_of_maximal_faces(k);
  const auto& stars = nerve_complex.maximal_faces();
  if (stars.size() != static_cast<std::size_t>(2 * d)) {
    result.witness = "nerve has " + std::to_string(stars.size()) + " maximal faces, expected " + std::to_string(2 * d);
    return result;
  }
  Face everything(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f) everything[f] = static_cast<int>(f);

  std::vector<SignVector> labels(facets.size(), SignVector(static_cast<std::size_t>(d)));
  std::vector<bool> used(stars.size(), false);
  int coordinate = 0;
  for (std::size_t a = 0; a < stars.size(); ++a) {
    if (used[a]) continue;
    Face complement;
    std::set_difference(everything.begin(), everything.end(), stars[a].begin(), stars[a].end(),
                        std::back_inserter(complement));
    std::size_t b = a + 1;
    while (b < stars.size() && (used[b] || stars[b] != complement)) ++b;
    if (b == stars.size()) {
      result.witness = "vertex stars do not pair into complementary halves";
      return result;
    }
    used[a] = used[b] = true;
    // stars are sorted, so stars[a] holds the smaller first facet and gets '+'.
    for (int f : stars[a]) labels[static_cast<std::size_t>(f)].set(static_cast<std::size_t>(coordinate), Sign::Plus);
    for (int f : stars[b]) labels[static_cast<std::size_t>(f)].set(static_cast<std::size_t>(coordinate), Sign::Minus);
    ++coordinate;
  }
  return cross_polytope_nerve_iso(k, d, labels);
}

}  // namespace hsr::topo
