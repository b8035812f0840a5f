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

#include "hsr/topo/maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hsr::topo {

namespace {

std::string format_face(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

std::string format_indices(const std::vector<int>& j) { return format_face(j); }

}  // namespace

Face SimplicialMap::image(const Face& face) const {
  std::vector<int> out;
  out.reserve(face.size());
  for (int v : face) out.push_back(vertex_map_.at(v));
  return make_face(std::move(out));
}

SimplicialComplex SimplicialMap::image(const SimplicialComplex& k) const {
  std::vector<Face> faces;
  for (const auto& f : k.maximal_faces()) faces.push_back(image(f));
  return SimplicialComplex(std::move(faces));
}

SimplicialMap SimplicialMap::compose_after(const SimplicialMap& first) const {
  std::map<int, int> out;
  for (const auto& [v, w] : first.vertex_map()) out[v] = vertex_map_.at(w);
  return SimplicialMap(std::move(out));
}

std::string simplicial_violation(const SimplicialMap& f, const SimplicialComplex& source,
                                 const SimplicialComplex& target) {
  for (const auto& face : source.maximal_faces()) {
    for (int v : face) {
      if (!f.vertex_map().contains(v)) return "vertex " + std::to_string(v) + " is unmapped";
    }
    const Face img = f.image(face);
    if (!target.contains(img)) return "image of " + format_face(face) + " is " + format_face(img) + ", not a face";
  }
  return {};
}

ValidationReport z2_free_check(const SimplicialComplex& k, const SimplicialMap& involution) {
  ValidationReport report;
  std::string involution_issue;
  for (int v : k.vertices()) {
    const auto it = involution.vertex_map().find(v);
    if (it == involution.vertex_map().end()) {
      involution_issue = "vertex " + std::to_string(v) + " is unmapped";
      break;
    }
    const auto back = involution.vertex_map().find(it->second);
    if (back == involution.vertex_map().end() || back->second != v) {
      involution_issue = "map does not square to the identity at " + std::to_string(v);
      break;
    }
  }
  report.add("involution", involution_issue.empty(), involution_issue);
  if (!involution_issue.empty()) return report;

  const std::string violation = simplicial_violation(involution, k, k);
  report.add("simplicial", violation.empty(), violation);

  // A face meeting its image in a vertex pair {v, g(v)} is fixed setwise on
  // that edge; maximal faces suffice.
  std::string fixed;
  for (const auto& face : k.maximal_faces()) {
    for (int v : face) {
      if (std::binary_search(face.begin(), face.end(), involution(v))) {
        fixed = "face " + format_face(face) + " contains " + std::to_string(v) + " and its image " +
                std::to_string(involution(v));
        break;
      }
    }
    if (!fixed.empty()) break;
  }
  report.add("free", fixed.empty(), fixed);
  return report;
}

ValidationReport carrier_check(const FaceCarrier& f, const CoverFamily& a, const CoverFamily& b,
                               CarrierOptions options) {
  if (a.members.size() != b.members.size()) throw std::invalid_argument("cover families have different index sets");
  ValidationReport report;
  const int count = static_cast<int>(a.members.size());

  auto covers = [](const CoverFamily& family) {
    SimplicialComplex all;
    for (const auto& m : family.members) all = complex_union(all, m);
    return all == family.ambient;
  };
  report.add("source cover", covers(a), covers(a) ? "" : "members do not union to the ambient complex");
  report.add("target cover", covers(b), covers(b) ? "" : "members do not union to the ambient complex");

  int bound = options.max_subset_size;
  if (bound <= 0) bound = count <= 16 ? count : 3;
  bound = std::min(bound, count);

  std::map<std::vector<Face>, bool> acyclic_cache;
  auto acyclic = [&](const SimplicialComplex& k) {
    const auto [it, inserted] = acyclic_cache.try_emplace(k.maximal_faces(), false);
    if (inserted) it->second = is_homology_point(k);
    return it->second;
  };

  std::string contractible_issue;
  std::string pattern_issue;
  long inspected = 0;
  std::vector<int> chosen;
  // Depth-first over index sets in increasing order. A branch stops once both
  // intersections are empty: supersets stay empty on both sides.
  std::function<void(int, const SimplicialComplex&, const SimplicialComplex&)> visit =
      [&](int next, const SimplicialComplex& in_a, const SimplicialComplex& in_b) {
        for (int i = next; i < count; ++i) {
          const SimplicialComplex ja = chosen.empty() ? a.members[static_cast<std::size_t>(i)]
                                                      : intersect(in_a, a.members[static_cast<std::size_t>(i)]);
          const SimplicialComplex jb = chosen.empty() ? b.members[static_cast<std::size_t>(i)]
                                                      : intersect(in_b, b.members[static_cast<std::size_t>(i)]);
          chosen.push_back(i);
          ++inspected;
          if (ja.empty() != jb.empty() && pattern_issue.empty()) {
            pattern_issue = "J=" + format_indices(chosen) + (ja.empty() ? ": source empty, target not" : ": target empty, source not");
          }
          if (contractible_issue.empty()) {
            if (!ja.empty() && !acyclic(ja)) contractible_issue = "source intersection J=" + format_indices(chosen) + " is not acyclic";
            else if (!jb.empty() && !acyclic(jb)) contractible_issue = "target intersection J=" + format_indices(chosen) + " is not acyclic";
          }
          if ((!ja.empty() || !jb.empty()) && static_cast<int>(chosen.size()) < bound) visit(i + 1, ja, jb);
          chosen.pop_back();
        }
      };
  visit(0, SimplicialComplex(), SimplicialComplex());

  const std::string scope = "subsets up to size " + std::to_string(bound) + " of " + std::to_string(count) +
                            " (" + std::to_string(inspected) + " inspected)";
  report.add("intersections acyclic", contractible_issue.empty(), contractible_issue.empty() ? scope : contractible_issue);
  report.add("intersection patterns agree", pattern_issue.empty(), pattern_issue.empty() ? scope : pattern_issue);

  std::string carried;
  for (int i = 0; i < count && carried.empty(); ++i) {
    for (const auto& face : a.members[static_cast<std::size_t>(i)].maximal_faces()) {
      const Face img = f(face);
      if (!b.members[static_cast<std::size_t>(i)].contains(img)) {
        carried = "member " + std::to_string(i) + ": image of " + format_face(face) + " is " + format_face(img);
        break;
      }
    }
  }
  report.add("carried", carried.empty(), carried);
  return report;
}

ValidationReport carrier_check(const SimplicialMap& f, const CoverFamily& a, const CoverFamily& b,
                               CarrierOptions options) {
  return carrier_check([&f](const Face& face) { return f.image(face); }, a, b, options);
}

ValidationReport quillen_fibers_check(const Poset& source, const Poset& target, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != source.size()) throw std::invalid_argument("map size differs from source poset");
  for (int x = 0; x < source.size(); ++x) {
    for (int y = 0; y < source.size(); ++y) {
      if (source.leq(x, y) && !target.leq(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) {
        throw std::invalid_argument("map is not order-preserving at " + source.labels()[static_cast<std::size_t>(x)] +
                                    " <= " + source.labels()[static_cast<std::size_t>(y)]);
      }
    }
  }
  ValidationReport report;
  std::string issue;
  for (int q = 0; q < target.size() && issue.empty(); ++q) {
    std::vector<int> fiber;
    for (int x = 0; x < source.size(); ++x) {
      if (target.leq(q, f[static_cast<std::size_t>(x)])) fiber.push_back(x);
    }
    if (!is_homology_point(order_complex(source.induced(fiber)))) {
      issue = "fiber over " + target.labels()[static_cast<std::size_t>(q)] +
              (fiber.empty() ? " is empty" : " is not acyclic");
    }
  }
  report.add("fibers acyclic", issue.empty(), issue);
  return report;
}

OrderHomotopyResult order_homotopy_image(const Poset& poset, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != poset.size()) throw std::invalid_argument("map size differs from poset");
  bool lowering = true;
  bool raising = true;
  for (int x = 0; x < poset.size(); ++x) {
    lowering = lowering && poset.leq(f[static_cast<std::size_t>(x)], x);
    raising = raising && poset.leq(x, f[static_cast<std::size_t>(x)]);
  }
  if (!lowering && !raising) throw std::invalid_argument("map is neither lowering nor raising");

  OrderHomotopyResult result;
  result.lowering = lowering;
  const std::set<int> image(f.begin(), f.end());
  result.elements.assign(image.begin(), image.end());
  result.image = poset.induced(result.elements);
  const HomologyProfile before = reduced_homology(order_complex(poset));
  const HomologyProfile after = reduced_homology(order_complex(result.image));
  result.report.add("homology agrees", before == after, before.summary() + " vs " + after.summary());
  return result;
}

}  // namespace hsr::topo
