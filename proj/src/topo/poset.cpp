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

#include "hsr/topo/poset.hpp"

#include <stdexcept>

namespace hsr::topo {

Poset::Poset(int size, const std::function<bool(int, int)>& leq, std::vector<std::string> labels)
    : size_(size),
      words_((static_cast<std::size_t>(size) + 63) / 64),
      rows_(static_cast<std::size_t>(size) * words_),
      labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (int i = 0; i < size_; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != size_) throw std::invalid_argument("label count differs from poset size");
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (leq(a, b)) rows_[row_start(a) + static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(b) % 64);
    }
  }
  for (int a = 0; a < size_; ++a) {
    if (!this->leq(a, a)) throw std::invalid_argument("relation is not reflexive at " + labels_[static_cast<std::size_t>(a)]);
    for (int b = 0; b < size_; ++b) {
      if (a == b || !this->leq(a, b)) continue;
      if (this->leq(b, a)) throw std::invalid_argument("relation is not antisymmetric");
      // up(b) must lie inside up(a).
      for (std::size_t w = 0; w < words_; ++w) {
        if (rows_[row_start(b) + w] & ~rows_[row_start(a) + w]) throw std::invalid_argument("relation is not transitive");
      }
    }
  }
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (int c = 0; c < size_ && !between; ++c) between = less(a, c) && less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size_; ++a) {
    bool minimal = true;
    for (int b = 0; b < size_ && minimal; ++b) minimal = !less(b, a);
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size_; ++a) {
    bool maximal = true;
    for (int b = 0; b < size_ && maximal; ++b) maximal = !less(a, b);
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::upper_set(int x) const {
  std::vector<int> out;
  for (int a = 0; a < size_; ++a) {
    if (leq(x, a)) out.push_back(a);
  }
  return out;
}

Poset Poset::induced(const std::vector<int>& elements) const {
  std::vector<std::string> labels;
  for (int e : elements) labels.push_back(labels_.at(static_cast<std::size_t>(e)));
  return Poset(
      static_cast<int>(elements.size()),
      [&](int a, int b) { return leq(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]); },
      std::move(labels));
}

SimplicialComplex order_complex(const Poset& poset) {
  std::vector<std::vector<int>> up(static_cast<std::size_t>(poset.size()));
  for (const auto& [a, b] : poset.covers()) up[static_cast<std::size_t>(a)].push_back(b);

  std::vector<Face> chains;
  Face current;
  std::function<void(int)> extend = [&](int x) {
    current.push_back(x);
    const auto& next = up[static_cast<std::size_t>(x)];
    if (next.empty()) chains.push_back(current);
    for (int y : next) extend(y);
    current.pop_back();
  };
  for (int m : poset.minimal_elements()) extend(m);
  return SimplicialComplex(std::move(chains));
}

FacePoset face_poset(const SimplicialComplex& k) {
  FacePoset out;
  out.faces = k.all_faces();
  std::vector<std::string> labels;
  for (const auto& f : out.faces) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    labels.push_back(s + "}");
  }
  out.poset = Poset(
      static_cast<int>(out.faces.size()),
      [&](int a, int b) { return is_subface(out.faces[static_cast<std::size_t>(a)], out.faces[static_cast<std::size_t>(b)]); },
      std::move(labels));
  return out;
}

}  // namespace hsr::topo
