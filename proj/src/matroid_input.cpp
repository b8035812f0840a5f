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

#include "hsr/matroid_input.hpp"

#include <set>

namespace hsr {

namespace {

std::int64_t reduce_mod(const Rational& q, std::int64_t p) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw InputError("GF(p) entries must be integers");
  }
  Integer v = boost::multiprecision::numerator(q) % p;
  if (v < 0) v += p;
  return v.convert_to<std::int64_t>();
}

GroundSet ground_for(const LinearInput& desc) {
  if (desc.labels) {
    if (desc.labels->size() != desc.columns.size()) {
      throw InputError("ground_set size differs from column count");
    }
    return GroundSet(*desc.labels);
  }
  return GroundSet::numbered(static_cast<int>(desc.columns.size()));
}

void enumerate_uniform(int n, int max_size, int start, ElementSet current, std::vector<ElementSet>& out) {
  out.push_back(current);
  if (current.size() == max_size) return;
  for (int e = start; e < n; ++e) {
    ElementSet next = current;
    next.insert(e);
    enumerate_uniform(n, max_size, e + 1, next, out);
  }
}

}  // namespace

LinearMatroid::LinearMatroid(const LinearInput& desc) : field_(desc.field), p_(desc.p) {
  n_ = static_cast<int>(desc.columns.size());
  if (n_ == 0) throw InputError("linear matroid needs at least one column");
  if (n_ > ElementSet::kMaxElements) throw InputError("more than 64 columns");
  const std::size_t dim = desc.columns.front().size();
  for (const auto& c : desc.columns) {
    if (c.size() != dim) throw InputError("columns have different lengths");
  }
  if (field_ == Field::PrimeField) {
    if (!is_prime(p_)) throw InputError("p = " + std::to_string(p_) + " is not prime");
    for (const auto& c : desc.columns) {
      std::vector<std::int64_t> col;
      for (const auto& q : c) col.push_back(reduce_mod(q, p_));
      modular_.push_back(std::move(col));
    }
  } else {
    rational_ = desc.columns;
  }
}

int LinearMatroid::rank(ElementSet s) const {
  return field_ == Field::PrimeField ? rank_mod_prime(modular_, s, p_) : rank_over_rationals(rational_, s);
}

ElementSet LinearMatroid::closure(ElementSet s) const {
  const int base = rank(s);
  ElementSet out = s;
  for (int e = 0; e < n_; ++e) {
    if (s.contains(e)) continue;
    ElementSet t = s;
    t.insert(e);
    if (rank(t) == base) out.insert(e);
  }
  return out;
}

std::vector<ElementSet> LinearMatroid::flats() const {
  std::vector<ElementSet> out;
  std::set<std::uint64_t> level{closure(ElementSet{}).bits()};
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (auto bits : level) {
      const ElementSet x(bits);
      out.push_back(x);
      for (int e = 0; e < n_; ++e) {
        if (x.contains(e)) continue;
        ElementSet y = x;
        y.insert(e);
        next.insert(closure(y).bits());
      }
    }
    level = std::move(next);
  }
  return out;
}

GeometricLattice build_lattice(const MatroidInput& desc) {
  return std::visit(
      [](const auto& s) -> GeometricLattice {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FlatsInput>) {
          std::vector<ElementSet> flats;
          for (const auto& f : s.flats) flats.push_back(s.ground.subset(f));
          if (flats.empty()) throw InputError("flats list is empty");
          return GeometricLattice::from_flats(s.ground, std::move(flats));
        } else if constexpr (std::is_same_v<T, LinearInput>) {
          LinearMatroid m(s);
          return GeometricLattice::from_flats(ground_for(s), m.flats());
        } else {
          if (s.n < 1 || s.n > ElementSet::kMaxElements) throw InputError("uniform: n must be in [1, 64]");
          if (s.r < 0 || s.r > s.n) throw InputError("uniform: r must be in [0, n]");
          std::vector<ElementSet> flats;
          if (s.r > 0) enumerate_uniform(s.n, s.r - 1, 0, ElementSet{}, flats);
          flats.push_back(ElementSet::full(s.n));
          return GeometricLattice::from_flats(GroundSet::numbered(s.n), std::move(flats));
        }
      },
      desc);
}

GeometricLattice load_matroid(const MatroidInput& desc) {
  GeometricLattice lattice = build_lattice(desc);
  const ValidationReport report = verify_geometric(lattice);
  for (const auto& c : report.checks()) {
    if (!c.passed) throw InputError(c.detail.empty() ? c.name + " failed" : c.detail);
  }
  return lattice;
}

}  // namespace hsr
