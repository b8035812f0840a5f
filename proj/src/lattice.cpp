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

#include "hsr/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace hsr {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(ElementSet::kMaxElements)) {
    throw InputError("ground set has more than 64 elements");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      throw InputError("duplicate element label '" + labels_[i] + "'");
    }
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet GroundSet::subset(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) {
    auto e = index_of(l);
    if (!e) throw InputError("unknown element '" + l + "'");
    s.insert(*e);
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (int e : s.members()) out.push_back(label(e));
  return out;
}

std::string GroundSet::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (int e : s.members()) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  }
  return out + "}";
}

GeometricLattice GeometricLattice::from_flats(GroundSet ground, std::vector<ElementSet> flats) {
  const ElementSet all = ground.all();
  for (auto f : flats) {
    if (!f.subset_of(all)) throw InputError("flat is not a subset of the ground set");
  }
  std::sort(flats.begin(), flats.end(), [](ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());

  // Height in the inclusion order; proper subsets come earlier in size order.
  std::vector<int> height(flats.size(), 0);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j].proper_subset_of(flats[i])) height[i] = std::max(height[i], height[j] + 1);
    }
  }
  std::vector<std::size_t> order(flats.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return height[a] != height[b] ? height[a] < height[b] : lex_less(flats[a], flats[b]);
  });

  GeometricLattice out;
  out.ground_ = std::move(ground);
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.flats_.push_back(flats[order[k]]);
    out.rank_of_.push_back(height[order[k]]);
    out.index_.emplace(flats[order[k]].bits(), static_cast<FlatId>(k));
  }
  return out;
}

std::optional<FlatId> GeometricLattice::find(ElementSet s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FlatId GeometricLattice::top() const {
  if (auto t = find(ground_.all())) return *t;
  return static_cast<FlatId>(flats_.size()) - 1;
}

ElementSet GeometricLattice::closure_set(ElementSet s) const {
  ElementSet result = ground_.all();
  for (auto f : flats_) {
    if (s.subset_of(f)) result = result & f;
  }
  return result;
}

FlatId GeometricLattice::closure(ElementSet s) const {
  const ElementSet c = closure_set(s);
  auto id = find(c);
  if (!id) throw std::logic_error("closure " + ground_.format(c) + " is not a flat");
  return *id;
}

FlatId GeometricLattice::meet(FlatId a, FlatId b) const { return closure(flat(a) & flat(b)); }

FlatId GeometricLattice::join(FlatId a, FlatId b) const { return closure(flat(a) | flat(b)); }

int GeometricLattice::subset_rank(ElementSet s) const { return rank(closure(s)); }

std::vector<FlatId> GeometricLattice::atoms() const {
  std::vector<FlatId> out;
  for (FlatId i = 0; i < static_cast<FlatId>(flats_.size()); ++i) {
    if (rank(i) == 1) out.push_back(i);
  }
  return out;
}

std::vector<FlatId> GeometricLattice::coatoms() const {
  std::vector<FlatId> out;
  const int r = rank();
  for (FlatId i = 0; i < static_cast<FlatId>(flats_.size()); ++i) {
    if (rank(i) == r - 1) out.push_back(i);
  }
  return out;
}

std::vector<FlatId> GeometricLattice::coat_above(FlatId x) const {
  std::vector<FlatId> out;
  for (FlatId c : coatoms()) {
    if (leq(x, c)) out.push_back(c);
  }
  return out;
}

std::vector<FlatId> GeometricLattice::upper_covers(FlatId x) const {
  std::vector<FlatId> out;
  for (FlatId i = 0; i < static_cast<FlatId>(flats_.size()); ++i) {
    if (rank(i) == rank(x) + 1 && leq(x, i)) out.push_back(i);
  }
  return out;
}

GeometricLattice GeometricLattice::reindexed(const GroundSet& order) const {
  if (order.size() != ground_.size()) throw InputError("ground sets differ in size");
  std::vector<int> to_new(static_cast<std::size_t>(ground_.size()));
  for (int e = 0; e < ground_.size(); ++e) {
    auto pos = order.index_of(ground_.label(e));
    if (!pos) throw InputError("ground sets differ: '" + ground_.label(e) + "' missing");
    to_new[static_cast<std::size_t>(e)] = *pos;
  }
  std::vector<ElementSet> moved;
  for (auto f : flats_) {
    ElementSet g;
    for (int e : f.members()) g.insert(to_new[static_cast<std::size_t>(e)]);
    moved.push_back(g);
  }
  return from_flats(order, std::move(moved));
}

ValidationReport verify_geometric(const GeometricLattice& lattice) {
  ValidationReport report;
  const auto& flats = lattice.flats();
  const auto n = static_cast<FlatId>(flats.size());
  const GroundSet& ground = lattice.ground_set();

  const bool has_top = lattice.find(ground.all()).has_value();
  report.add("top is ground set", has_top, has_top ? "" : "ground set is not a flat");

  ElementSet bottom = ground.all();
  for (auto f : flats) bottom = bottom & f;
  const bool has_bottom = lattice.find(bottom).has_value();
  report.add("bottom exists", has_bottom,
             has_bottom ? "" : "intersection of all flats " + ground.format(bottom) + " is missing");

  std::string meet_detail;
  for (FlatId a = 0; a < n && meet_detail.empty(); ++a) {
    for (FlatId b = a + 1; b < n; ++b) {
      const ElementSet m = lattice.flat(a) & lattice.flat(b);
      if (!lattice.find(m)) {
        meet_detail = "not meet-closed: " + lattice.format(a) + " & " + lattice.format(b) + " = " + ground.format(m) +
                      " is not a flat";
        break;
      }
    }
  }
  report.add("meet is intersection", meet_detail.empty(), meet_detail);

  // Ranked: every cover relation raises the height by exactly one.
  std::string ranked_detail;
  for (FlatId a = 0; a < n && ranked_detail.empty(); ++a) {
    for (FlatId b = 0; b < n; ++b) {
      if (!lattice.flat(a).proper_subset_of(lattice.flat(b))) continue;
      bool cover = true;
      for (FlatId c = 0; c < n && cover; ++c) {
        cover = !(lattice.flat(a).proper_subset_of(lattice.flat(c)) && lattice.flat(c).proper_subset_of(lattice.flat(b)));
      }
      if (cover && lattice.rank(b) != lattice.rank(a) + 1) {
        ranked_detail = "not ranked: " + lattice.format(b) + " covers " + lattice.format(a) + " with a rank jump";
        break;
      }
    }
  }
  report.add("ranked", ranked_detail.empty(), ranked_detail);

  auto join_set = [&](ElementSet a, ElementSet b) { return lattice.closure_set(a | b); };
  auto rank_of_set = [&](ElementSet s) -> std::optional<int> {
    auto id = lattice.find(s);
    if (!id) return std::nullopt;
    return lattice.rank(*id);
  };

  std::string atomic_detail;
  for (FlatId x = 0; x < n && atomic_detail.empty(); ++x) {
    ElementSet join_of_atoms = lattice.closure_set(ElementSet{});
    for (FlatId a = 0; a < n; ++a) {
      if (lattice.rank(a) == 1 && lattice.leq(a, x)) join_of_atoms = join_set(join_of_atoms, lattice.flat(a));
    }
    if (join_of_atoms != lattice.flat(x)) {
      atomic_detail = "not atomic: " + lattice.format(x) + " is not a join of atoms";
    }
  }
  report.add("atomic", atomic_detail.empty(), atomic_detail);

  std::string semimodular_detail;
  for (FlatId a = 0; a < n && semimodular_detail.empty(); ++a) {
    for (FlatId b = a + 1; b < n; ++b) {
      auto m = rank_of_set(lattice.flat(a) & lattice.flat(b));
      auto j = rank_of_set(join_set(lattice.flat(a), lattice.flat(b)));
      if (!m || !j || lattice.rank(a) + lattice.rank(b) < *m + *j) {
        semimodular_detail = "not semimodular at " + lattice.format(a) + ", " + lattice.format(b);
        break;
      }
    }
  }
  report.add("semimodular", semimodular_detail.empty(), semimodular_detail);

  // Every non-top X is the meet of the coatoms above it.
  std::string coatom_detail;
  const int r = lattice.rank();
  for (FlatId x = 0; x < n && coatom_detail.empty(); ++x) {
    if (lattice.flat(x) == ground.all()) continue;
    ElementSet m = ground.all();
    for (FlatId c = 0; c < n; ++c) {
      if (lattice.rank(c) == r - 1 && lattice.leq(x, c)) m = m & lattice.flat(c);
    }
    if (m != lattice.flat(x)) coatom_detail = lattice.format(x) + " is not the meet of its coatoms";
  }
  report.add("coatom meet identity", coatom_detail.empty(), coatom_detail);

  // Intervals [x, y] inherit meets, joins and ranks, so they are geometric iff
  // every z >= x is the join of the covers of x below z.
  std::string interval_detail;
  for (FlatId x = 0; x < n && interval_detail.empty(); ++x) {
    for (FlatId z = 0; z < n; ++z) {
      if (!lattice.leq(x, z)) continue;
      ElementSet acc = lattice.flat(x);
      for (FlatId a = 0; a < n; ++a) {
        if (lattice.rank(a) == lattice.rank(x) + 1 && lattice.leq(x, a) && lattice.leq(a, z)) acc = join_set(acc, lattice.flat(a));
      }
      if (acc != lattice.flat(z)) {
        interval_detail = "interval [" + lattice.format(x) + ", top] is not atomic at " + lattice.format(z);
        break;
      }
    }
  }
  report.add("intervals geometric", interval_detail.empty(), interval_detail);
  return report;
}

Flag make_flag(const GeometricLattice& lattice, const std::vector<ElementSet>& chain) {
  if (static_cast<int>(chain.size()) != lattice.rank() + 1) {
    throw InputError("incomplete flag: expected " + std::to_string(lattice.rank() + 1) + " flats, got " +
                     std::to_string(chain.size()));
  }
  Flag flag;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto id = lattice.find(chain[i]);
    if (!id) throw InputError("incomplete flag: " + lattice.ground_set().format(chain[i]) + " is not a flat");
    if (lattice.rank(*id) != static_cast<int>(i)) {
      throw InputError("incomplete flag: " + lattice.format(*id) + " has rank " + std::to_string(lattice.rank(*id)) +
                       ", expected " + std::to_string(i));
    }
    if (i > 0 && !lattice.flat(flag.chain.back()).proper_subset_of(chain[i])) {
      throw InputError("incomplete flag: chain is not increasing at position " + std::to_string(i));
    }
    flag.chain.push_back(*id);
  }
  if (flag.chain.front() != lattice.bottom() || flag.chain.back() != lattice.top()) {
    throw InputError("incomplete flag: must run from bottom to top");
  }
  return flag;
}

Flag default_flag(const GeometricLattice& lattice) {
  Flag flag;
  flag.chain.push_back(lattice.bottom());
  while (flag.chain.back() != lattice.top()) {
    auto covers = lattice.upper_covers(flag.chain.back());
    if (covers.empty()) throw std::logic_error("no cover above " + lattice.format(flag.chain.back()));
    flag.chain.push_back(covers.front());
  }
  return flag;
}

std::vector<Flag> all_flags(const GeometricLattice& lattice) {
  std::vector<Flag> out;
  Flag current;
  current.chain.push_back(lattice.bottom());
  auto extend = [&](auto&& self) -> void {
    if (current.chain.back() == lattice.top()) {
      out.push_back(current);
      return;
    }
    for (FlatId c : lattice.upper_covers(current.chain.back())) {
      current.chain.push_back(c);
      self(self);
      current.chain.pop_back();
    }
  };
  extend(extend);
  return out;
}

FlagRestriction flag_restrict(const GeometricLattice& lattice, const Flag& flag, FlatId x) {
  FlagRestriction out;
  for (FlatId f : flag.chain) {
    const FlatId up = lattice.join(x, f);
    if (out.upper.empty() || out.upper.back() != up) out.upper.push_back(up);
    const FlatId down = lattice.meet(x, f);
    if (out.lower.empty() || out.lower.back() != down) out.lower.push_back(down);
  }
  return out;
}

}  // namespace hsr
