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

#include "hsr/topo/homology.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace hsr::topo {

namespace {

using boost::multiprecision::abs;

// Sparse elimination state with row and column access.
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& m)
      : rows_(static_cast<std::size_t>(m.rows)), cols_(static_cast<std::size_t>(m.cols)) {
    for (const auto& e : m.entries) {
      if (e.value == 0) continue;
      if (e.row < 0 || e.row >= m.rows || e.col < 0 || e.col >= m.cols) throw std::out_of_range("matrix entry out of range");
      Integer& slot = rows_[static_cast<std::size_t>(e.row)][e.col];
      slot += e.value;
      if (slot == 0) {
        rows_[static_cast<std::size_t>(e.row)].erase(e.col);
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) cols_[static_cast<std::size_t>(c)].insert(static_cast<int>(r));
    }
  }

  std::vector<Integer> run() {
    std::vector<Integer> diagonal = unit_pass();
    while (true) {
      const auto pivot = choose_pivot();
      if (!pivot) break;
      const auto [p, q] = *pivot;
      const Integer a = rows_[static_cast<std::size_t>(p)].at(q);

      // Reduce the pivot column by row operations.
      const std::vector<int> others(cols_[static_cast<std::size_t>(q)].begin(), cols_[static_cast<std::size_t>(q)].end());
      for (int i : others) {
        if (i == p) continue;
        const Integer t = rows_[static_cast<std::size_t>(i)].at(q) / a;
        if (t != 0) add_row_multiple(i, p, -t);
      }
      // Reduce the pivot row by column operations; only row p changes once the
      // column is clear, so skip while it is not.
      if (cols_[static_cast<std::size_t>(q)].size() == 1) {
        std::vector<std::pair<int, Integer>> updates;
        for (const auto& [j, c] : rows_[static_cast<std::size_t>(p)]) {
          if (j != q) updates.emplace_back(j, c / a);
        }
        for (const auto& [j, t] : updates) {
          if (t != 0) set_entry(p, j, rows_[static_cast<std::size_t>(p)].at(j) - t * a);
        }
      }
      if (cols_[static_cast<std::size_t>(q)].size() == 1 && rows_[static_cast<std::size_t>(p)].size() == 1) {
        diagonal.push_back(abs(a));
        set_entry(p, q, 0);
      }
    }
    return diagonal;
  }

 private:
  // Eliminates on +-1 entries column by column until none is left. A unit pivot
  // with a cleared column leaves only its own row to clear, so the row is
  // dropped.
  std::vector<Integer> unit_pass() {
    std::vector<Integer> diagonal;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t q = 0; q < cols_.size(); ++q) {
        int p = -1;
        for (int r : cols_[q]) {
          const auto& row = rows_[static_cast<std::size_t>(r)];
          if (abs(row.at(static_cast<int>(q))) == 1 &&
              (p < 0 || row.size() < rows_[static_cast<std::size_t>(p)].size())) {
            p = r;
          }
        }
        if (p < 0) continue;
        const Integer a = rows_[static_cast<std::size_t>(p)].at(static_cast<int>(q));
        const std::vector<int> others(cols_[q].begin(), cols_[q].end());
        for (int i : others) {
          if (i != p) add_row_multiple(i, p, -rows_[static_cast<std::size_t>(i)].at(static_cast<int>(q)) * a);
        }
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(p)]) cols_[static_cast<std::size_t>(c)].erase(p);
        rows_[static_cast<std::size_t>(p)].clear();
        diagonal.emplace_back(1);
        progress = true;
      }
    }
    return diagonal;
  }

  std::optional<std::pair<int, int>> choose_pivot() const {
    std::optional<std::pair<int, int>> best;
    Integer best_value;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        const Integer magnitude = abs(v);
        const std::size_t cost = (rows_[r].size() - 1) * (cols_[static_cast<std::size_t>(c)].size() - 1);
        if (!best || magnitude < best_value || (magnitude == best_value && cost < best_cost)) {
          best = std::make_pair(static_cast<int>(r), c);
          best_value = magnitude;
          best_cost = cost;
        }
      }
    }
    return best;
  }

  void set_entry(int r, int c, const Integer& value) {
    auto& row = rows_[static_cast<std::size_t>(r)];
    if (value == 0) {
      row.erase(c);
      cols_[static_cast<std::size_t>(c)].erase(r);
    } else {
      row[c] = value;
      cols_[static_cast<std::size_t>(c)].insert(r);
    }
  }

  // row[target] += factor * row[source]
  void add_row_multiple(int target, int source, const Integer& factor) {
    const auto source_row = rows_[static_cast<std::size_t>(source)];
    for (const auto& [c, v] : source_row) {
      auto& row = rows_[static_cast<std::size_t>(target)];
      const auto it = row.find(c);
      const Integer updated = (it == row.end() ? Integer(0) : it->second) + factor * v;
      set_entry(target, c, updated);
    }
  }

  std::vector<std::map<int, Integer>> rows_;
  std::vector<std::set<int>> cols_;
};

}  // namespace

std::vector<Integer> smith_invariants(const SparseMatrix& matrix) {
  std::vector<Integer> diagonal = Eliminator(matrix).run();
  // Turn the diagonal into invariant factors: gcd/lcm exchange on the entries
  // that are not units.
  std::vector<Integer> units;
  std::vector<Integer> rest;
  for (auto& d : diagonal) (d == 1 ? units : rest).push_back(d);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      const Integer g = boost::multiprecision::gcd(rest[i], rest[j]);
      const Integer l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  }
  units.insert(units.end(), rest.begin(), rest.end());
  return units;
}

namespace {

SparseMatrix boundary_between(const std::vector<Face>& faces, const std::vector<Face>& lower, int dimension) {
  SparseMatrix m;
  m.cols = static_cast<int>(faces.size());
  if (dimension == 0) {
    m.rows = 1;
    for (int c = 0; c < m.cols; ++c) m.entries.push_back({0, c, 1});
    return m;
  }
  m.rows = static_cast<int>(lower.size());
  std::map<Face, int> row_of;
  for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], static_cast<int>(i));
  for (std::size_t c = 0; c < faces.size(); ++c) {
    for (std::size_t drop = 0; drop < faces[c].size(); ++drop) {
      Face side = faces[c];
      side.erase(side.begin() + static_cast<std::ptrdiff_t>(drop));
      m.entries.push_back({row_of.at(side), static_cast<int>(c), drop % 2 == 0 ? 1 : -1});
    }
  }
  return m;
}

std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& k) {
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(k.dimension() + 1));
  for (auto& f : k.all_faces()) out[f.size() - 1].push_back(std::move(f));
  return out;
}

}  // namespace

SparseMatrix boundary_matrix(const SimplicialComplex& k, int dimension) {
  if (dimension < 0 || dimension > k.dimension()) {
    SparseMatrix m;
    m.rows = dimension == 0 ? 1 : 0;
    return m;
  }
  const auto buckets = faces_by_dimension(k);
  const auto d = static_cast<std::size_t>(dimension);
  return boundary_between(buckets[d], dimension == 0 ? std::vector<Face>{} : buckets[d - 1], dimension);
}

long HomologyProfile::betti(int d) const {
  for (const auto& h : dims) {
    if (h.dimension == d) return h.betti;
  }
  return 0;
}

std::vector<Integer> HomologyProfile::torsion(int d) const {
  for (const auto& h : dims) {
    if (h.dimension == d) return h.torsion;
  }
  return {};
}

bool HomologyProfile::trivial() const {
  return std::all_of(dims.begin(), dims.end(), [](const auto& h) { return h.betti == 0 && h.torsion.empty(); });
}

bool HomologyProfile::is_sphere_profile(int d) const {
  if (betti(d) != 1) return false;
  return std::all_of(dims.begin(), dims.end(), [d](const auto& h) {
    return h.torsion.empty() && (h.dimension == d || h.betti == 0);
  });
}

std::string HomologyProfile::summary() const {
  if (dims.empty()) return "empty";
  std::string out;
  for (const auto& h : dims) {
    if (!out.empty()) out += ' ';
    out += "b" + std::to_string(h.dimension) + "=" + std::to_string(h.betti);
    if (!h.torsion.empty()) {
      out += " T" + std::to_string(h.dimension) + "=[";
      for (std::size_t i = 0; i < h.torsion.size(); ++i) out += (i ? "," : "") + h.torsion[i].str();
      out += "]";
    }
  }
  return out;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  const int top = static_cast<int>(std::max(a.dims.size(), b.dims.size()));
  for (int d = 0; d < top; ++d) {
    if (a.betti(d) != b.betti(d) || a.torsion(d) != b.torsion(d)) return false;
  }
  return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
  HomologyProfile profile;
  const int top = k.dimension();
  if (top < 0) return profile;
  const auto buckets = faces_by_dimension(k);

  // rank and invariant factors of the boundary out of dimension d, for d = 0..top+1.
  std::vector<long> rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(top) + 2);
  for (int d = 0; d <= top; ++d) {
    const auto du = static_cast<std::size_t>(d);
    factors[du] = smith_invariants(boundary_between(buckets[du], d == 0 ? std::vector<Face>{} : buckets[du - 1], d));
    rank[static_cast<std::size_t>(d)] = static_cast<long>(factors[static_cast<std::size_t>(d)].size());
  }
  for (int d = 0; d <= top; ++d) {
    DimensionHomology h;
    h.dimension = d;
    const auto du = static_cast<std::size_t>(d);
    h.betti = static_cast<long>(buckets[du].size()) - rank[du] - rank[du + 1];
    for (const auto& f : factors[du + 1]) {
      if (f > 1) h.torsion.push_back(f);
    }
    profile.dims.push_back(std::move(h));
  }
  return profile;
}

bool is_homology_sphere(const SimplicialComplex& k, int d) {
  if (d < 0) return k.empty();
  if (k.empty()) return false;
  return reduced_homology(k).is_sphere_profile(d);
}

bool is_homology_point(const SimplicialComplex& k) { return !k.empty() && reduced_homology(k).trivial(); }

}  // namespace hsr::topo
