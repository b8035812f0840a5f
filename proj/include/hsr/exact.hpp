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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hsr/element_set.hpp"

namespace hsr {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4", " 2 / 6 ". Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

bool is_prime(std::int64_t p);

/// Columns of a matrix over Q, one entry vector per ground-set element.
using RationalColumns = std::vector<std::vector<Rational>>;
/// Columns over GF(p), entries already reduced into [0, p).
using ModularColumns = std::vector<std::vector<std::int64_t>>;

/// Rank of the selected columns over Q. Fraction-free (Bareiss) elimination on
/// the integer matrix obtained by clearing each column's denominators.
int rank_over_rationals(const RationalColumns& columns, ElementSet selection);

/// Rank of the selected columns over GF(p).
int rank_mod_prime(const ModularColumns& columns, ElementSet selection, std::int64_t p);

/// A nonzero integer vector orthogonal to every selected column, scaled to have
/// coprime entries with the first nonzero entry positive. Requires the selected
/// columns to span a hyperplane of Q^dimension; throws std::invalid_argument otherwise.
std::vector<Integer> hyperplane_normal(const RationalColumns& columns, ElementSet selection, int dimension);

/// Exact sign of the dot product of an integer vector with a rational vector.
int dot_sign(const std::vector<Integer>& x, const std::vector<Rational>& v);

}  // namespace hsr
