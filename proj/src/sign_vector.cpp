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

#include "hsr/sign_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsr {

namespace {
int order_key(Sign s) { return s == Sign::Zero ? 0 : (s == Sign::Plus ? 1 : 2); }
}  // namespace

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> out;
  for (char c : text) {
    switch (c) {
      case '+':
      case 'p':
        out.push_back(Sign::Plus);
        break;
      case '-':
      case 'm':
        out.push_back(Sign::Minus);
        break;
      case '0':
        out.push_back(Sign::Zero);
        break;
      default:
        throw std::invalid_argument("bad sign character '" + std::string(1, c) + "'");
    }
  }
  return SignVector(std::move(out));
}

bool SignVector::is_zero() const {
  for (Sign s : entries_) {
    if (s != Sign::Zero) return false;
  }
  return true;
}

std::vector<int> SignVector::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != Sign::Zero) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> SignVector::zero_set() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == Sign::Zero) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool SignVector::leq(const SignVector& other) const {
  if (other.size() != size()) throw std::invalid_argument("sign vectors of different length");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != Sign::Zero && entries_[i] != other.entries_[i]) return false;
  }
  return true;
}

SignVector SignVector::operator-() const {
  SignVector out(*this);
  for (auto& s : out.entries_) s = negate(s);
  return out;
}

SignVector SignVector::compose(const SignVector& other) const {
  if (other.size() != size()) throw std::invalid_argument("sign vectors of different length");
  SignVector out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (out.entries_[i] == Sign::Zero) out.entries_[i] = other.entries_[i];
  }
  return out;
}

SignVector SignVector::meet(const SignVector& other) const {
  if (other.size() != size()) throw std::invalid_argument("sign vectors of different length");
  SignVector out(size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == other.entries_[i]) out.entries_[i] = entries_[i];
  }
  return out;
}

SignVector SignVector::restrict_zero(const std::vector<int>& positions) const {
  SignVector out(*this);
  for (int p : positions) out.entries_.at(static_cast<std::size_t>(p)) = Sign::Zero;
  return out;
}

SignVector SignVector::extend(Sign s) const {
  SignVector out(*this);
  out.entries_.push_back(s);
  return out;
}

SignVector SignVector::compressed() const {
  std::vector<Sign> out;
  for (Sign s : entries_) {
    if (s != Sign::Zero) out.push_back(s);
  }
  return SignVector(std::move(out));
}

std::string SignVector::to_string() const {
  std::string out;
  for (Sign s : entries_) out.push_back(to_char(s));
  return out;
}

bool operator<(const SignVector& a, const SignVector& b) {
  const auto sa = a.support().size();
  const auto sb = b.support().size();
  if (sa != sb) return sa < sb;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return order_key(a[i]) < order_key(b[i]);
  }
  return a.size() < b.size();
}

}  // namespace hsr
