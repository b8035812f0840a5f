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

#include <string>
#include <utility>
#include <vector>

namespace hsr {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail checks. Failures are data, not exceptions.
class ValidationReport {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back(Check{std::move(name), passed, std::move(detail)});
  }
  void append(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back(Check{prefix + c.name, c.passed, c.detail});
  }

  bool ok() const {
    for (const auto& c : checks_) {
      if (!c.passed) return false;
    }
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }
  /// First check with the given name, or nullptr.
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace hsr
