// Copyright 2026 The wigner-codes Authors
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

// One-shot invariant suite for a single field order.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wigner_codes/gfield.hpp"
#include "wigner_codes/qlinalg.hpp"

namespace wigner_codes {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
  bool skipped = false;  // not applicable at this q
};

struct VerifyReport {
  int q = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
  /// One "PASS|FAIL|SKIP name: detail" line per check.
  std::string to_text() const;
};

/// Trace coordinates of the orbit of the all-zero facet label at q = 4,
/// columns [inf, 0, 1, xi, xi^2].
const std::vector<std::string>& reference_orbit_q4();

VerifyReport verify_all(const FieldPtr& field, std::uint64_t seed = 0, double tol = kDefaultTolerance);

}  // namespace wigner_codes
