// Copyright 2026 The hermseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hermseq/complexity.hpp"

namespace hermseq {

// Replace one term of one constructed sequence before the theorem checks run.
struct InjectedCorruption {
  std::uint32_t q = 3;
  int ell = 3;
  std::size_t position = 1;  // 1-based term index
  std::uint32_t value = 0;   // canonical element index
};

struct VerifyOptions {
  std::vector<std::uint32_t> qs{2, 3};
  // The exact-complexity theorem grid runs only for q up to this value.
  std::uint32_t theorem_max_q = 3;
  std::uint64_t budget = kDefaultMonomialBudget;
  std::uint64_t substitution_samples = 100;
  std::optional<InjectedCorruption> corruption;
};

struct CheckResult {
  std::string group;  // field, curve, sequence, oracle, theorem, remarks
  std::string name;
  std::uint32_t q = 0;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

// Runs the invariant suite for each configured q (a prime power with
// q^2 <= 2^22). Never throws for a failed property; failures are reported.
VerifyReport run_verification(const VerifyOptions& options);

// Fixed-width pass/fail table.
void print_report(const VerifyReport& report, std::ostream& os);

}  // namespace hermseq
