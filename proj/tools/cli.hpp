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
#include <utility>
#include <vector>

#include "hermseq/complexity.hpp"
#include "hermseq/finite_field.hpp"

namespace hermseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "7" or "lo:hi" (inclusive). Throws std::invalid_argument on an empty or
// malformed range.
IntRange parse_range(const std::string& text);

struct RunConfig {
  std::string subcommand;
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;
  std::string a;  // empty: epsilon
  std::optional<int> ell;
  std::optional<IntRange> k;
  std::optional<IntRange> n;
  std::string mode = "per-variable";
  std::uint64_t budget = kDefaultMonomialBudget;
  std::string out;
  std::string preset;
  std::string input;
  // verify only
  std::vector<std::uint32_t> qs{2, 3};
  std::uint32_t theorem_max_q = 3;
  std::uint64_t samples = 100;
  std::string corrupt;
};

// Reads the index,i,j,value CSV written by the sequence command.
std::vector<FieldElement> read_sequence_csv(std::istream& in, const FieldCtx& ctx);

// Executes one command line (args exclude the program name). Output goes to
// `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermseq::cli
