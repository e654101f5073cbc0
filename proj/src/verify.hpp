/*
 * Copyright 2026 The demjanenko authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Range-wide consistency checks. Each mode walks every prime up to a limit
// and records the offending (ell, k) pairs instead of stopping at the first.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "matrix.hpp"

namespace demj::verify {

using arith::u64;

enum class Mode {
  Oracle,      // criterion membership against matrix rank deficiency
  CountBound,  // count within the asymptotic error bound
  Identities,  // character expansions and B-sum identities
  RankFormula, // rank of every singular matrix against M(k, ell)
};

const char* mode_name(Mode mode) noexcept;
/// Parses the lower-case mode name; nullopt if unknown.
std::optional<Mode> parse_mode(const std::string& name) noexcept;

/// Largest max_ell accepted by a mode.
u64 mode_cap(Mode mode, std::size_t rank_cap = matrix::kDefaultRankCap);

struct Failure {
  u64 ell = 0;
  std::optional<u64> k;
  std::string detail;
};

struct Report {
  Mode mode = Mode::Oracle;
  u64 max_ell = 0;
  std::size_t primes_checked = 0;
  std::size_t checks = 0;
  std::vector<Failure> failures; // ascending ell, then k

  bool passed() const noexcept { return failures.empty(); }
};

/// Throws RangeExceeded when max_ell is above mode_cap().
Report run(Mode mode, u64 max_ell, unsigned workers = 1,
           std::size_t rank_cap = matrix::kDefaultRankCap);

} // namespace demj::verify
