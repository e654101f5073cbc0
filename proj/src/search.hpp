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

// Range scans over primes: the count census with its error bound, the
// finite family l = 2*3^beta*m + 1, the smallest empty-K prime with many
// prime factors, the L_{beta,m} scan and the density census of primes with
// empty K_l.
//
// Work over an l-range is cut into shards that share nothing. Shards run on
// up to `workers` threads and are merged in ascending order on the calling
// thread, so results never depend on scheduling.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "matrix.hpp"
#include "singular.hpp"

namespace demj::search {

using arith::u64;

struct SearchConfig {
  u64 max_ell = 3;
  unsigned workers = 1;
  std::size_t exact_rank_cap = matrix::kDefaultRankCap;
  std::optional<std::string> checkpoint_path;
  u64 shard_size = u64{1} << 18;
};

/// Primes p with lo <= p < hi, by a segmented sieve.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// omega(n) for every n in [lo, hi); lo >= 1.
std::vector<std::uint8_t> omega_range(u64 lo, u64 hi);

/// Completed shard boundaries, one `done <lo> <hi>` line each.
class Checkpoint {
public:
  Checkpoint() = default;
  /// Loads existing lines; later calls to mark_done() append to the file.
  explicit Checkpoint(std::string path);

  /// True when the recorded intervals together contain [lo, hi).
  bool covers(u64 lo, u64 hi) const;
  void mark_done(u64 lo, u64 hi);
  const std::vector<std::pair<u64, u64>>& done() const noexcept { return done_; }

private:
  std::optional<std::string> path_;
  std::vector<std::pair<u64, u64>> done_;
};

/// Receives reports in ascending ell; return false to stop early.
using ReportSink = std::function<bool(const singular::KSetReport&)>;

/// One report per prime 3 <= ell <= cfg.max_ell. Shards already listed in the
/// checkpoint are skipped. Throws BoundViolated after delivering a report
/// whose count falls outside the error bound.
void census(const SearchConfig& cfg, const ReportSink& sink);

/// ceil(441 * 2^3 * beta^4 / 3^beta)
u64 m_beta(unsigned beta);

/// Primes 2*3^beta*m + 1 with 1 <= beta <= 17, 1 <= m <= m_beta - 1 and
/// gcd(m, 6) = 1, ascending.
std::vector<u64> family_search();

/// The m = 1 part of the same family: primes 2*3^beta + 1, beta <= 17.
std::vector<u64> family_m_one();

/// Members of `primes` whose K_ell is empty.
std::vector<u64> empty_k_primes(const std::vector<u64>& primes, unsigned workers = 1);

struct LsRecord {
  unsigned s = 0;
  u64 limit = 0;
  std::optional<u64> ell; // nullopt: not found below limit
  arith::Factorization factorization;

  bool found() const noexcept { return ell.has_value(); }
};

/// Smallest prime ell <= limit with ell = 1 mod 3, omega(ell - 1) >= s and
/// K_ell empty.
LsRecord find_ls(unsigned s, u64 limit, const SearchConfig& cfg = {});

enum class LbmStatus { InL, NotInL, Skipped };

struct LbmWitness {
  u64 k = 0;
  unsigned a = 0;
  unsigned b = 0;
  u64 d = 0;
  u64 e = 0;
  bool divides_resultant = false;
};

struct LbmRow {
  unsigned alpha = 0;
  u64 ell = 0; // 0 when 2^alpha 3^beta m + 1 is out of machine range
  LbmStatus status = LbmStatus::NotInL;
  std::string note;
  std::optional<LbmWitness> witness;
};

inline constexpr u64 kLbmBudget = u64{1} << 40;

/// For each alpha in [1, alpha_max] with 2^alpha 3^beta m + 1 prime, whether
/// K_ell is nonempty. Primes above `budget` are reported as Skipped.
std::vector<LbmRow> lbm_scan(unsigned beta, u64 m, unsigned alpha_max, u64 budget = kLbmBudget);

struct DensityReport {
  u64 x = 0;
  std::vector<u64> primes; // ell <= x, ell = 1 mod 3, K_ell empty
  double reference = 0;    // x^(3/4) (log x)^3

  u64 count() const noexcept { return primes.size(); }
};

DensityReport density_census(u64 x, const SearchConfig& cfg = {});

} // namespace demj::search
