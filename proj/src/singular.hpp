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

// The singular set K_l: membership through the order/valuation criterion,
// fast whole-set scans, the matrix-rank oracle, and numerical checks of the
// character-sum identities behind the asymptotic count.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "arith.hpp"
#include "matrix.hpp"

namespace demj::singular {

using arith::i64;
using arith::OrderProfile;
using arith::PrimeContext;
using arith::u64;

struct CriterionEvidence {
  u64 k = 0;
  OrderProfile ord_k;   // ord(k)
  OrderProfile ord_neg; // ord(-k^2 - k)
  OrderProfile ord_pos; // ord(k^2 + k)
  bool cond_i = false;   // ord(k) != 3
  bool cond_ii = false;  // nu2(ord k) = nu2(ord(-k^2-k)) = 0
  bool cond_iii = false; // nu3(ord k) > nu3(ord(k^2+k))

  bool in_k() const noexcept { return cond_i && cond_ii && cond_iii; }
  /// Membership in the relaxed set that drops condition (i).
  bool in_k_star() const noexcept { return cond_ii && cond_iii; }
};

CriterionEvidence criterion(const PrimeContext& ctx, u64 k);

enum class ScanStrategy {
  Auto,
  /// Discrete-log table over the whole group; O(ell) time and memory.
  DiscreteLog,
  /// Walk the subgroup of odd-2-part order with two powerings per element;
  /// O((ell-1)/2^alpha * log ell) time, O(1) memory.
  Subgroup,
  /// criterion() for every k. Reference path.
  PerElement,
};

/// Largest ell for which ScanStrategy::DiscreteLog is allowed.
inline constexpr u64 kDiscreteLogLimit = u64{1} << 25;

/// Sorted members of K_ell.
std::vector<u64> scan_k_set(const PrimeContext& ctx, ScanStrategy strategy = ScanStrategy::Auto);

/// Some member of K_ell, found by walking the subgroup and stopping early.
std::optional<u64> find_singular_k(const PrimeContext& ctx);

bool has_singular_k(const PrimeContext& ctx);

struct KSetReport {
  PrimeContext ctx;
  std::vector<u64> members;
  mpq_class main_term;   // ell / 2^(2 alpha + 2) * (1 - 3^(-2 beta))
  mpq_class error_bound; // 4 beta^2 sqrt(ell) + 33/16, sqrt rounded up
  bool within_bound = false;

  std::size_t count() const noexcept { return members.size(); }
};

mpq_class main_term(const PrimeContext& ctx);
mpq_class error_bound(const PrimeContext& ctx);

/// Rational upper bound for sqrt(n), within 1e-7 of the true value.
mpq_class sqrt_upper(u64 n);

/// Fills main term, bound and the comparison for a known member list.
KSetReport make_report(const PrimeContext& ctx, std::vector<u64> members);

KSetReport k_set(const PrimeContext& ctx);

/// K_ell as the set of k whose Demjanenko matrix is rank deficient.
/// Throws DimensionTooLarge when (ell - 1)/2 exceeds `cap`.
std::vector<u64> k_set_oracle(const PrimeContext& ctx,
                              std::size_t cap = matrix::kDefaultRankCap);

struct MStat {
  u64 k = 0;
  u64 M = 0; // lcm(ord(-k^2-k), ord(k))
};

MStat m_value(const PrimeContext& ctx, u64 k);

struct MStatsSummary {
  u64 ell = 0;
  std::vector<MStat> values; // one per k in K_ell, ascending k
  std::optional<u64> min_M;
  std::optional<u64> max_M;
};

MStatsSummary m_stats(const PrimeContext& ctx);

/// 1 iff nu2(ord u) = 0.
int indicator_zeta(const PrimeContext& ctx, i64 u);
/// 1 iff nu3(ord u) = h. Throws HOutOfRange when h > beta.
int indicator_eta(const PrimeContext& ctx, i64 u, unsigned h);

struct CharacterReport {
  u64 ell = 0;
  double tolerance = 0;
  double max_orthogonality_deviation = 0;
  double max_zeta_deviation = 0;
  double max_eta_deviation = 0;
  std::size_t evaluations = 0;

  double max_deviation() const noexcept;
  bool passed() const noexcept { return max_deviation() < tolerance; }
};

inline constexpr u64 kCharacterCap = 200;

/// Realizes the characters through a primitive root in complex floating point
/// and compares the divisor orthogonality relation and the zeta / eta
/// character expansions against the order-based definitions, for every unit.
CharacterReport verify_character_identities(const PrimeContext& ctx, double tolerance = 1e-9,
                                            u64 cap = kCharacterCap);

struct BSumReport {
  u64 ell = 0;
  std::size_t k_count = 0;      // #K_ell
  std::size_t k_star_count = 0; // #K*_ell
  mpq_class interior_sum;       // sum of B_k over k = 1 .. ell-2
  mpq_class full_sum;           // sum of B_k over all of F_ell
  mpq_class b_zero;
  mpq_class b_minus_one;
  mpq_class a0_closed;         // (1 - 3^(-2 beta)) / 2^(2 alpha + 2)
  mpq_class a0_double_sum;     // the unsimplified r, s double sum
  mpq_class b_minus_one_claim; // (2^alpha - 2) a0

  bool interior_sum_matches() const { return interior_sum == k_star_count; }
  bool full_sum_matches() const {
    return full_sum - b_zero - b_minus_one == k_star_count;
  }
  bool star_gap_ok() const {
    const std::size_t hi = k_count > k_star_count ? k_count : k_star_count;
    const std::size_t lo = k_count > k_star_count ? k_star_count : k_count;
    return hi - lo <= 2;
  }
  bool a0_matches() const { return a0_closed == a0_double_sum && b_zero == a0_closed; }
  bool b_minus_one_claim_holds() const { return b_minus_one == b_minus_one_claim; }
  bool passed() const {
    return interior_sum_matches() && full_sum_matches() && star_gap_ok() && a0_matches() &&
           b_minus_one_claim_holds();
  }
};

/// B_{k,l} for k in F_l, with indicators taking their constant character
/// terms at 0. Throws BetaZero when beta = 0.
mpq_class b_term(const PrimeContext& ctx, u64 k);

BSumReport verify_bsum_identities(const PrimeContext& ctx);

} // namespace demj::singular
