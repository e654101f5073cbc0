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
#include "verify.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"
#include "search.hpp"
#include "singular.hpp"

namespace demj::verify {

namespace {

constexpr u64 kCountBoundCap = u64{1} << 32;
constexpr u64 kIdentitiesCap = 10000;

struct PrimeResult {
  std::size_t checks = 0;
  std::vector<Failure> failures;
};

std::string list(const std::vector<u64>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

PrimeResult check_oracle(u64 ell, std::size_t rank_cap) {
  PrimeResult r;
  const auto ctx = arith::make_context(ell);
  const auto by_rank = singular::k_set_oracle(ctx, rank_cap);
  const auto by_criterion = singular::scan_k_set(ctx, singular::ScanStrategy::PerElement);
  r.checks = ell - 2;
  std::vector<u64> diff;
  std::set_symmetric_difference(by_rank.begin(), by_rank.end(), by_criterion.begin(),
                                by_criterion.end(), std::back_inserter(diff));
  for (u64 k : diff) {
    const bool deficient = std::binary_search(by_rank.begin(), by_rank.end(), k);
    r.failures.push_back({ell, k,
                          deficient ? "rank deficient but criterion rejects"
                                    : "criterion accepts but matrix has full rank"});
  }
  const auto fast = singular::scan_k_set(ctx);
  ++r.checks;
  if (fast != by_criterion)
    r.failures.push_back({ell, std::nullopt,
                          "fast scan " + list(fast) + " differs from " + list(by_criterion)});
  return r;
}

PrimeResult check_count_bound(u64 ell) {
  PrimeResult r;
  const auto rep = singular::k_set(arith::make_context(ell));
  r.checks = 1;
  if (!rep.within_bound) {
    std::ostringstream d;
    d << "count " << rep.count() << " vs main term " << rep.main_term << " exceeds bound "
      << rep.error_bound;
    r.failures.push_back({ell, std::nullopt, d.str()});
  }
  return r;
}

PrimeResult check_identities(u64 ell) {
  PrimeResult r;
  const auto ctx = arith::make_context(ell);
  if (ell <= singular::kCharacterCap) {
    const auto ch = singular::verify_character_identities(ctx);
    ++r.checks;
    if (!ch.passed()) {
      std::ostringstream d;
      d << "character expansion deviates by " << ch.max_deviation();
      r.failures.push_back({ell, std::nullopt, d.str()});
    }
  }
  if (ctx.beta == 0) return r;
  const auto b = singular::verify_bsum_identities(ctx);
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.failures.push_back({ell, std::nullopt, what});
  };
  std::ostringstream d;
  d << "interior B-sum " << b.interior_sum << " != #K* " << b.k_star_count;
  expect(b.interior_sum_matches(), d.str());
  d.str("");
  d << "full B-sum " << b.full_sum << " minus endpoints != #K* " << b.k_star_count;
  expect(b.full_sum_matches(), d.str());
  d.str("");
  d << "#K " << b.k_count << " and #K* " << b.k_star_count << " differ by more than 2";
  expect(b.star_gap_ok(), d.str());
  d.str("");
  d << "a0 closed form " << b.a0_closed << ", double sum " << b.a0_double_sum << ", B_0 "
    << b.b_zero;
  expect(b.a0_matches(), d.str());
  d.str("");
  d << "B_-1 " << b.b_minus_one << " != (2^alpha - 2) a0 = " << b.b_minus_one_claim;
  expect(b.b_minus_one_claim_holds(), d.str());
  return r;
}

PrimeResult check_rank_formula(u64 ell, std::size_t rank_cap) {
  PrimeResult r;
  const auto ctx = arith::make_context(ell);
  for (u64 k : singular::scan_k_set(ctx)) {
    ++r.checks;
    const u64 M = singular::m_value(ctx, k).M;
    const auto rank = matrix::exact_rank(matrix::build_matrix(ctx, k), rank_cap);
    try {
      const u64 expected = matrix::rank_formula_value(ctx, k, M);
      if (rank != expected)
        r.failures.push_back({ell, k,
                              "rank " + std::to_string(rank) + " != formula " +
                                  std::to_string(expected) + " (M=" + std::to_string(M) + ")"});
    } catch (const Error& e) {
      r.failures.push_back({ell, k,
                            "rank " + std::to_string(rank) + ", formula undefined: " + e.what()});
    }
  }
  return r;
}

} // namespace

const char* mode_name(Mode mode) noexcept {
  switch (mode) {
  case Mode::Oracle: return "oracle";
  case Mode::CountBound: return "theorem1";
  case Mode::Identities: return "identities";
  case Mode::RankFormula: return "rankformula";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(const std::string& name) noexcept {
  for (Mode m : {Mode::Oracle, Mode::CountBound, Mode::Identities, Mode::RankFormula})
    if (name == mode_name(m)) return m;
  return std::nullopt;
}

u64 mode_cap(Mode mode, std::size_t rank_cap) {
  switch (mode) {
  case Mode::Oracle:
  case Mode::RankFormula: return 2 * static_cast<u64>(rank_cap) + 1;
  case Mode::CountBound: return kCountBoundCap;
  case Mode::Identities: return kIdentitiesCap;
  }
  return 0;
}

Report run(Mode mode, u64 max_ell, unsigned workers, std::size_t rank_cap) {
  if (max_ell > mode_cap(mode, rank_cap))
    throw Error(ErrorCode::RangeExceeded, std::string("max_ell above the cap for mode ") +
                                              mode_name(mode) + " (" +
                                              std::to_string(mode_cap(mode, rank_cap)) + ")");
  Report rep;
  rep.mode = mode;
  rep.max_ell = max_ell;
  const auto primes = search::primes_in_range(3, max_ell + 1);
  const auto results = detail::parallel_map(primes, workers, [&](u64 ell) {
    switch (mode) {
    case Mode::Oracle: return check_oracle(ell, rank_cap);
    case Mode::CountBound: return check_count_bound(ell);
    case Mode::Identities: return check_identities(ell);
    case Mode::RankFormula: return check_rank_formula(ell, rank_cap);
    }
    return PrimeResult{};
  });
  rep.primes_checked = primes.size();
  for (const auto& r : results) {
    rep.checks += r.checks;
    rep.failures.insert(rep.failures.end(), r.failures.begin(), r.failures.end());
  }
  return rep;
}

} // namespace demj::verify
