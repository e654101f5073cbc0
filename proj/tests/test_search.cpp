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
#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "format.hpp"
#include "oracles.hpp"
#include "search.hpp"
#include "throws.hpp"

using namespace demj;
using namespace demj::search;

namespace {

std::string temp_path(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("demj_test_" + name);
  std::filesystem::remove(p);
  return p.string();
}

std::vector<std::string> census_rows(SearchConfig cfg) {
  std::vector<std::string> rows;
  census(cfg, [&](const singular::KSetReport& r) {
    rows.push_back(format::census_row(r, format::Format::Csv));
    return true;
  });
  return rows;
}

} // namespace

TEST(Sieve, PrimesInRange) {
  for (auto [lo, hi] : std::vector<std::pair<u64, u64>>{
           {0, 1000}, {2, 3}, {999, 1000}, {1000, 5000}, {104729, 104730}, {1000000, 1010000}}) {
    std::vector<u64> want;
    for (u64 n = lo; n < hi; ++n)
      if (oracle::is_prime(n)) want.push_back(n);
    ASSERT_EQ(primes_in_range(lo, hi), want) << lo << " " << hi;
  }
  EXPECT_TRUE(primes_in_range(10, 10).empty());
}

TEST(Sieve, OmegaRange) {
  const auto w = omega_range(1, 20000);
  for (u64 n = 1; n < 20000; ++n) ASSERT_EQ(w[n - 1], oracle::omega(n)) << n;
  const auto far = omega_range(30000000, 30001000);
  for (u64 i = 0; i < far.size(); ++i) ASSERT_EQ(far[i], oracle::omega(30000000 + i));
  EXPECT_TRUE(ThrowsCode([] { omega_range(0, 5); }, ErrorCode::InvalidArgument));
}

TEST(Checkpoint, RoundTrip) {
  const auto path = temp_path("ckpt_roundtrip");
  {
    Checkpoint c(path);
    EXPECT_TRUE(c.done().empty());
    c.mark_done(3, 100);
    c.mark_done(100, 200);
    c.mark_done(300, 400);
  }
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, "done 3 100\ndone 100 200\ndone 300 400\n");
  Checkpoint again(path);
  EXPECT_TRUE(again.covers(3, 100));
  EXPECT_TRUE(again.covers(120, 150));
  EXPECT_TRUE(again.covers(50, 150));
  EXPECT_FALSE(again.covers(2, 150));
  EXPECT_FALSE(again.covers(200, 300));
  EXPECT_FALSE(again.covers(150, 350));
  EXPECT_TRUE(again.covers(300, 400));
  std::filesystem::remove(path);
}

TEST(Census, Examples) {
  SearchConfig cfg;
  cfg.max_ell = 100;
  std::vector<singular::KSetReport> reps;
  census(cfg, [&](const singular::KSetReport& r) {
    reps.push_back(r);
    return true;
  });
  ASSERT_EQ(reps.size(), 24u);
  for (std::size_t i = 1; i < reps.size(); ++i) ASSERT_LT(reps[i - 1].ctx.ell, reps[i].ctx.ell);
  for (const auto& r : reps) {
    if (r.ctx.ell % 3 == 2) EXPECT_EQ(r.count(), 0u);
    if (r.ctx.ell == 31) EXPECT_EQ(r.count(), 0u);
    EXPECT_TRUE(r.within_bound);
  }
  cfg.max_ell = 2;
  EXPECT_TRUE(ThrowsCode([&] { census(cfg, [](auto&) { return true; }); },
                         ErrorCode::InvalidArgument));
}

TEST(Census, IndependentOfWorkerCount) {
  SearchConfig one;
  one.max_ell = 30000;
  one.shard_size = 1000;
  SearchConfig many = one;
  many.workers = 4;
  EXPECT_EQ(census_rows(one), census_rows(many));
}

TEST(Census, ResumesFromCheckpoint) {
  const auto path = temp_path("ckpt_census");
  SearchConfig cfg;
  cfg.max_ell = 5000;
  cfg.shard_size = 500;
  cfg.checkpoint_path = path;
  const auto full = [&] {
    SearchConfig plain = cfg;
    plain.checkpoint_path.reset();
    return census_rows(plain);
  }();
  std::vector<std::string> first;
  census(cfg, [&](const singular::KSetReport& r) {
    if (r.ctx.ell < 2003) first.push_back(format::census_row(r, format::Format::Csv));
    return r.ctx.ell < 2100;
  });
  Checkpoint c(path);
  EXPECT_TRUE(c.covers(3, 2003));
  EXPECT_FALSE(c.covers(2003, 2503));
  // The interrupted shard is redone in full.
  const auto rest = census_rows(cfg);
  ASSERT_FALSE(rest.empty());
  EXPECT_EQ(rest.front().substr(0, 5), "2003,");
  first.insert(first.end(), rest.begin(), rest.end());
  EXPECT_EQ(first, full);
  EXPECT_TRUE(census_rows(cfg).empty());
  std::filesystem::remove(path);
}

TEST(Family, BoundOnM) {
  EXPECT_EQ(m_beta(1), 1176u);
  EXPECT_EQ(m_beta(17), 3u);
  EXPECT_EQ(m_beta(18), 1u);
  EXPECT_EQ(m_beta(30), 1u);
}

TEST(Family, MatchesDirectEnumeration) {
  std::vector<u64> want;
  u64 three = 1;
  for (unsigned beta = 1; beta <= 17; ++beta) {
    three *= 3;
    // ceil(3528 beta^4 / 3^beta) computed in doubles is exact at this size
    const double bound = std::ceil(3528.0 * beta * beta * beta * beta / double(three));
    for (u64 m = 1; double(m) < bound; ++m)
      if (m % 2 && m % 3 && oracle::is_prime(2 * three * m + 1)) want.push_back(2 * three * m + 1);
  }
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  EXPECT_EQ(family_search(), want);
}

TEST(Family, MOneSubfamily) {
  const std::vector<u64> eight = {7, 19, 163, 487, 1459, 39367, 86093443, 258280327};
  EXPECT_EQ(family_m_one(), eight);
  const auto all = family_search();
  for (u64 p : eight) EXPECT_TRUE(std::binary_search(all.begin(), all.end(), p)) << p;
  EXPECT_EQ(empty_k_primes(eight, 2), (std::vector<u64>{7, 19}));
}

TEST(FindLs, Examples) {
  EXPECT_EQ(find_ls(3, 1000).ell, 31u);
  EXPECT_EQ(find_ls(4, 10000).ell, 3121u);
  const auto r5 = find_ls(5, 1000000);
  EXPECT_EQ(r5.ell, 127681u);
  EXPECT_EQ(format::factorization(r5.factorization), "2^6·3·5·7·19");
  EXPECT_FALSE(find_ls(5, 127680).found());
  EXPECT_TRUE(ThrowsCode([] { find_ls(1, 100); }, ErrorCode::InvalidArgument));
}

TEST(FindLs, NoSmallerQualifyingPrime) {
  for (unsigned s : {2u, 3u, 4u}) {
    const auto rec = find_ls(s, 100000);
    ASSERT_TRUE(rec.found());
    for (u64 ell = 7; ell < *rec.ell; ell += 6) {
      if (!oracle::is_prime(ell) || oracle::omega(ell - 1) < s) continue;
      ASSERT_FALSE(oracle::k_set(ell).empty()) << "s=" << s << " ell=" << ell;
    }
    EXPECT_TRUE(oracle::k_set(*rec.ell).empty());
  }
}

TEST(FindLs, ParallelAndCheckpointedRunsAgree) {
  const auto path = temp_path("ckpt_ls");
  SearchConfig cfg;
  cfg.workers = 3;
  cfg.shard_size = 500;
  cfg.checkpoint_path = path;
  EXPECT_EQ(find_ls(4, 100000, cfg).ell, 3121u);
  // Shards before the hit are recorded; the resumed search still finds it.
  Checkpoint c(path);
  EXPECT_TRUE(c.covers(7, 3007));
  EXPECT_FALSE(c.covers(3007, 3507));
  EXPECT_EQ(find_ls(4, 100000, cfg).ell, 3121u);
  std::filesystem::remove(path);
}

TEST(Lbm, BetaZeroNeverInL) {
  for (u64 m : {1, 5, 7, 35}) {
    for (const auto& row : lbm_scan(0, m, 40)) EXPECT_NE(row.status, LbmStatus::InL);
  }
}

TEST(Lbm, SmallFamiliesEmpty) {
  for (unsigned beta : {1u, 2u, 3u}) {
    const auto rows = lbm_scan(beta, 1, 40);
    std::size_t scanned = 0;
    for (const auto& row : rows) {
      EXPECT_NE(row.status, LbmStatus::InL) << row.ell;
      if (row.status == LbmStatus::NotInL) {
        ++scanned;
        EXPECT_LE(row.ell, u64{1} << 40);
      } else {
        EXPECT_GT(row.ell == 0 ? ~u64{0} : row.ell, u64{1} << 40);
      }
    }
    EXPECT_GT(scanned, 0u);
  }
}

TEST(Lbm, WitnessesDivideTheirResultant) {
  const auto rows = lbm_scan(1, 11, 6); // contains 67
  bool saw67 = false;
  for (const auto& row : rows) {
    if (row.status != LbmStatus::InL) continue;
    ASSERT_TRUE(row.witness.has_value());
    EXPECT_TRUE(row.witness->divides_resultant) << row.ell;
    EXPECT_LT(row.witness->b, row.witness->a);
    saw67 = saw67 || row.ell == 67;
  }
  EXPECT_TRUE(saw67);
  const auto r163 = lbm_scan(4, 1, 1);
  ASSERT_EQ(r163.size(), 1u);
  EXPECT_EQ(r163[0].status, LbmStatus::InL);
  EXPECT_TRUE(r163[0].witness->divides_resultant);
}

TEST(Lbm, BudgetAndRange) {
  for (const auto& row : lbm_scan(1, 1, 45, u64{1} << 20))
    EXPECT_EQ(row.status == LbmStatus::Skipped, row.ell > (u64{1} << 20)) << row.alpha;
  const auto far = lbm_scan(30, 1, 20);
  ASSERT_FALSE(far.empty());
  EXPECT_EQ(far.back().status, LbmStatus::Skipped);
  EXPECT_EQ(far.back().ell, 0u);
  EXPECT_TRUE(ThrowsCode([] { lbm_scan(1, 3, 5); }, ErrorCode::InvalidArgument));
  EXPECT_TRUE(ThrowsCode([] { lbm_scan(1, 1, 0); }, ErrorCode::InvalidArgument));
}

TEST(Density, Examples) {
  const auto r200 = density_census(200);
  for (u64 p : {7, 19, 31})
    EXPECT_TRUE(std::binary_search(r200.primes.begin(), r200.primes.end(), p)) << p;
  EXPECT_EQ(density_census(10).primes, (std::vector<u64>{7}));
  EXPECT_EQ(density_census(2).count(), 0u);
  EXPECT_GT(r200.reference, 0);
}

TEST(Density, MatchesBruteForce) {
  std::vector<u64> want;
  for (u64 ell = 7; ell <= 3000; ell += 6)
    if (oracle::is_prime(ell) && oracle::k_set(ell).empty()) want.push_back(ell);
  SearchConfig cfg;
  cfg.workers = 2;
  cfg.shard_size = 700;
  EXPECT_EQ(density_census(3000, cfg).primes, want);
}
