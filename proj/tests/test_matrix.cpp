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

#include <algorithm>
#include <numeric>
#include <random>

#include "matrix.hpp"
#include "oracles.hpp"
#include "singular.hpp"
#include "throws.hpp"

using namespace demj;
using namespace demj::matrix;
using arith::make_context;

namespace {

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  for (u64 p = 3; p <= n; ++p)
    if (oracle::is_prime(p)) out.push_back(p);
  return out;
}

std::vector<std::vector<int>> as_rows(const DemjanenkoMatrix& dm) {
  std::vector<std::vector<int>> rows(dm.dim(), std::vector<int>(dm.dim()));
  for (std::size_t r = 0; r < dm.dim(); ++r)
    for (std::size_t c = 0; c < dm.dim(); ++c) rows[r][c] = dm.sign(r, c);
  return rows;
}

std::vector<std::vector<int>> as_rows(const std::vector<std::int8_t>& flat, std::size_t n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n * n; ++i) rows[i / n][i % n] = flat[i];
  return rows;
}

} // namespace

TEST(HalfPlaneSet, Examples) {
  EXPECT_EQ(half_plane_set(make_context(3), 1).members, (std::vector<u64>{1}));
  EXPECT_EQ(half_plane_set(make_context(5), 1).members, (std::vector<u64>{1, 2}));
  const auto m = half_plane_set(make_context(7), 2);
  EXPECT_EQ(m.members.size(), 3u);
  const auto want = oracle::half_plane(7, 2);
  for (u64 j = 1; j < 7; ++j) EXPECT_EQ(m.contains(j), want[j]) << j;
}

TEST(HalfPlaneSet, CardinalityAndDefinitionBelow200) {
  for (u64 ell : primes_up_to(200)) {
    const auto ctx = make_context(ell);
    for (u64 k = 1; k + 2 <= ell; ++k) {
      const auto m = half_plane_set(ctx, k);
      ASSERT_EQ(m.members.size(), (ell - 1) / 2);
      const auto want = oracle::half_plane(ell, k);
      for (u64 j = 1; j < ell; ++j) ASSERT_EQ(m.contains(j), want[j]);
      ASSERT_TRUE(std::is_sorted(m.members.begin(), m.members.end()));
    }
  }
}

TEST(HalfPlaneSet, KOutOfRange) {
  const auto ctx = make_context(11);
  EXPECT_TRUE(ThrowsCode([&] { half_plane_set(ctx, 0); }, ErrorCode::KOutOfRange));
  EXPECT_TRUE(ThrowsCode([&] { half_plane_set(ctx, 10); }, ErrorCode::KOutOfRange));
  EXPECT_TRUE(ThrowsCode([&] { build_matrix(ctx, 12); }, ErrorCode::KOutOfRange));
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(stabilizer(half_plane_set(make_context(5), 1)).elements, (std::vector<u64>{1}));
  EXPECT_EQ(stabilizer(half_plane_set(make_context(7), 2)).elements,
            (std::vector<u64>{1, 2, 4}));
  EXPECT_EQ(stabilizer(half_plane_set(make_context(7), 3)).elements, (std::vector<u64>{1}));
}

TEST(Stabilizer, SizeThreeExactlyForCubeRootParameters) {
  for (u64 ell : primes_up_to(200)) {
    const auto ctx = make_context(ell);
    for (u64 k = 1; k + 2 <= ell; ++k) {
      const auto w = stabilizer(half_plane_set(ctx, k)).elements;
      ASSERT_EQ(w, oracle::stabilizer(ell, k)) << ell << " " << k;
      const bool cube_root = (k * k + k + 1) % ell == 0 && k % ell != 1;
      ASSERT_EQ(w.size(), cube_root ? 3u : 1u) << ell << " " << k;
    }
  }
}

TEST(CosetReps, Examples) {
  auto reps = [](u64 ell, u64 k) {
    const auto m = half_plane_set(make_context(ell), k);
    return coset_reps(m, stabilizer(m));
  };
  EXPECT_EQ(reps(5, 1), (std::vector<u64>{1, 2}));
  EXPECT_EQ(reps(7, 2), (std::vector<u64>{1}));
  EXPECT_EQ(reps(3, 1), (std::vector<u64>{1}));
}

TEST(BuildMatrix, Examples) {
  const auto d3 = build_matrix(make_context(3), 1);
  EXPECT_EQ(as_rows(d3), (std::vector<std::vector<int>>{{1}}));
  const auto d5 = build_matrix(make_context(5), 1);
  EXPECT_EQ(as_rows(d5), (std::vector<std::vector<int>>{{1, 1}, {-1, 1}}));
  const auto d7 = build_matrix(make_context(7), 2);
  EXPECT_EQ(d7.dim(), 1u);
  EXPECT_EQ(d7.stabilizer_size, 3u);
}

TEST(BuildMatrix, MatchesDefinitionBelow120) {
  for (u64 ell : primes_up_to(120)) {
    const auto ctx = make_context(ell);
    for (u64 k = 1; k + 2 <= ell; ++k) {
      const auto dm = build_matrix(ctx, k);
      ASSERT_EQ(as_rows(dm), oracle::sign_matrix(ell, k)) << ell << " " << k;
      ASSERT_EQ(dm.dim() * dm.stabilizer_size, (ell - 1) / 2);
    }
  }
}

TEST(ExactRank, Examples) {
  EXPECT_EQ(exact_rank(build_matrix(make_context(3), 1)), 1u);
  const auto ctx = make_context(7);
  for (u64 k = 1; k <= 5; ++k) {
    const auto dm = build_matrix(ctx, k);
    if (dm.stabilizer_size != 1) continue;
    EXPECT_EQ(dm.dim(), 3u);
    EXPECT_EQ(exact_rank(dm), oracle::rational_rank(as_rows(dm))) << k;
  }
}

TEST(ExactRank, AgreesWithRationalEliminationBelow110) {
  for (u64 ell : primes_up_to(110)) {
    const auto ctx = make_context(ell);
    for (u64 k = 1; k + 2 <= ell; ++k) {
      const auto dm = build_matrix(ctx, k);
      const std::size_t want = oracle::rational_rank(as_rows(dm));
      ASSERT_EQ(exact_rank(dm), want) << ell << " " << k;
      ASSERT_EQ(bareiss_rank(dm.signs, dm.dim()), want) << ell << " " << k;
    }
  }
}

TEST(ExactRank, RandomLowRankMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    const std::size_t basis = 1 + rng() % n;
    std::vector<std::vector<int>> base(basis, std::vector<int>(n));
    for (auto& row : base)
      for (auto& x : row) x = static_cast<int>(rng() % 5) - 2;
    std::vector<std::int8_t> flat(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> row(n, 0);
      for (std::size_t b = 0; b < basis; ++b) {
        const int coef = static_cast<int>(rng() % 3) - 1;
        for (std::size_t c = 0; c < n; ++c) row[c] += coef * base[b][c];
      }
      for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = static_cast<std::int8_t>(row[c]);
    }
    const std::size_t want = oracle::rational_rank(as_rows(flat, n));
    ASSERT_EQ(bareiss_rank(flat, n), want);
    ASSERT_EQ(exact_rank(flat, n), want);
    for (u64 p : fast_path_primes()) ASSERT_LE(modular_rank(flat, n, p), want);
  }
}

TEST(ExactRank, InvariantUnderPermutations) {
  std::mt19937_64 rng(50);
  const auto primes = primes_up_to(300);
  for (int trial = 0; trial < 50; ++trial) {
    const u64 ell = primes[rng() % primes.size()];
    // Half of the trials use singular matrices so the elimination path runs.
    const auto ks = singular::scan_k_set(make_context(ell));
    const u64 k = (trial % 2 && !ks.empty()) ? ks[rng() % ks.size()] : 1 + rng() % (ell - 2);
    const auto dm = build_matrix(make_context(ell), k);
    const std::size_t n = dm.dim();
    std::vector<std::size_t> perm(n), cols(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<std::int8_t> same(n * n), independent(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        same[r * n + c] = dm.signs[perm[r] * n + perm[c]];
        independent[r * n + c] = dm.signs[perm[r] * n + cols[c]];
      }
    const std::size_t base = exact_rank(dm);
    ASSERT_EQ(exact_rank(same, n), base) << ell << " " << k;
    ASSERT_EQ(exact_rank(independent, n), base) << ell << " " << k;
  }
}

TEST(ExactRank, DimensionCap) {
  const auto dm = build_matrix(make_context(101), 3);
  EXPECT_TRUE(ThrowsCode([&] { exact_rank(dm, 49); }, ErrorCode::DimensionTooLarge));
  EXPECT_NO_THROW(exact_rank(dm, 50));
}

TEST(FastPathPrimes, FixedLargePrimes) {
  const auto& ps = fast_path_primes();
  ASSERT_EQ(ps.size(), 3u);
  for (u64 p : ps) {
    EXPECT_TRUE(arith::is_prime(p));
    EXPECT_GE(p, u64{1} << 61);
    EXPECT_LT(p, u64{1} << 62);
  }
  EXPECT_EQ(ps, fast_path_primes());
}

TEST(RankFormula, Examples) {
  const auto ctx = make_context(163);
  EXPECT_EQ(rank_formula_value(ctx, 10, 81), 79u);
  EXPECT_EQ(rank_formula_value(ctx, 10, 27), 75u);
  EXPECT_TRUE(ThrowsCode([&] { rank_formula_value(ctx, 10, 5); }, ErrorCode::NonIntegerRank));
  EXPECT_TRUE(ThrowsCode([&] { rank_formula_value(ctx, 10, 1); }, ErrorCode::NonIntegerRank));
}

TEST(RankFormula, HoldsOnTheSingularSetOf163) {
  const auto ctx = make_context(163);
  const auto ks = singular::scan_k_set(ctx);
  ASSERT_FALSE(ks.empty());
  for (u64 k : ks) {
    const auto dm = build_matrix(ctx, k);
    const u64 M = std::lcm(oracle::order(k, 163), oracle::order(oracle::neg_mod(k * k + k, 163), 163));
    EXPECT_EQ(exact_rank(dm), rank_formula_value(ctx, k, M)) << k;
    EXPECT_EQ(oracle::rational_rank(as_rows(dm)), rank_formula_value(ctx, k, M)) << k;
  }
}

TEST(Dump, HeaderAndRows) {
  EXPECT_EQ(dump(build_matrix(make_context(5), 1)), "ell=5 k=1 dim=2 |W|=1\n++\n-+\n");
  EXPECT_EQ(dump(build_matrix(make_context(7), 2)), "ell=7 k=2 dim=1 |W|=3\n+\n");
}
