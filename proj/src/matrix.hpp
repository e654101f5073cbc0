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

// Construction of the half-plane set M_{k,l}, its multiplicative stabilizer
// W_{k,l}, the Demjanenko sign matrix indexed by M/W, and exact rank.
//
// The matrix entries E(-c^{-1} a) - 1/2 are stored doubled, as signs in
// {-1, +1}; scaling by 2 does not change the rank.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"

namespace demj::matrix {

using arith::u64;

inline constexpr std::size_t kDefaultRankCap = 600;

struct HalfPlaneSet {
  u64 ell = 0;
  u64 k = 0;
  std::vector<u64> members; // ascending
  std::vector<bool> mask;   // mask[j] <=> j in members, size ell

  bool contains(u64 residue) const { return residue < mask.size() && mask[residue]; }
};

struct Stabilizer {
  u64 ell = 0;
  u64 k = 0;
  std::vector<u64> elements; // ascending, always contains 1
};

struct DemjanenkoMatrix {
  u64 ell = 0;
  u64 k = 0;
  std::vector<u64> reps;
  std::size_t stabilizer_size = 1;
  std::vector<std::int8_t> signs; // row-major, rows c and columns a over reps

  std::size_t dim() const noexcept { return reps.size(); }
  int sign(std::size_t row, std::size_t col) const { return signs[row * reps.size() + col]; }
};

/// Throws KOutOfRange unless 1 <= k <= ell - 2.
HalfPlaneSet half_plane_set(const arith::PrimeContext& ctx, u64 k);

/// Exact setwise stabilizer, by testing every unit.
Stabilizer stabilizer(const HalfPlaneSet& hps);

/// Smallest member of each W-orbit on M, ascending.
std::vector<u64> coset_reps(const HalfPlaneSet& hps, const Stabilizer& stab);

DemjanenkoMatrix build_matrix(const arith::PrimeContext& ctx, u64 k);

/// Rank over Q. Certifies full rank modulo large primes when possible and
/// falls back to fraction-free elimination otherwise. Throws
/// DimensionTooLarge when the dimension exceeds `cap`.
std::size_t exact_rank(const DemjanenkoMatrix& dm, std::size_t cap = kDefaultRankCap);
std::size_t exact_rank(std::span<const std::int8_t> signs, std::size_t n,
                       std::size_t cap = kDefaultRankCap);

/// Bareiss elimination over GMP integers; always exact, no fast path.
std::size_t bareiss_rank(std::span<const std::int8_t> signs, std::size_t n);

/// Rank of the matrix reduced modulo an odd prime p < 2^62. A lower bound for
/// the rank over Q.
std::size_t modular_rank(std::span<const std::int8_t> signs, std::size_t n, u64 p);

/// The fixed primes used by the fast path.
const std::vector<u64>& fast_path_primes();

/// (ell - 1)/2 * (1 - 2/M). Throws NonIntegerRank if that is not a
/// non-negative integer.
u64 rank_formula_value(const arith::PrimeContext& ctx, u64 k, u64 M);

/// Header `ell=<l> k=<k> dim=<n> |W|=<w>` then one row of +/- per line.
std::string dump(const DemjanenkoMatrix& dm);

} // namespace demj::matrix
