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

// Exact modular and integer arithmetic on machine words: primality,
// factorization, multiplicative orders and valuations modulo a prime.
//
// Everything here works on uint64_t. Moduli are limited to kMaxModulus so
// that products fit a 128-bit intermediate; anything larger is rejected with
// ErrorCode::RangeExceeded.

#include <cstdint>
#include <vector>

namespace demj::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kMaxModulus = u64{1} << 62;

struct PrimeFactor {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization sorted by prime. Empty for n = 1.
using Factorization = std::vector<PrimeFactor>;

/// A prime ell >= 3 together with ell - 1 = 2^alpha * 3^beta * m, gcd(m, 6) = 1.
struct PrimeContext {
  u64 ell = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  u64 m = 0;
  Factorization factors; // of ell - 1

  u64 group_order() const noexcept { return ell - 1; }
};

/// Multiplicative order of a unit modulo ell with its 2- and 3-adic valuations.
struct OrderProfile {
  u64 residue = 0;
  u64 order = 0;
  unsigned nu2 = 0;
  unsigned nu3 = 0;

  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

inline u64 mul_mod(u64 a, u64 b, u64 mod) noexcept {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % mod);
}

u64 pow_mod(u64 base, u64 exp, u64 mod) noexcept;

/// p-adic valuation of n; 0 when n = 0 is not meaningful and returns 0.
unsigned valuation(u64 n, u64 p) noexcept;

u64 gcd(u64 a, u64 b) noexcept;
u64 lcm(u64 a, u64 b);

/// Deterministic Miller-Rabin (bases 2..41), exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

/// Trial division up to 10^6, then Pollard rho with Brent's cycle detection.
Factorization factorize(u64 n);

/// Number of distinct prime divisors.
unsigned omega(u64 n);

/// Throws NotPrime for composite or ell < 3, RangeExceeded above kMaxModulus.
PrimeContext make_context(u64 ell);

/// <j>_ell in [1, ell - 1]. Throws NotUnit when ell divides j.
u64 canonical_rep(i64 j, u64 ell);

/// Inverse of u modulo ell. Throws NotUnit when ell divides u.
u64 mod_inverse(i64 u, u64 ell);

/// Order by stripping prime factors from ell - 1. Throws NotUnit.
OrderProfile mult_order(i64 u, const PrimeContext& ctx);

/// Smallest primitive root modulo ctx.ell.
u64 primitive_root(const PrimeContext& ctx);

} // namespace demj::arith
