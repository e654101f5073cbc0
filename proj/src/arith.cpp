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
#include "arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace demj::arith {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

// Odd primes below kTrialLimit, built once.
const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 i = 3; i <= kTrialLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (u64 j = i * i; j <= kTrialLimit; j += 2 * i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) noexcept {
  u64 x = pow_mod(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 rho_brent(u64 n, u64 c) {
  auto f = [n, c](u64 x) { return (mul_mod(x, x, n) + c) % n; };
  u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
  u64 r = 1;
  constexpr u64 batch = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (u64 i = 0; i < std::min(batch, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
      k += batch;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = rho_brent(n, c);
    if (d != n) {
      split(d, primes);
      split(n / d, primes);
      return;
    }
  }
}

void check_modulus(u64 ell) {
  if (ell >= kMaxModulus)
    throw Error(ErrorCode::RangeExceeded,
                "modulus " + std::to_string(ell) + " exceeds 2^62");
}

u64 reduce(i64 j, u64 ell) {
  check_modulus(ell);
  const i64 mod = static_cast<i64>(ell);
  i64 r = j % mod;
  if (r < 0) r += mod;
  return static_cast<u64>(r);
}

} // namespace

u64 pow_mod(u64 base, u64 exp, u64 mod) noexcept {
  u64 result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

unsigned valuation(u64 n, u64 p) noexcept {
  if (n == 0 || p < 2) return 0;
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u64 g = gcd(a, b);
  const unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l >> 64)
    throw Error(ErrorCode::RangeExceeded, "lcm does not fit in 64 bits");
  return static_cast<u64>(l);
}

bool is_prime(u64 n) noexcept {
  static constexpr std::array<u64, 13> bases{2,  3,  5,  7,  11, 13, 17,
                                             19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (u64 p : bases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases)
    if (miller_rabin_witness(n, a, d, s)) return false;
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "factorize(0)");
  Factorization out;
  if (unsigned e = static_cast<unsigned>(std::countr_zero(n)); e > 0) {
    out.push_back({2, e});
    n >>= e;
  }
  for (std::uint32_t p : small_primes()) {
    if (u64{p} * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    std::vector<u64> rest;
    split(n, rest);
    std::sort(rest.begin(), rest.end());
    for (u64 p : rest) {
      if (!out.empty() && out.back().prime == p)
        ++out.back().exponent;
      else
        out.push_back({p, 1});
    }
  }
  return out;
}

unsigned omega(u64 n) { return static_cast<unsigned>(factorize(n).size()); }

PrimeContext make_context(u64 ell) {
  check_modulus(ell);
  if (ell < 3 || !is_prime(ell))
    throw Error(ErrorCode::NotPrime,
                std::to_string(ell) + " is not an odd prime");
  PrimeContext ctx;
  ctx.ell = ell;
  ctx.factors = factorize(ell - 1);
  ctx.m = ell - 1;
  for (const auto& f : ctx.factors) {
    if (f.prime == 2) ctx.alpha = f.exponent;
    if (f.prime == 3) ctx.beta = f.exponent;
  }
  for (unsigned i = 0; i < ctx.alpha; ++i) ctx.m /= 2;
  for (unsigned i = 0; i < ctx.beta; ++i) ctx.m /= 3;
  return ctx;
}

u64 canonical_rep(i64 j, u64 ell) {
  const u64 r = reduce(j, ell);
  if (r == 0)
    throw Error(ErrorCode::NotUnit, std::to_string(j) + " is not a unit mod " +
                                        std::to_string(ell));
  return r;
}

u64 mod_inverse(i64 u, u64 ell) {
  const u64 r = canonical_rep(u, ell);
  // Extended Euclid on signed 128-bit to stay clear of overflow near 2^62.
  __int128 old_r = static_cast<__int128>(r), cur_r = static_cast<__int128>(ell);
  __int128 old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const __int128 q = old_r / cur_r;
    old_r -= q * cur_r;
    std::swap(old_r, cur_r);
    old_s -= q * cur_s;
    std::swap(old_s, cur_s);
  }
  if (old_r != 1)
    throw Error(ErrorCode::NotUnit, "no inverse modulo " + std::to_string(ell));
  __int128 inv = old_s % static_cast<__int128>(ell);
  if (inv < 0) inv += ell;
  return static_cast<u64>(inv);
}

OrderProfile mult_order(i64 u, const PrimeContext& ctx) {
  const u64 residue = canonical_rep(u, ctx.ell);
  u64 order = ctx.ell - 1;
  for (const auto& f : ctx.factors) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      if (pow_mod(residue, order / f.prime, ctx.ell) != 1) break;
      order /= f.prime;
    }
  }
  return {residue, order, valuation(order, 2), valuation(order, 3)};
}

u64 primitive_root(const PrimeContext& ctx) {
  const u64 n = ctx.ell - 1;
  for (u64 g = 2; g < ctx.ell; ++g) {
    bool generator = true;
    for (const auto& f : ctx.factors) {
      if (pow_mod(g, n / f.prime, ctx.ell) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw Error(ErrorCode::NoPrimitiveRoot,
              "no primitive root found modulo " + std::to_string(ctx.ell));
}

} // namespace demj::arith
