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
#include "matrix.hpp"

#include <gmp.h>

#include <random>

#include "errors.hpp"

namespace demj::matrix {

namespace {

void check_k(const arith::PrimeContext& ctx, u64 k) {
  if (k < 1 || k + 2 > ctx.ell)
    throw Error(ErrorCode::KOutOfRange,
                "k=" + std::to_string(k) + " outside [1, " + std::to_string(ctx.ell - 2) +
                    "] for ell=" + std::to_string(ctx.ell));
}

// Owns an n*n block of mpz_t.
class MpzGrid {
public:
  explicit MpzGrid(std::size_t n) : n_(n), cells_(n * n) {
    for (auto& c : cells_) mpz_init(c);
  }
  ~MpzGrid() {
    for (auto& c : cells_) mpz_clear(c);
  }
  MpzGrid(const MpzGrid&) = delete;
  MpzGrid& operator=(const MpzGrid&) = delete;

  mpz_ptr at(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n_; ++c) mpz_swap(at(a, c), at(b, c));
  }

private:
  std::size_t n_;
  std::vector<mpz_t> cells_;
};

} // namespace

HalfPlaneSet half_plane_set(const arith::PrimeContext& ctx, u64 k) {
  check_k(ctx, k);
  HalfPlaneSet hps;
  hps.ell = ctx.ell;
  hps.k = k;
  hps.mask.assign(ctx.ell, false);
  hps.members.reserve((ctx.ell - 1) / 2);
  u64 kj = 0;
  for (u64 j = 1; j < ctx.ell; ++j) {
    kj += k;
    if (kj >= ctx.ell) kj -= ctx.ell;
    if (kj + j < ctx.ell) {
      hps.members.push_back(j);
      hps.mask[j] = true;
    }
  }
  return hps;
}

Stabilizer stabilizer(const HalfPlaneSet& hps) {
  Stabilizer stab{hps.ell, hps.k, {}};
  for (u64 w = 1; w < hps.ell; ++w) {
    bool fixes = true;
    for (u64 j : hps.members) {
      if (!hps.contains(arith::mul_mod(w, j, hps.ell))) {
        fixes = false;
        break;
      }
    }
    if (fixes) stab.elements.push_back(w);
  }
  return stab;
}

std::vector<u64> coset_reps(const HalfPlaneSet& hps, const Stabilizer& stab) {
  std::vector<bool> seen(hps.ell, false);
  std::vector<u64> reps;
  for (u64 j : hps.members) {
    if (seen[j]) continue;
    reps.push_back(j);
    for (u64 w : stab.elements) seen[arith::mul_mod(w, j, hps.ell)] = true;
  }
  return reps;
}

DemjanenkoMatrix build_matrix(const arith::PrimeContext& ctx, u64 k) {
  const HalfPlaneSet hps = half_plane_set(ctx, k);
  const Stabilizer stab = stabilizer(hps);
  DemjanenkoMatrix dm;
  dm.ell = ctx.ell;
  dm.k = k;
  dm.reps = coset_reps(hps, stab);
  dm.stabilizer_size = stab.elements.size();
  const std::size_t n = dm.reps.size();
  dm.signs.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    // -c^{-1} modulo ell
    const u64 neg_inv = ctx.ell - arith::mod_inverse(static_cast<arith::i64>(dm.reps[r]), ctx.ell);
    for (std::size_t c = 0; c < n; ++c) {
      const u64 x = arith::mul_mod(neg_inv, dm.reps[c], ctx.ell);
      dm.signs[r * n + c] = hps.contains(x) ? -1 : 1;
    }
  }
  return dm;
}

std::size_t bareiss_rank(std::span<const std::int8_t> signs, std::size_t n) {
  if (signs.size() != n * n)
    throw Error(ErrorCode::InvalidArgument, "sign array is not n*n");
  MpzGrid a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mpz_set_si(a.at(r, c), signs[r * n + c]);

  mpz_t prev, tmp;
  mpz_init_set_ui(prev, 1);
  mpz_init(tmp);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && mpz_sgn(a.at(pivot, col)) == 0) ++pivot;
    if (pivot == n) continue;
    a.swap_rows(pivot, rank);
    mpz_srcptr p = a.at(rank, col);
    for (std::size_t i = rank + 1; i < n; ++i) {
      mpz_srcptr lead = a.at(i, col);
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_ptr cell = a.at(i, j);
        mpz_mul(tmp, p, cell);
        mpz_submul(tmp, lead, a.at(rank, j));
        mpz_divexact(cell, tmp, prev);
      }
      mpz_set_ui(a.at(i, col), 0);
    }
    mpz_set(prev, p);
    ++rank;
  }
  mpz_clear(prev);
  mpz_clear(tmp);
  return rank;
}

std::size_t modular_rank(std::span<const std::int8_t> signs, std::size_t n, u64 p) {
  if (signs.size() != n * n)
    throw Error(ErrorCode::InvalidArgument, "sign array is not n*n");
  std::vector<u64> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const int v = signs[i];
    a[i] = v < 0 ? p - static_cast<u64>(-v) : static_cast<u64>(v);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[rank * n + c]);
    const u64 inv = arith::mod_inverse(static_cast<arith::i64>(a[rank * n + col]), p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const u64 lead = a[i * n + col];
      if (lead == 0) continue;
      const u64 factor = arith::mul_mod(lead, inv, p);
      for (std::size_t j = col; j < n; ++j) {
        const u64 sub = arith::mul_mod(factor, a[rank * n + j], p);
        u64& cell = a[i * n + j];
        cell = cell >= sub ? cell - sub : cell + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

const std::vector<u64>& fast_path_primes() {
  static const std::vector<u64> primes = [] {
    std::mt19937_64 rng(0x44656d6a616e656bULL);
    std::uniform_int_distribution<u64> dist(u64{1} << 61, (u64{1} << 62) - 1);
    std::vector<u64> out;
    while (out.size() < 3) {
      const u64 candidate = dist(rng) | 1;
      if (arith::is_prime(candidate)) out.push_back(candidate);
    }
    return out;
  }();
  return primes;
}

std::size_t exact_rank(std::span<const std::int8_t> signs, std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(ErrorCode::DimensionTooLarge,
                "dimension " + std::to_string(n) + " exceeds exact-rank cap " +
                    std::to_string(cap));
  for (u64 p : fast_path_primes())
    if (modular_rank(signs, n, p) == n) return n;
  return bareiss_rank(signs, n);
}

std::size_t exact_rank(const DemjanenkoMatrix& dm, std::size_t cap) {
  return exact_rank(dm.signs, dm.dim(), cap);
}

u64 rank_formula_value(const arith::PrimeContext& ctx, u64 k, u64 M) {
  check_k(ctx, k);
  if (M < 2 || (ctx.ell - 1) % M != 0)
    throw Error(ErrorCode::NonIntegerRank,
                "M=" + std::to_string(M) + " gives no integer rank for ell=" +
                    std::to_string(ctx.ell));
  const unsigned __int128 num = static_cast<unsigned __int128>(ctx.ell - 1) * (M - 2);
  const unsigned __int128 den = static_cast<unsigned __int128>(2) * M;
  if (num % den != 0)
    throw Error(ErrorCode::NonIntegerRank,
                "(ell-1)/2*(1-2/M) is not an integer for ell=" + std::to_string(ctx.ell) +
                    " M=" + std::to_string(M));
  return static_cast<u64>(num / den);
}

std::string dump(const DemjanenkoMatrix& dm) {
  const std::size_t n = dm.dim();
  std::string out = "ell=" + std::to_string(dm.ell) + " k=" + std::to_string(dm.k) +
                    " dim=" + std::to_string(n) + " |W|=" + std::to_string(dm.stabilizer_size) +
                    "\n";
  out.reserve(out.size() + n * (n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.push_back(dm.sign(r, c) < 0 ? '-' : '+');
    out.push_back('\n');
  }
  return out;
}

} // namespace demj::matrix
