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
#include "search.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace demj::search {

namespace {

std::vector<u64> base_primes(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Runs work(lo, hi) over consecutive shards covering [lo, hi), `workers`
// shards at a time, and hands each result to merge() in ascending order.
// merge() returns false to stop; shards it accepts are checkpointed.
template <class Result>
void run_shards(u64 lo, u64 hi, const SearchConfig& cfg, Checkpoint& checkpoint,
                const std::function<Result(u64, u64)>& work,
                const std::function<bool(u64, u64, Result&)>& merge) {
  if (cfg.workers == 0) throw Error(ErrorCode::InvalidArgument, "workers must be >= 1");
  if (cfg.shard_size == 0) throw Error(ErrorCode::InvalidArgument, "shard size must be >= 1");
  std::vector<std::pair<u64, u64>> shards;
  for (u64 s = lo; s < hi; s += std::min(cfg.shard_size, hi - s)) {
    const u64 e = std::min(hi, s + cfg.shard_size);
    if (!checkpoint.covers(s, e)) shards.emplace_back(s, e);
  }
  for (std::size_t next = 0; next < shards.size();) {
    const std::size_t batch = std::min<std::size_t>(cfg.workers, shards.size() - next);
    std::vector<std::future<Result>> pending;
    pending.reserve(batch);
    for (std::size_t i = 0; i < batch; ++i) {
      const auto [s, e] = shards[next + i];
      pending.push_back(std::async(batch == 1 ? std::launch::deferred : std::launch::async,
                                   [&work, s = s, e = e] { return work(s, e); }));
    }
    for (std::size_t i = 0; i < batch; ++i) {
      Result r = pending[i].get();
      const auto [s, e] = shards[next + i];
      if (!merge(s, e, r)) {
        for (std::size_t j = i + 1; j < batch; ++j) pending[j].wait();
        return;
      }
      checkpoint.mark_done(s, e);
    }
    next += batch;
  }
}

Checkpoint open_checkpoint(const SearchConfig& cfg) {
  return cfg.checkpoint_path ? Checkpoint(*cfg.checkpoint_path) : Checkpoint();
}

} // namespace

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  lo = std::max<u64>(lo, 2);
  if (hi <= lo) return out;
  std::vector<bool> composite(hi - lo, false);
  for (u64 p : base_primes(isqrt(hi - 1))) {
    u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 j = start; j < hi; j += p) composite[j - lo] = true;
  }
  for (u64 i = 0; i < hi - lo; ++i)
    if (!composite[i]) out.push_back(lo + i);
  return out;
}

std::vector<std::uint8_t> omega_range(u64 lo, u64 hi) {
  if (lo == 0) throw Error(ErrorCode::InvalidArgument, "omega_range needs lo >= 1");
  if (hi <= lo) return {};
  std::vector<u64> rest(hi - lo);
  std::vector<std::uint8_t> count(hi - lo, 0);
  for (u64 i = 0; i < hi - lo; ++i) rest[i] = lo + i;
  for (u64 p : base_primes(isqrt(hi - 1))) {
    for (u64 j = (lo + p - 1) / p * p; j < hi; j += p) {
      ++count[j - lo];
      do rest[j - lo] /= p;
      while (rest[j - lo] % p == 0);
    }
  }
  for (u64 i = 0; i < hi - lo; ++i)
    if (rest[i] > 1) ++count[i];
  return count;
}

Checkpoint::Checkpoint(std::string path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string tag;
    u64 lo = 0, hi = 0;
    if (fields >> tag >> lo >> hi && tag == "done" && lo < hi) done_.emplace_back(lo, hi);
  }
}

bool Checkpoint::covers(u64 lo, u64 hi) const {
  u64 reached = lo;
  bool advanced = true;
  while (reached < hi && advanced) {
    advanced = false;
    for (const auto& [first, second] : done_) {
      if (first <= reached && reached < second) {
        reached = second;
        advanced = true;
      }
    }
  }
  return reached >= hi;
}

void Checkpoint::mark_done(u64 lo, u64 hi) {
  done_.emplace_back(lo, hi);
  if (!path_) return;
  std::ofstream out(*path_, std::ios::app);
  if (!(out << "done " << lo << ' ' << hi << '\n' << std::flush))
    throw Error(ErrorCode::Io, "cannot append to checkpoint " + *path_);
}

void census(const SearchConfig& cfg, const ReportSink& sink) {
  if (cfg.max_ell < 3) throw Error(ErrorCode::InvalidArgument, "census needs max_ell >= 3");
  Checkpoint checkpoint = open_checkpoint(cfg);
  using Batch = std::vector<singular::KSetReport>;
  std::function<Batch(u64, u64)> work = [](u64 lo, u64 hi) {
    Batch out;
    for (u64 ell : primes_in_range(std::max<u64>(lo, 3), hi))
      out.push_back(singular::k_set(arith::make_context(ell)));
    return out;
  };
  std::function<bool(u64, u64, Batch&)> merge = [&](u64, u64, Batch& batch) {
    for (const auto& rep : batch) {
      const bool keep_going = sink(rep);
      if (!rep.within_bound)
        throw Error(ErrorCode::BoundViolated,
                    "count " + std::to_string(rep.count()) + " for ell=" +
                        std::to_string(rep.ctx.ell) + " is outside the error bound");
      if (!keep_going) return false;
    }
    return true;
  };
  run_shards(3, cfg.max_ell + 1, cfg, checkpoint, work, merge);
}

u64 m_beta(unsigned beta) {
  if (beta < 1 || beta > 40) throw Error(ErrorCode::InvalidArgument, "beta out of range");
  const mpz_class num = mpz_class(441 * 8) * beta * beta * beta * beta;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 3, beta);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_ui();
}

std::vector<u64> family_search() {
  std::vector<u64> out;
  u64 three_beta = 1;
  for (unsigned beta = 1; beta <= 17; ++beta) {
    three_beta *= 3;
    const u64 bound = m_beta(beta);
    for (u64 m = 1; m < bound; ++m) {
      if (arith::gcd(m, 6) != 1) continue;
      const u64 ell = 2 * three_beta * m + 1;
      if (arith::is_prime(ell)) out.push_back(ell);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<u64> family_m_one() {
  std::vector<u64> out;
  u64 three_beta = 1;
  for (unsigned beta = 1; beta <= 17; ++beta) {
    three_beta *= 3;
    if (arith::is_prime(2 * three_beta + 1)) out.push_back(2 * three_beta + 1);
  }
  return out;
}

std::vector<u64> empty_k_primes(const std::vector<u64>& primes, unsigned workers) {
  const auto empty = detail::parallel_map(primes, workers, [](u64 ell) {
    return static_cast<char>(!singular::has_singular_k(arith::make_context(ell)));
  });
  std::vector<u64> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (empty[i]) out.push_back(primes[i]);
  return out;
}

LsRecord find_ls(unsigned s, u64 limit, const SearchConfig& cfg) {
  if (s < 2) throw Error(ErrorCode::InvalidArgument, "s must be >= 2");
  if (limit < 3) throw Error(ErrorCode::InvalidArgument, "limit must be >= 3");
  if (limit >= arith::kMaxModulus) throw Error(ErrorCode::RangeExceeded, "limit exceeds 2^62");
  LsRecord rec;
  rec.s = s;
  rec.limit = limit;
  Checkpoint checkpoint = open_checkpoint(cfg);
  using Hit = std::optional<u64>;
  std::function<Hit(u64, u64)> work = [s](u64 lo, u64 hi) -> Hit {
    const std::vector<std::uint8_t> omega = omega_range(lo - 1, hi - 1);
    for (u64 ell : primes_in_range(lo, hi)) {
      if (ell % 3 != 1 || omega[ell - lo] < s) continue;
      if (!singular::has_singular_k(arith::make_context(ell))) return ell;
    }
    return std::nullopt;
  };
  std::function<bool(u64, u64, Hit&)> merge = [&](u64, u64, Hit& hit) {
    if (!hit) return true;
    rec.ell = *hit;
    return false;
  };
  run_shards(7, limit + 1, cfg, checkpoint, work, merge);
  if (rec.ell) rec.factorization = arith::factorize(*rec.ell - 1);
  return rec;
}

std::vector<LbmRow> lbm_scan(unsigned beta, u64 m, unsigned alpha_max, u64 budget) {
  if (m == 0 || arith::gcd(m, 6) != 1)
    throw Error(ErrorCode::InvalidArgument, "m must be positive and prime to 6");
  if (alpha_max < 1) throw Error(ErrorCode::InvalidArgument, "alpha_max must be >= 1");
  std::vector<LbmRow> rows;
  unsigned __int128 base = m;
  for (unsigned i = 0; i < beta && base < arith::kMaxModulus; ++i) base *= 3;
  for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
    const unsigned __int128 value = (base << std::min(alpha, 100u)) + 1;
    if (alpha >= 100 || base >= arith::kMaxModulus || value >= arith::kMaxModulus) {
      rows.push_back({alpha, 0, LbmStatus::Skipped, "2^alpha 3^beta m + 1 exceeds 2^62", {}});
      continue;
    }
    const u64 ell = static_cast<u64>(value);
    if (!arith::is_prime(ell)) continue;
    if (ell > budget) {
      rows.push_back({alpha, ell, LbmStatus::Skipped, "above budget", {}});
      continue;
    }
    const arith::PrimeContext ctx = arith::make_context(ell);
    const auto k = singular::find_singular_k(ctx);
    if (!k) {
      rows.push_back({alpha, ell, LbmStatus::NotInL, "", {}});
      continue;
    }
    const auto ord_k = arith::mult_order(static_cast<arith::i64>(*k), ctx);
    const u64 pos = arith::mul_mod(*k, *k + 1, ell);
    const auto ord_neg = arith::mult_order(static_cast<arith::i64>(ell - pos), ctx);
    LbmWitness w;
    w.k = *k;
    w.a = ord_k.nu3;
    w.b = ord_neg.nu3;
    w.d = ord_k.order;
    for (unsigned i = 0; i < w.a; ++i) w.d /= 3;
    w.e = ord_neg.order;
    for (unsigned i = 0; i < w.b; ++i) w.e /= 3;
    const bool shape_ok = w.a >= 1 && w.b < w.a && m % w.d == 0 && m % w.e == 0;
    w.divides_resultant =
        shape_ok && cyclotomic::resultant_mod(cyclotomic::p_poly(w.a, w.d),
                                              cyclotomic::q_poly(w.b, w.e), ell) == 0;
    rows.push_back({alpha, ell, LbmStatus::InL, "", w});
  }
  return rows;
}

DensityReport density_census(u64 x, const SearchConfig& cfg) {
  if (x < 2) throw Error(ErrorCode::InvalidArgument, "x must be >= 2");
  DensityReport rep;
  rep.x = x;
  const double lx = std::log(static_cast<double>(x));
  rep.reference = std::pow(static_cast<double>(x), 0.75) * lx * lx * lx;
  Checkpoint none;
  using Found = std::vector<u64>;
  std::function<Found(u64, u64)> work = [](u64 lo, u64 hi) {
    Found out;
    for (u64 ell : primes_in_range(lo, hi))
      if (ell % 3 == 1 && !singular::has_singular_k(arith::make_context(ell))) out.push_back(ell);
    return out;
  };
  std::function<bool(u64, u64, Found&)> merge = [&](u64, u64, Found& f) {
    rep.primes.insert(rep.primes.end(), f.begin(), f.end());
    return true;
  };
  run_shards(7, x + 1, cfg, none, work, merge);
  return rep;
}

} // namespace demj::search
