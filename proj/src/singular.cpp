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
#include "singular.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace demj::singular {

namespace {

void check_k(const PrimeContext& ctx, u64 k) {
  if (k < 1 || k + 2 > ctx.ell)
    throw Error(ErrorCode::KOutOfRange,
                "k=" + std::to_string(k) + " outside [1, " + std::to_string(ctx.ell - 2) +
                    "] for ell=" + std::to_string(ctx.ell));
}

u64 pow_u64(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

mpz_class pow_mpz(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

mpq_class frac(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// (x^2 + x) mod ell
u64 pos_quadratic(u64 x, u64 ell) { return arith::mul_mod(x, x + 1 == ell ? 0 : x + 1, ell); }

unsigned capped_nu3(u64 t, unsigned beta) {
  unsigned v = 0;
  while (v < beta && t % 3 == 0) {
    t /= 3;
    ++v;
  }
  return v;
}

std::vector<u64> scan_subgroup(const PrimeContext& ctx, bool stop_at_first) {
  std::vector<u64> found;
  if (ctx.beta == 0) return found;
  const u64 ell = ctx.ell;
  const u64 n = ell - 1;
  const u64 q = n >> ctx.alpha; // 3^beta m, odd
  const u64 g = arith::primitive_root(ctx);
  const u64 h = arith::pow_mod(g, u64{1} << ctx.alpha, ell);
  std::vector<u64> cond_iii_exp(ctx.beta + 1); // indexed by a = nu3(ord k)
  for (unsigned a = 1; a <= ctx.beta; ++a) cond_iii_exp[a] = n / pow_u64(3, ctx.beta - a + 1);

  u64 x = 1;
  for (u64 t = 1; t < q; ++t) {
    x = arith::mul_mod(x, h, ell);
    const unsigned a = ctx.beta - capped_nu3(t, ctx.beta);
    if (a == 0) continue;
    if (q / arith::gcd(t, q) == 3) continue;
    const u64 y = pos_quadratic(x, ell);
    if (arith::pow_mod(ell - y, q, ell) != 1) continue;
    if (arith::pow_mod(y, cond_iii_exp[a], ell) != 1) continue;
    found.push_back(x);
    if (stop_at_first) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<u64> scan_discrete_log(const PrimeContext& ctx) {
  std::vector<u64> found;
  if (ctx.beta == 0) return found;
  const u64 ell = ctx.ell;
  if (ell > kDiscreteLogLimit)
    throw Error(ErrorCode::RangeExceeded,
                "discrete-log scan limited to ell <= " + std::to_string(kDiscreteLogLimit));
  const u64 n = ell - 1;
  const u64 q = n >> ctx.alpha;
  const u64 two_part_mask = (u64{1} << ctx.alpha) - 1;
  const u64 g = arith::primitive_root(ctx);

  std::vector<std::uint32_t> log(ell);
  u64 x = 1;
  for (u64 e = 0; e < n; ++e) {
    log[x] = static_cast<std::uint32_t>(e);
    x = x * g % ell;
  }
  const u64 h = arith::pow_mod(g, u64{1} << ctx.alpha, ell);
  x = 1;
  for (u64 t = 1; t < q; ++t) {
    x = x * h % ell;
    const unsigned a = ctx.beta - capped_nu3(t, ctx.beta);
    if (a == 0) continue;
    if (q / arith::gcd(t, q) == 3) continue;
    const u64 e = t << ctx.alpha;
    const u64 log_pos = (e + log[x + 1]) % n;
    const u64 log_neg = (log_pos + n / 2) % n;
    if ((log_neg & two_part_mask) != 0) continue;
    const unsigned nu3_pos = log_pos == 0 ? 0 : ctx.beta - capped_nu3(log_pos, ctx.beta);
    if (nu3_pos >= a) continue;
    found.push_back(x);
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<u64> scan_per_element(const PrimeContext& ctx) {
  std::vector<u64> found;
  for (u64 k = 1; k + 2 <= ctx.ell; ++k)
    if (criterion(ctx, k).in_k()) found.push_back(k);
  return found;
}

ScanStrategy choose(const PrimeContext& ctx) {
  if (ctx.ell > kDiscreteLogLimit) return ScanStrategy::Subgroup;
  const unsigned bits = static_cast<unsigned>(std::bit_width(ctx.ell));
  // The table costs about ell steps; the subgroup walk about 2*bits steps
  // per element of a group of size (ell-1)/2^alpha.
  return (u64{1} << ctx.alpha) >= 2 * bits ? ScanStrategy::Subgroup : ScanStrategy::DiscreteLog;
}

// Indicator values on F_ell with the constant-term convention at 0.
mpq_class zeta_at(const PrimeContext& ctx, u64 u) {
  if (u == 0) return frac(1, pow_mpz(2, ctx.alpha));
  return indicator_zeta(ctx, static_cast<i64>(u));
}

mpq_class eta_at(const PrimeContext& ctx, u64 u, unsigned h) {
  if (u == 0) return frac(h == 0 ? 3 : 2, pow_mpz(3, ctx.beta - h + 1));
  return indicator_eta(ctx, static_cast<i64>(u), h);
}

} // namespace

CriterionEvidence criterion(const PrimeContext& ctx, u64 k) {
  check_k(ctx, k);
  const u64 pos = pos_quadratic(k, ctx.ell);
  const u64 neg = ctx.ell - pos;
  CriterionEvidence ev;
  ev.k = k;
  ev.ord_k = arith::mult_order(static_cast<i64>(k), ctx);
  ev.ord_neg = arith::mult_order(static_cast<i64>(neg), ctx);
  ev.ord_pos = arith::mult_order(static_cast<i64>(pos), ctx);
  ev.cond_i = ev.ord_k.order != 3;
  ev.cond_ii = ev.ord_k.nu2 == 0 && ev.ord_neg.nu2 == 0;
  ev.cond_iii = ev.ord_k.nu3 > ev.ord_pos.nu3;
  return ev;
}

std::vector<u64> scan_k_set(const PrimeContext& ctx, ScanStrategy strategy) {
  if (strategy == ScanStrategy::Auto) strategy = choose(ctx);
  switch (strategy) {
    case ScanStrategy::DiscreteLog: return scan_discrete_log(ctx);
    case ScanStrategy::Subgroup: return scan_subgroup(ctx, false);
    case ScanStrategy::PerElement: return scan_per_element(ctx);
    case ScanStrategy::Auto: break;
  }
  throw Error(ErrorCode::Internal, "unhandled scan strategy");
}

std::optional<u64> find_singular_k(const PrimeContext& ctx) {
  const auto found = scan_subgroup(ctx, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool has_singular_k(const PrimeContext& ctx) { return find_singular_k(ctx).has_value(); }

mpq_class main_term(const PrimeContext& ctx) {
  const mpz_class nine_beta = pow_mpz(9, ctx.beta);
  return frac(mpz_class(std::to_string(ctx.ell)) * (nine_beta - 1),
              pow_mpz(2, 2 * ctx.alpha + 2) * nine_beta);
}

mpq_class sqrt_upper(u64 n) {
  static const mpz_class scale = pow_mpz(10, 7);
  const mpz_class scaled = mpz_class(std::to_string(n)) * scale * scale;
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  if (rem != 0) root += 1;
  return frac(root, scale);
}

mpq_class error_bound(const PrimeContext& ctx) {
  return mpq_class(4 * ctx.beta * ctx.beta) * sqrt_upper(ctx.ell) + mpq_class(33, 16);
}

KSetReport make_report(const PrimeContext& ctx, std::vector<u64> members) {
  KSetReport r;
  r.ctx = ctx;
  r.members = std::move(members);
  r.main_term = main_term(ctx);
  r.error_bound = error_bound(ctx);
  r.within_bound = abs(mpq_class(static_cast<unsigned long>(r.count())) - r.main_term) <= r.error_bound;
  return r;
}

KSetReport k_set(const PrimeContext& ctx) { return make_report(ctx, scan_k_set(ctx)); }

std::vector<u64> k_set_oracle(const PrimeContext& ctx, std::size_t cap) {
  if ((ctx.ell - 1) / 2 > cap)
    throw Error(ErrorCode::DimensionTooLarge,
                "ell=" + std::to_string(ctx.ell) + " exceeds exact-rank cap " +
                    std::to_string(cap));
  std::vector<u64> out;
  for (u64 k = 1; k + 2 <= ctx.ell; ++k) {
    const auto dm = matrix::build_matrix(ctx, k);
    if (matrix::exact_rank(dm, cap) < dm.dim()) out.push_back(k);
  }
  return out;
}

MStat m_value(const PrimeContext& ctx, u64 k) {
  check_k(ctx, k);
  const u64 neg = ctx.ell - pos_quadratic(k, ctx.ell);
  const u64 ord_neg = arith::mult_order(static_cast<i64>(neg), ctx).order;
  const u64 ord_k = arith::mult_order(static_cast<i64>(k), ctx).order;
  return {k, arith::lcm(ord_neg, ord_k)};
}

MStatsSummary m_stats(const PrimeContext& ctx) {
  MStatsSummary s;
  s.ell = ctx.ell;
  for (u64 k : scan_k_set(ctx)) {
    const MStat st = m_value(ctx, k);
    s.values.push_back(st);
    if (!s.min_M || st.M < *s.min_M) s.min_M = st.M;
    if (!s.max_M || st.M > *s.max_M) s.max_M = st.M;
  }
  return s;
}

int indicator_zeta(const PrimeContext& ctx, i64 u) {
  const u64 order = arith::mult_order(u, ctx).order;
  return (ctx.ell - 1) / pow_u64(2, ctx.alpha) % order == 0 ? 1 : 0;
}

int indicator_eta(const PrimeContext& ctx, i64 u, unsigned h) {
  if (h > ctx.beta)
    throw Error(ErrorCode::HOutOfRange,
                "h=" + std::to_string(h) + " exceeds beta=" + std::to_string(ctx.beta));
  return arith::mult_order(u, ctx).nu3 == h ? 1 : 0;
}

double CharacterReport::max_deviation() const noexcept {
  return std::max({max_orthogonality_deviation, max_zeta_deviation, max_eta_deviation});
}

CharacterReport verify_character_identities(const PrimeContext& ctx, double tolerance, u64 cap) {
  if (ctx.ell > cap)
    throw Error(ErrorCode::CapExceeded, "character verification limited to ell <= " +
                                            std::to_string(cap));
  if (!(tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  using cplx = std::complex<double>;
  const u64 ell = ctx.ell;
  const u64 n = ell - 1;
  const u64 g = arith::primitive_root(ctx);

  std::vector<u64> log(ell);
  for (u64 e = 0, x = 1; e < n; ++e, x = x * g % ell) log[x] = e;

  // chi_j(g^e) = exp(2 pi i j e / n)
  auto chi = [n](u64 j, u64 e) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * e % n) /
                         static_cast<double>(n);
    return std::polar(1.0, angle);
  };
  // Sum of chi(u) over characters of order dividing d (d | n), optionally
  // leaving out the principal one.
  auto char_sum = [&](u64 d, u64 e, bool skip_principal) {
    cplx s = 0;
    for (u64 i = skip_principal ? 1 : 0; i < d; ++i) s += chi(i * (n / d), e);
    return s;
  };

  CharacterReport rep;
  rep.ell = ell;
  rep.tolerance = tolerance;

  std::vector<u64> divisors;
  for (u64 t = 1; t <= n; ++t)
    if (n % t == 0) divisors.push_back(t);

  const u64 two_alpha = pow_u64(2, ctx.alpha);
  for (u64 u = 1; u < ell; ++u) {
    const u64 e = log[u];
    for (u64 t : divisors) {
      const u64 d = n / t;
      const cplx lhs = char_sum(d, e, false) / static_cast<double>(d);
      const double rhs = arith::pow_mod(u, t, ell) == 1 ? 1.0 : 0.0;
      rep.max_orthogonality_deviation = std::max(rep.max_orthogonality_deviation, std::abs(lhs - rhs));
      ++rep.evaluations;
    }

    const cplx zeta_chars =
        (1.0 + char_sum(two_alpha, e, true)) / static_cast<double>(two_alpha);
    rep.max_zeta_deviation =
        std::max(rep.max_zeta_deviation,
                 std::abs(zeta_chars - static_cast<double>(indicator_zeta(ctx, static_cast<i64>(u)))));
    ++rep.evaluations;

    for (unsigned h = 0; h <= ctx.beta; ++h) {
      const double inner = static_cast<double>(pow_u64(3, ctx.beta - h));
      const double outer = 3.0 * inner;
      const double theta = h == 0 ? 1.0 : 0.0;
      cplx eta_chars = (2.0 + theta) / outer + char_sum(pow_u64(3, ctx.beta - h), e, true) / inner;
      // X*_{3^(beta+1)} is empty by convention when h = 0.
      if (h >= 1) eta_chars -= char_sum(pow_u64(3, ctx.beta - h + 1), e, true) / outer;
      rep.max_eta_deviation = std::max(
          rep.max_eta_deviation,
          std::abs(eta_chars - static_cast<double>(indicator_eta(ctx, static_cast<i64>(u), h))));
      ++rep.evaluations;
    }
  }
  return rep;
}

mpq_class b_term(const PrimeContext& ctx, u64 k) {
  if (ctx.beta == 0) throw Error(ErrorCode::BetaZero, "B-sum identities need beta >= 1");
  if (k >= ctx.ell) throw Error(ErrorCode::InvalidArgument, "k must be reduced modulo ell");
  const u64 pos = pos_quadratic(k, ctx.ell);
  const u64 neg = pos == 0 ? 0 : ctx.ell - pos;
  const mpq_class z = zeta_at(ctx, k) * zeta_at(ctx, neg);
  if (z == 0) return 0;
  mpq_class sum = 0;
  for (unsigned r = 1; r <= ctx.beta; ++r) {
    const mpq_class eta_r = eta_at(ctx, k, r);
    if (eta_r == 0) continue;
    for (unsigned s = 0; s < r; ++s) sum += eta_r * eta_at(ctx, pos, s);
  }
  return z * sum;
}

BSumReport verify_bsum_identities(const PrimeContext& ctx) {
  if (ctx.beta == 0) throw Error(ErrorCode::BetaZero, "B-sum identities need beta >= 1");
  BSumReport rep;
  rep.ell = ctx.ell;
  for (u64 k = 0; k < ctx.ell; ++k) {
    const mpq_class b = b_term(ctx, k);
    rep.full_sum += b;
    if (k == 0)
      rep.b_zero = b;
    else if (k == ctx.ell - 1)
      rep.b_minus_one = b;
    else
      rep.interior_sum += b;
  }
  for (u64 k = 1; k + 2 <= ctx.ell; ++k) {
    const CriterionEvidence ev = criterion(ctx, k);
    rep.k_count += ev.in_k();
    rep.k_star_count += ev.in_k_star();
  }

  const unsigned a = ctx.alpha, b = ctx.beta;
  rep.a0_closed = frac(pow_mpz(9, b) - 1, pow_mpz(2, 2 * a + 2) * pow_mpz(9, b));
  mpq_class inner = 0;
  for (unsigned r = 1; r <= b; ++r) {
    inner += frac(2, pow_mpz(3, 2 * b - r + 2));
    for (unsigned s = 0; s < r; ++s) inner += frac(4, pow_mpz(3, 2 * b - r - s + 2));
  }
  rep.a0_double_sum = inner / pow_mpz(2, 2 * a);
  rep.b_minus_one_claim = mpq_class(mpz_class(pow_mpz(2, a) - 2)) * rep.a0_closed;
  return rep;
}

} // namespace demj::singular
