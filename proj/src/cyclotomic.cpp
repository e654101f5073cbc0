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
#include "cyclotomic.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"

namespace demj::cyclotomic {

namespace {

using Coeffs = std::vector<mpz_class>;

// p * (X^d - 1)
Coeffs times_binomial(const Coeffs& p, std::size_t d) {
  Coeffs r(p.size() + d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + d] += p[i];
    r[i] -= p[i];
  }
  return r;
}

// p / (X^d - 1), exact.
Coeffs over_binomial(const Coeffs& p, std::size_t d) {
  if (p.size() <= d) throw Error(ErrorCode::Internal, "binomial division degree underflow");
  const std::size_t qsize = p.size() - d;
  Coeffs q(qsize);
  // p_i = q_{i-d} - q_i
  for (std::size_t i = 0; i < qsize; ++i) q[i] = (i >= d ? q[i - d] : mpz_class(0)) - p[i];
  for (std::size_t i = qsize; i < p.size(); ++i)
    if (p[i] != (i >= d ? q[i - d] : mpz_class(0)))
      throw Error(ErrorCode::Internal, "binomial division is not exact");
  return q;
}

IntPolynomial scaled(const IntPolynomial& p, const mpz_class& c) {
  Coeffs out = p.coefficients();
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial divided_exact(const IntPolynomial& p, const mpz_class& c) {
  Coeffs out = p.coefficients();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(out));
}

mpz_class ipow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

using ModPoly = std::vector<u64>;

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce_mod(const IntPolynomial& p, u64 prime) {
  const mpz_class mod(std::to_string(prime));
  ModPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
    out.push_back(std::stoull(r.get_str()));
  }
  trim_mod(out);
  return out;
}

// a mod b over F_prime; b nonzero.
ModPoly rem_mod(ModPoly a, const ModPoly& b, u64 prime) {
  const u64 inv = arith::mod_inverse(static_cast<arith::i64>(b.back()), prime);
  while (a.size() >= b.size() && !a.empty()) {
    const u64 factor = arith::mul_mod(a.back(), inv, prime);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const u64 sub = arith::mul_mod(factor, b[i], prime);
      u64& cell = a[i + shift];
      cell = cell >= sub ? cell - sub : cell + prime - sub;
    }
    trim_mod(a);
  }
  return a;
}

// Pollard rho (Brent) on a composite mpz; returns a nontrivial factor or 0
// once `budget` squarings, shared across all constants, are spent.
mpz_class rho_factor(const mpz_class& n, unsigned long budget) {
  unsigned long spent = 0;
  for (unsigned long c = 1; c < 32 && spent < budget; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1, diff;
    unsigned long r = 1;
    auto f = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long batch = std::min<unsigned long>(128, r - k);
        for (unsigned long i = 0; i < batch; ++i) {
          f(y);
          diff = abs(x - y);
          q = q * diff % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
        spent += batch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        f(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

constexpr unsigned long kRhoBudget = 2'000'000;

void split_big(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    for (const auto& f : arith::factorize(n.get_ui())) out.emplace_back(std::to_string(f.prime));
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out.push_back(n);
    return;
  }
  const mpz_class d = rho_factor(n, kRhoBudget);
  if (d == 0)
    throw Error(ErrorCode::FactorizationIncomplete,
                "could not split a " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) +
                    "-digit cofactor");
  split_big(d, out);
  split_big(n / d, out);
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  return divided_exact(*this, c);
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  Coeffs out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  Coeffs out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Coeffs out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial cyclotomic_poly(u64 n, u64 cap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "cyclotomic index " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<u64> primes;
  u64 rad = 1;
  for (const auto& f : arith::factorize(n)) {
    primes.push_back(f.prime);
    rad *= f.prime;
  }
  // Phi_rad = prod over d | rad of (X^d - 1)^mu(rad/d). Multiply first so every
  // division is exact.
  std::vector<std::pair<u64, bool>> binomials; // (d, mu(rad/d) == +1)
  const std::size_t count = primes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    u64 d = 1;
    std::size_t missing = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask >> i & 1)
        d *= primes[i];
      else
        ++missing;
    }
    binomials.emplace_back(d, missing % 2 == 0);
  }
  Coeffs poly{mpz_class(1)};
  for (const auto& [d, positive] : binomials)
    if (positive) poly = times_binomial(poly, d);
  for (const auto& [d, positive] : binomials)
    if (!positive) poly = over_binomial(poly, d);
  // Phi_n(X) = Phi_rad(X^(n/rad))
  const u64 stretch = n / rad;
  if (stretch > 1) {
    Coeffs spread((poly.size() - 1) * stretch + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) spread[i * stretch] = poly[i];
    poly = std::move(spread);
  }
  return IntPolynomial(std::move(poly));
}

IntPolynomial compose_neg_quadratic(const IntPolynomial& p) {
  const IntPolynomial inner{0, -1, -1};
  IntPolynomial result;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) result = result * inner + IntPolynomial(Coeffs{c[i]});
  return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  const mpz_class lb = b.leading();
  const int db = b.degree();
  int uses = a.degree() - db + 1;
  Coeffs r = a.coefficients();
  const Coeffs& bc = b.coefficients();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const mpz_class lead = r.back();
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
    for (auto& x : r) x *= lb;
    for (std::size_t i = 0; i < bc.size(); ++i) r[i + shift] -= lead * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    --uses;
  }
  IntPolynomial rem(std::move(r));
  if (uses > 0) rem = scaled(rem, ipow(lb, static_cast<unsigned long>(uses)));
  return rem;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "resultant of a zero polynomial");
  const mpz_class ca = p.content(), cb = q.content();
  IntPolynomial a = divided_exact(p, ca), b = divided_exact(q, cb);
  mpz_class t = ipow(ca, static_cast<unsigned long>(q.degree())) *
                ipow(cb, static_cast<unsigned long>(p.degree()));
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
  }
  if (a.degree() == 0) return t; // both constant

  mpz_class g = 1, h = 1;
  while (b.degree() > 0) {
    const unsigned long delta = static_cast<unsigned long>(a.degree() - b.degree());
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = divided_exact(r, g * ipow(h, delta));
    g = a.leading();
    h = delta == 0 ? h : exact_div(ipow(g, delta), ipow(h, delta - 1));
    if (b.is_zero()) return 0;
  }
  const unsigned long da = static_cast<unsigned long>(a.degree());
  h = exact_div(ipow(b.leading(), da), ipow(h, da - 1));
  return sign * t * h;
}

u64 resultant_mod(const IntPolynomial& p, const IntPolynomial& q, u64 prime) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "resultant of a zero polynomial");
  ModPoly a = reduce_mod(p, prime), b = reduce_mod(q, prime);
  if (static_cast<int>(a.size()) - 1 != p.degree() || static_cast<int>(b.size()) - 1 != q.degree())
    throw Error(ErrorCode::InvalidArgument,
                "leading coefficient vanishes modulo " + std::to_string(prime));
  u64 result = 1;
  while (true) {
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    if (n == 0) return arith::mul_mod(result, arith::pow_mod(b[0], m, prime), prime);
    ModPoly r = rem_mod(a, b, prime);
    if (r.empty()) return 0;
    const std::size_t deg_r = r.size() - 1;
    if ((m * n) % 2 == 1) result = result == 0 ? 0 : prime - result;
    result = arith::mul_mod(result, arith::pow_mod(b.back(), m - deg_r, prime), prime);
    a = std::move(b);
    b = std::move(r);
  }
}

std::vector<mpz_class> distinct_prime_divisors(const mpz_class& n) {
  mpz_class rest = abs(n);
  if (rest == 0) throw Error(ErrorCode::InvalidArgument, "zero has no finite prime set");
  std::vector<mpz_class> out;
  for (unsigned long p = 2; p < 1'000'000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    out.emplace_back(p);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0)
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
  }
  std::vector<mpz_class> big;
  split_big(rest, big);
  out.insert(out.end(), big.begin(), big.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntPolynomial p_poly(unsigned a, u64 d) {
  u64 n = d;
  for (unsigned i = 0; i < a; ++i) n *= 3;
  return cyclotomic_poly(n);
}

IntPolynomial q_poly(unsigned b, u64 e) {
  u64 n = e;
  for (unsigned i = 0; i < b; ++i) n *= 3;
  return compose_neg_quadratic(cyclotomic_poly(n));
}

ResultantRecord l_set(unsigned a, unsigned b, u64 d, u64 e) {
  if (a < 1 || b + 1 > a)
    throw Error(ErrorCode::InvalidArgument, "need a >= 1 and 0 <= b <= a - 1");
  if (d == 0 || e == 0 || arith::gcd(d, 6) != 1 || arith::gcd(e, 6) != 1)
    throw Error(ErrorCode::InvalidArgument, "d and e must be positive and prime to 6");
  const IntPolynomial p = p_poly(a, d);
  const IntPolynomial q = q_poly(b, e);
  if (poly_gcd(p, q).degree() > 0)
    throw Error(ErrorCode::DegenerateParameters,
                "Phi_{3^a d}(X) and Phi_{3^b e}(-X^2-X) share a root");
  ResultantRecord rec{a, b, d, e, resultant(p, q), {}};
  rec.prime_divisors = distinct_prime_divisors(rec.resultant);
  return rec;
}

} // namespace demj::cyclotomic
