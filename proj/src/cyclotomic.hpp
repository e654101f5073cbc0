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

// Integer polynomials, cyclotomic polynomials and resultants, and the prime
// sets attached to the resultants Res(Phi_{3^a d}(X), Phi_{3^b e}(-X^2 - X)).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"

namespace demj::cyclotomic {

using arith::u64;

inline constexpr u64 kCyclotomicCap = 1'000'000;

class IntPolynomial {
public:
  IntPolynomial() = default;
  /// Coefficients constant term first; trailing zeros are dropped.
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of X^i, zero past the degree.
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const;

  /// Nonnegative gcd of the coefficients.
  mpz_class content() const;
  IntPolynomial primitive_part() const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Phi_n by the Moebius product over (X^d - 1). Throws CapExceeded above `cap`.
IntPolynomial cyclotomic_poly(u64 n, u64 cap = kCyclotomicCap);

/// p(-X^2 - X).
IntPolynomial compose_neg_quadratic(const IntPolynomial& p);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Z[X] (positive leading coefficient).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Sylvester-convention resultant via the subresultant PRS.
/// Throws ZeroPolynomial if either input is zero.
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q);

/// Resultant of the reductions modulo an odd prime < 2^62, computed by
/// Euclid over F_prime. Throws InvalidArgument if a leading coefficient
/// vanishes modulo prime (the reduction would change the degree).
u64 resultant_mod(const IntPolynomial& p, const IntPolynomial& q, u64 prime);

/// Distinct primes dividing |n|, ascending. Trial division, then Pollard rho
/// on what remains. Throws FactorizationIncomplete when rho runs out of budget.
std::vector<mpz_class> distinct_prime_divisors(const mpz_class& n);

struct ResultantRecord {
  unsigned a = 0;
  unsigned b = 0;
  u64 d = 0;
  u64 e = 0;
  mpz_class resultant;
  std::vector<mpz_class> prime_divisors;
};

/// p_{a,d} = Phi_{3^a d}(X), q_{b,e} = Phi_{3^b e}(-X^2 - X).
IntPolynomial p_poly(unsigned a, u64 d);
IntPolynomial q_poly(unsigned b, u64 e);

/// Requires a >= 1, b <= a - 1, gcd(d, 6) = gcd(e, 6) = 1. Throws
/// DegenerateParameters when p and q share a root.
ResultantRecord l_set(unsigned a, unsigned b, u64 d, u64 e);

} // namespace demj::cyclotomic
