// Copyright 2026 The iterdep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Integer helpers: primality, factorization, binomials, exact integer logs and
// generic group exponentiation. Arbitrary precision comes from GMP.

#ifndef ITERDEP_INTMATH_HPP
#define ITERDEP_INTMATH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iterdep/errors.hpp"

namespace iterdep {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};
using IntFactorization = std::vector<PrimePower>;

bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

// Trial division up to 10^6, then Pollard rho (Brent). Factors are returned in
// increasing order. Throws RefusedError when |n| exceeds max_bits.
IntFactorization factor_integer(const BigInt& n, unsigned max_bits = 256);

BigInt product(const IntFactorization& f);

BigInt binomial(unsigned long n, unsigned long k);

// q = p^k with p prime, else nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decomposition(std::uint64_t q);

// Least k >= 0 with base^k >= x. base >= 2, x >= 1.
unsigned ceil_log(std::uint64_t base, std::uint64_t x);
// Greatest k >= 0 with base^k <= x. base >= 2, x >= 1.
unsigned floor_log(std::uint64_t base, std::uint64_t x);

BigInt ipow(const BigInt& base, unsigned long e);

std::uint64_t to_u64(const BigInt& v);
bool fits_i64(const BigInt& v);

/// Square-and-multiply in any monoid described by `mul`.
template <class T, class Mul>
T power(T base, const BigInt& exponent, T one, Mul mul) {
  if (exponent < 0) throw PreconditionError("power: negative exponent");
  T result = std::move(one);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mul(result, base);
  }
  return result;
}

/// Exact order of x in a finite group whose order factors as `group_order`:
/// start from the group order and strip each prime while x^(ord/l) == 1.
template <class T, class Mul, class Eq>
BigInt multiplicative_order(const T& x, const T& one, const IntFactorization& group_order,
                            Mul mul, Eq eq) {
  BigInt order = product(group_order);
  for (const auto& [prime, exponent] : group_order) {
    for (unsigned i = 0; i < exponent; ++i) order /= prime;
    T y = power(x, order, one, mul);
    while (!eq(y, one)) {
      y = power(y, prime, one, mul);
      order *= prime;
    }
  }
  return order;
}

}  // namespace iterdep

#endif  // ITERDEP_INTMATH_HPP
