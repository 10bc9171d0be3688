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

#include "iterdep/intmath.hpp"

#include <algorithm>
#include <map>

namespace iterdep {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

BigInt rho_brent(const BigInt& n, unsigned long c) {
  auto f = [&](const BigInt& x) {
    BigInt y = x * x + c;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
    return y;
  };
  BigInt y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  constexpr unsigned long m = 128;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        BigInt diff = x - y;
        q = (q * abs(diff)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      BigInt diff = x - ys;
      diff = abs(diff);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1;; ++c) {
    BigInt d = rho_brent(n, c);
    if (d != n && d != 1) {
      split(d, out);
      split(BigInt(n / d), out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n) {
  BigInt v;
  mpz_import(v.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return is_prime(v);
}

IntFactorization factor_integer(const BigInt& n_in, unsigned max_bits) {
  BigInt n = abs(n_in);
  if (n == 0) throw PreconditionError("factor_integer: zero has no factorization");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > max_bits)
    throw RefusedError("factor_integer: " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 2)) +
                       "-bit input exceeds the " + std::to_string(max_bits) + "-bit guard");
  std::map<BigInt, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      n /= p;
    }
  }
  split(n, found);
  IntFactorization out;
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

BigInt product(const IntFactorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) r *= ipow(p, e);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, k);
  }
  return std::make_pair(q, 1u);
}

unsigned ceil_log(std::uint64_t base, std::uint64_t x) {
  if (base < 2 || x < 1) throw PreconditionError("ceil_log: need base >= 2 and x >= 1");
  unsigned k = 0;
  BigInt power = 1;
  while (power < x) {
    power *= base;
    ++k;
  }
  return k;
}

unsigned floor_log(std::uint64_t base, std::uint64_t x) {
  if (base < 2 || x < 1) throw PreconditionError("floor_log: need base >= 2 and x >= 1");
  unsigned k = 0;
  BigInt power = base;
  while (power <= x) {
    power *= base;
    ++k;
  }
  return k;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw RefusedError("value does not fit in 64 bits: " + v.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

bool fits_i64(const BigInt& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

}  // namespace iterdep
