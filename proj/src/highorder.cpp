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


#include "iterdep/highorder.hpp"

#include <numeric>

namespace iterdep {

BigInt ceil_rational(const BigRational& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

HighOrderParams derive_params(std::uint64_t q, std::uint64_t n) {
  if (!prime_power_decomposition(q)) throw PreconditionError("derive_params: q must be a prime power");
  if (n < 2) throw PreconditionError("derive_params: n must be at least 2");
  if (n > (std::uint64_t{1} << 31)) throw PreconditionError("derive_params: n too large");
  HighOrderParams p;
  p.q = q;
  p.n = n;
  p.d = ceil_log(q, n * n);
  // q >= n^2 leaves only degree-1 pairs, for which there is nothing to iterate.
  if (p.d < 2) throw PreconditionError("derive_params: q >= n^2 gives d = 1");
  p.m = to_u64(ipow(BigInt(q), ceil_log(q, n)));
  p.t = floor_log(p.d, n);
  std::vector<std::uint64_t> x;
  std::uint64_t di = 1;
  for (unsigned i = 0; i < p.t; ++i) {
    x.push_back(di);
    di *= p.d;
  }
  p.lambe_bound = lambe_lower_bound(n - 1, x);
  p.order_bound = ceil_rational(p.lambe_bound);
  return p;
}

BigRational lambe_lower_bound(std::uint64_t m, const std::vector<std::uint64_t>& x) {
  std::uint64_t g = 0;
  for (auto v : x) {
    if (v == 0) throw PreconditionError("lambe_lower_bound: weights must be positive");
    g = std::gcd(g, v);
  }
  if (!x.empty() && g != 1) throw PreconditionError("lambe_lower_bound: weights must have gcd 1");
  BigInt den = 1;
  for (auto v : x) den *= v;
  BigRational r(binomial(m + x.size(), x.size()), den);
  r.canonicalize();
  return r;
}

BigInt dio_exact_count(std::uint64_t m, const std::vector<std::uint64_t>& x) {
  if (m > 10'000'000) throw RefusedError("dio_exact_count: m too large");
  // ways[s] = number of solutions with sum exactly s, over the weights seen so far.
  std::vector<BigInt> ways(m + 1, 0);
  ways[0] = 1;
  for (auto w : x) {
    if (w == 0) throw PreconditionError("dio_exact_count: weights must be positive");
    for (std::uint64_t s = w; s <= m; ++s) ways[s] += ways[s - w];
  }
  BigInt total = 0;
  for (const auto& v : ways) total += v;
  return total;
}

std::vector<BigInt> exponent_set(const HighOrderParams& p) {
  std::vector<BigInt> out;
  std::vector<std::uint64_t> a(p.t, 0);
  const BigInt m = p.m;
  // Depth-first over a_0..a_{t-1} with the weighted sum kept <= n - 1.
  std::function<void(unsigned, std::uint64_t, BigInt, std::uint64_t, BigInt)> rec =
      [&](unsigned i, std::uint64_t budget, BigInt value, std::uint64_t di, BigInt mi) {
        if (i == p.t) {
          out.push_back(value);
          return;
        }
        for (std::uint64_t ai = 0; ai * di <= budget; ++ai)
          rec(i + 1, budget - ai * di, value + BigInt(ai) * mi, di * p.d, mi * m);
      };
  rec(0, p.n - 1, BigInt(0), 1, BigInt(1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace iterdep
