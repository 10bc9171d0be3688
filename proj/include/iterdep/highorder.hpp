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


// Elements of provably high order in F_{q^n}: a root alpha of X^m h - g with
// m = q^ceil(log_q n) satisfies alpha^(m^i) = f^(i)(alpha) for f = g/h, and
// independence of the iterates makes the powers alpha^a, a in S, distinct.

#ifndef ITERDEP_HIGHORDER_HPP
#define ITERDEP_HIGHORDER_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "iterdep/field.hpp"
#include "iterdep/iterinv.hpp"
#include "iterdep/polyfactor.hpp"
#include "iterdep/ratfunc.hpp"

namespace iterdep {

struct HighOrderParams {
  std::uint64_t q = 0, n = 0;
  unsigned d = 0;       // least d with q^d >= n^2
  std::uint64_t m = 0;  // least power of q that is >= n
  unsigned t = 0;       // floor(log_d n)
  BigRational lambe_bound;
  BigInt order_bound;   // ceil(lambe_bound)
};

HighOrderParams derive_params(std::uint64_t q, std::uint64_t n);

/// binom(m + r, r) / prod x_i: a lower bound for the number of non-negative
/// solutions of sum a_i x_i <= m when gcd(x) = 1.
BigRational lambe_lower_bound(std::uint64_t m, const std::vector<std::uint64_t>& x);

/// Number of non-negative integer solutions of sum a_i x_i <= m.
BigInt dio_exact_count(std::uint64_t m, const std::vector<std::uint64_t>& x);

/// The exponent set S = { sum a_i m^i : sum a_i d^i <= n - 1 }, i < t, sorted.
std::vector<BigInt> exponent_set(const HighOrderParams& p);

BigInt ceil_rational(const BigRational& r);

template <class K>
struct HighOrderCertificate {
  HighOrderParams params;
  Poly<K> g, h, composite, factor;
  std::uint64_t pair_index = 0;  // position in the candidate stream, from 0
  std::optional<BigInt> verified_order;
  bool frobenius_ok = false;
};

template <class K>
struct ConstructResult {
  std::optional<HighOrderCertificate<K>> certificate;
  std::uint64_t tried = 0;
  bool exhausted = false;
};

namespace detail {

// Pairs (g, h) with deg g, deg h <= d in candidate order: g by canonical index,
// then monic h by canonical index.
struct PairSpace {
  std::uint64_t span = 0;  // q^(d+1)
  std::uint64_t size() const { return span * span; }
};

inline PairSpace pair_space(std::uint64_t q, unsigned d) {
  BigInt span = ipow(BigInt(q), d + 1);
  if (span > BigInt(std::uint64_t{1} << 31)) throw RefusedError("candidate pairs: search space too large");
  return {to_u64(span)};
}

}  // namespace detail

enum class PairVerdict { accepted, not_coprime, low_degree, not_monic, exceptional, hypothesis };

/// Membership in the candidate set: h monic, gcd(g, h) = 1, deg(g/h) >= 2,
/// no excluded shape, and deg g != deg h or g/h separable.
template <class K>
PairVerdict classify_pair(const Poly<K>& g, const Poly<K>& h) {
  if (h.is_zero() || !h.is_monic()) return PairVerdict::not_monic;
  if (g.is_zero() || !coprime(g, h)) return PairVerdict::not_coprime;
  const RationalFunction<K> f(g, h);
  if (f.degree() < 2) return PairVerdict::low_degree;
  const auto s = classify_exceptional(f);
  if (!is_admissible(s)) return PairVerdict::exceptional;
  if (g.degree() == h.degree() && !s.separable) return PairVerdict::hypothesis;
  return PairVerdict::accepted;
}

/// Visits admissible pairs in order until `visit` returns false. With a seed,
/// the order is a seeded shuffle of the pair space instead.
template <class K>
void for_each_candidate(const K& k, unsigned d, const std::function<bool(const Poly<K>&, const Poly<K>&)>& visit,
                        std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  const auto space = detail::pair_space(k.size(), d);
  auto try_index = [&](std::uint64_t gi, std::uint64_t hi) {
    const Poly<K> h = poly_from_index(k, hi, d + 1);
    if (h.is_zero() || !h.is_monic()) return true;
    const Poly<K> g = poly_from_index(k, gi, d + 1);
    if (classify_pair(g, h) != PairVerdict::accepted) return true;
    return visit(g, h);
  };
  if (!shuffle_seed) {
    for (std::uint64_t gi = 0; gi < space.span; ++gi)
      for (std::uint64_t hi = 0; hi < space.span; ++hi)
        if (!try_index(gi, hi)) return;
    return;
  }
  if (space.size() > (std::uint64_t{1} << 24)) throw RefusedError("candidate pairs: space too large to shuffle");
  std::vector<std::uint64_t> order(space.size());
  for (std::uint64_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(*shuffle_seed);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::uint64_t i : order)
    if (!try_index(i / space.span, i % space.span)) return;
}

template <class K>
std::vector<std::pair<Poly<K>, Poly<K>>> candidate_pairs(const K& k, unsigned d, std::size_t limit = 0) {
  std::vector<std::pair<Poly<K>, Poly<K>>> out;
  for_each_candidate<K>(k, d, [&](const Poly<K>& g, const Poly<K>& h) {
    out.emplace_back(g, h);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

namespace detail {

template <class K>
struct QuotientRing {
  Poly<K> mod;
  Poly<K> mul(const Poly<K>& a, const Poly<K>& b) const { return (a * b) % mod; }
  std::optional<Poly<K>> inv(const Poly<K>& a) const {
    auto r = xgcd(a % mod, mod);
    if (r.g.degree() != 0) return std::nullopt;
    return scale(r.s, mod.field().inv(r.g.lead())) % mod;
  }
  Poly<K> pow(const Poly<K>& a, const BigInt& e) const {
    return power(a, e, Poly<K>::one(mod.field()), [&](const Poly<K>& x, const Poly<K>& y) { return mul(x, y); });
  }
};

}  // namespace detail

/// Checks alpha^(m^i) = f^(i)(alpha) for 0 <= i <= t in K[X]/(factor).
template <class K>
bool frobenius_identities(const HighOrderCertificate<K>& c) {
  const K& k = c.factor.field();
  const detail::QuotientRing<K> ring{c.factor};
  Poly<K> lhs = Poly<K>::x(k) % c.factor, rhs = lhs;
  for (unsigned i = 0; i <= c.params.t; ++i) {
    if (!(lhs == rhs)) return false;
    if (i == c.params.t) break;
    lhs = ring.pow(lhs, BigInt(c.params.m));
    const auto den = ring.inv(compose(c.h, rhs) % c.factor);
    if (!den) return false;
    rhs = ring.mul(compose(c.g, rhs) % c.factor, *den);
  }
  return true;
}

template <class K>
ConstructResult<K> construct(const K& k, std::uint64_t n, std::uint64_t pair_limit = 0, std::uint64_t seed = 0,
                             std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  static_assert(K::is_finite, "construct needs a finite field");
  ConstructResult<K> out;
  const HighOrderParams params = derive_params(k.size(), n);
  const Poly<K> xm = Poly<K>::monomial(k, k.one(), static_cast<int>(params.m));
  for_each_candidate<K>(
      k, params.d,
      [&](const Poly<K>& g, const Poly<K>& h) {
        if (pair_limit != 0 && out.tried >= pair_limit) return false;
        ++out.tried;
        const Poly<K> composite = xm * h - g;
        auto fac = irreducible_factor_of_degree(composite, static_cast<unsigned>(n), seed);
        if (!fac) return true;
        HighOrderCertificate<K> c{params, g, h, composite, *fac, out.tried - 1, std::nullopt, false};
        c.frobenius_ok = frobenius_identities(c);
        out.certificate = std::move(c);
        return false;
      },
      shuffle_seed);
  out.exhausted = !out.certificate;
  return out;
}

/// Exact order of alpha = X mod factor; must reach the certificate's bound.
template <class K>
BigInt verify_order(HighOrderCertificate<K>& c) {
  const K& k = c.factor.field();
  const BigInt group = ipow(BigInt(k.size()), static_cast<unsigned long>(c.factor.degree())) - 1;
  if (mpz_sizeinbase(group.get_mpz_t(), 2) > 96) throw RefusedError("verify_order: q^n - 1 exceeds 2^96");
  const IntFactorization fac = factor_integer(group, 96);
  const detail::QuotientRing<K> ring{c.factor};
  const Poly<K> alpha = Poly<K>::x(k) % c.factor;
  const BigInt order = multiplicative_order(
      alpha, Poly<K>::one(k), fac, [&](const Poly<K>& a, const Poly<K>& b) { return ring.mul(a, b); },
      [](const Poly<K>& a, const Poly<K>& b) { return a == b; });
  if (order < c.params.order_bound) throw InvariantViolation("verify_order: order below the proven bound");
  c.verified_order = order;
  return order;
}

struct ScanRow {
  std::uint64_t n = 0;
  unsigned d = 0;
  std::uint64_t m = 0;
  bool exhaustive = false;
  std::uint64_t tried = 0;      // pairs examined (sampled or all)
  std::uint64_t coprime = 0;    // of those, with gcd(g, h) = 1
  std::uint64_t admissible = 0; // of those, in the candidate set
  std::uint64_t successes = 0;  // admissible with a degree-n irreducible factor
  double success_fraction = 0;
  double coprime_fraction = 0;
  double inverse_n = 0;
  BigRational t_estimate;       // |T| (exact when exhaustive), g/h and cg/ch counted apart
  BigRational eq9_value;        // (q-1)^3 / q^2 * n^4
  std::optional<std::pair<std::string, std::string>> first_success;
};

struct ScanReport {
  std::uint64_t q = 0, n_from = 0, n_to = 0, sample = 0, seed = 0;
  std::vector<ScanRow> rows;
};

/// For each n, tests pairs (g, h) with deg <= d, h monic: all of them when
/// sample == 0, otherwise `sample` uniformly drawn ones.
template <class K>
ScanReport conjecture_scan(const K& k, std::uint64_t n_from, std::uint64_t n_to, std::uint64_t sample,
                           std::uint64_t seed) {
  static_assert(K::is_finite, "conjecture_scan needs a finite field");
  if (n_from < 2 || n_to < n_from) throw PreconditionError("scan: need 2 <= n_from <= n_to");
  const std::uint64_t q = k.size();
  ScanReport rep{q, n_from, n_to, sample, seed, {}};
  for (std::uint64_t n = n_from; n <= n_to; ++n) {
    const HighOrderParams p = derive_params(q, n);
    const auto space = detail::pair_space(q, p.d);
    // Monic h of degree <= d: (q^(d+1) - 1) / (q - 1).
    const std::uint64_t monic = (space.span - 1) / (q - 1);
    ScanRow row;
    row.n = n;
    row.d = p.d;
    row.m = p.m;
    row.exhaustive = sample == 0;
    row.inverse_n = 1.0 / static_cast<double>(n);
    row.eq9_value = BigRational(ipow(BigInt(q - 1), 3) * ipow(BigInt(n), 4), ipow(BigInt(q), 2));
    row.eq9_value.canonicalize();
    const Poly<K> xm = Poly<K>::monomial(k, k.one(), static_cast<int>(p.m));
    std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
    auto test = [&](const Poly<K>& g, const Poly<K>& h) {
      ++row.tried;
      if (!g.is_zero() && coprime(g, h)) ++row.coprime;
      if (classify_pair(g, h) != PairVerdict::accepted) return;
      ++row.admissible;
      if (!irreducible_factor_of_degree(xm * h - g, static_cast<unsigned>(n), seed)) return;
      ++row.successes;
      if (!row.first_success) row.first_success = std::make_pair(format_poly(g), format_poly(h));
    };
    if (row.exhaustive) {
      if (space.size() > (std::uint64_t{1} << 26)) throw RefusedError("scan: exhaustive space too large, use --sample");
      for (std::uint64_t gi = 0; gi < space.span; ++gi)
        for (std::uint64_t hi = 0; hi < space.span; ++hi) {
          const Poly<K> h = poly_from_index(k, hi, p.d + 1);
          if (h.is_zero() || !h.is_monic()) continue;
          test(poly_from_index(k, gi, p.d + 1), h);
        }
    } else {
      for (std::uint64_t s = 0; s < sample; ++s) {
        const Poly<K> g = poly_from_index(k, rng() % space.span, p.d + 1);
        // Uniform monic h: pick a degree weighted by q^deg, then the lower part.
        std::uint64_t r = rng() % monic, deg = 0, block = 1;
        while (r >= block) {
          r -= block;
          block *= q;
          ++deg;
        }
        const Poly<K> h = poly_from_index(k, r, deg) + Poly<K>::monomial(k, k.one(), static_cast<int>(deg));
        test(g, h);
      }
    }
    row.success_fraction = row.admissible ? static_cast<double>(row.successes) / row.admissible : 0.0;
    row.coprime_fraction = row.tried ? static_cast<double>(row.coprime) / row.tried : 0.0;
    // Scale to all pairs, then count g/h and (cg)/(ch) separately.
    row.t_estimate = BigRational(BigInt(row.admissible) * BigInt(space.span) * BigInt(monic) * BigInt(q - 1),
                                 BigInt(row.tried ? row.tried : 1));
    row.t_estimate.canonicalize();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

/// Fraction of coprime pairs among `samples` random (g, h) with deg g = d and
/// deg h = d - 1.
template <class K>
double coprime_fraction(const K& k, unsigned d, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto random_of_degree = [&](unsigned deg) {
    std::vector<typename K::Elem> c;
    for (unsigned i = 0; i < deg; ++i) c.push_back(k.random(rng));
    typename K::Elem lead = k.random(rng);
    while (k.is_zero(lead)) lead = k.random(rng);
    c.push_back(lead);
    return Poly<K>(k, std::move(c));
  };
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s)
    if (coprime(random_of_degree(d), random_of_degree(d - 1))) ++hits;
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace iterdep

#endif  // ITERDEP_HIGHORDER_HPP
