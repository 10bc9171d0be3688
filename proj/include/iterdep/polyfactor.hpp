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

// Squarefree decomposition, radicals, resultants and, over finite fields,
// complete factorization (squarefree -> distinct degree -> Cantor-Zassenhaus).

#ifndef ITERDEP_POLYFACTOR_HPP
#define ITERDEP_POLYFACTOR_HPP

#include <optional>
#include <random>
#include <vector>

#include "iterdep/linalg.hpp"
#include "iterdep/poly.hpp"

namespace iterdep {

template <class K>
struct FactorPower {
  Poly<K> factor;
  unsigned multiplicity = 1;
};

template <class K>
struct Factorization {
  typename K::Elem unit;
  std::vector<FactorPower<K>> factors;
};

template <class K>
Poly<K> expand(const K& field, const Factorization<K>& fac) {
  Poly<K> acc = Poly<K>::constant(field, fac.unit);
  for (const auto& fp : fac.factors) acc = acc * pow(fp.factor, fp.multiplicity);
  return acc;
}

/// Squarefree decomposition of a monic f: pairs (a_i, i) with f = prod a_i^i,
/// a_i squarefree and pairwise coprime. Characteristic 0 uses Yun's algorithm;
/// characteristic p extracts p-th roots of the inseparable remainder.
template <class K>
std::vector<FactorPower<K>> squarefree_decomposition(const Poly<K>& f_in) {
  if (f_in.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  const K& k = f_in.field();
  const Poly<K> f = monic(f_in);
  std::vector<FactorPower<K>> out;
  if (f.degree() < 1) return out;
  if (k.characteristic() == 0) {
    Poly<K> a = gcd(f, derivative(f));
    Poly<K> b = div_exact(f, a);
    Poly<K> c = div_exact(derivative(f), a);
    Poly<K> dd = c - derivative(b);
    for (unsigned i = 1; b.degree() > 0; ++i) {
      Poly<K> g = gcd(b, dd);
      if (g.degree() > 0) out.push_back({g, i});
      b = div_exact(b, g);
      c = div_exact(dd, g);
      dd = c - derivative(b);
    }
    return out;
  }
  const std::uint64_t p = k.characteristic();
  Poly<K> c = gcd(f, derivative(f));
  Poly<K> w = div_exact(f, c);
  for (unsigned i = 1; w.degree() > 0; ++i) {
    Poly<K> y = gcd(w, c);
    Poly<K> z = div_exact(w, y);
    if (z.degree() > 0) out.push_back({z, i});
    w = std::move(y);
    c = div_exact(c, w);
  }
  if constexpr (K::is_finite) {
    if (c.degree() > 0) {
      // c(X) = r(X^p): take X^p -> X and p-th roots of coefficients.
      std::vector<typename K::Elem> r;
      for (std::size_t i = 0; i < c.coeffs().size(); i += p) r.push_back(k.pth_root(c.coeffs()[i]));
      for (auto& fp : squarefree_decomposition(Poly<K>(k, std::move(r)))) {
        fp.multiplicity *= static_cast<unsigned>(p);
        out.push_back(std::move(fp));
      }
    }
  }
  return out;
}

/// Monic product of the distinct irreducible factors of f.
template <class K>
Poly<K> radical(const Poly<K>& f) {
  if (f.is_zero()) throw PreconditionError("radical: zero polynomial");
  if (f.field().characteristic() == 0) return monic(div_exact(f, gcd(f, derivative(f))));
  Poly<K> r = Poly<K>::one(f.field());
  for (const auto& fp : squarefree_decomposition(f)) r = r * fp.factor;
  return r;
}

/// Res(a, b) = lc(a)^deg b * prod b(alpha) over the roots alpha of a, computed
/// with the Euclidean remainder sequence.
template <class K>
typename K::Elem resultant_euclid(Poly<K> a, Poly<K> b) {
  const K& k = a.field();
  if (a.is_zero() || b.is_zero()) throw PreconditionError("resultant: zero argument");
  auto acc = k.one();
  for (;;) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return k.mul(acc, power(b.lead(), BigInt(m), k.one(), [&](auto x, auto y) { return k.mul(x, y); }));
    if (m == 0) return k.mul(acc, power(a.lead(), BigInt(n), k.one(), [&](auto x, auto y) { return k.mul(x, y); }));
    Poly<K> r = a % b;
    if (r.is_zero()) return k.zero();
    // Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    if ((m % 2 == 1) && (n % 2 == 1)) acc = k.neg(acc);
    acc = k.mul(acc, power(b.lead(), BigInt(m - r.degree()), k.one(), [&](auto x, auto y) { return k.mul(x, y); }));
    a = std::move(b);
    b = std::move(r);
  }
}

/// Sylvester matrix of a (degree m) and b (degree n), (m+n) x (m+n), entries
/// produced by `conv` from the coefficients.
template <class T, class P, class Conv>
std::vector<std::vector<T>> sylvester_matrix(const std::vector<P>& a, const std::vector<P>& b, const T& zero,
                                             Conv conv) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = conv(a[m - j]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = conv(b[n - j]);
  return s;
}

/// Resultant over Q by fraction-free (Bareiss) elimination on the integer
/// Sylvester matrix of the denominator-cleared inputs.
inline BigRational resultant_bareiss(const Poly<Rationals>& a, const Poly<Rationals>& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("resultant: zero argument");
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return BigRational(1);
  auto clear = [](const Poly<Rationals>& p, BigInt& scale_out) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    scale_out = l;
    std::vector<BigInt> r;
    for (const auto& c : p.coeffs()) r.push_back(BigInt(c * l));
    return r;
  };
  BigInt la, lb;
  const auto ia = clear(a, la), ib = clear(b, lb);
  auto s = sylvester_matrix<BigInt>(ia, ib, BigInt(0), [](const BigInt& x) { return x; });
  BigInt det = bareiss_determinant(std::move(s), IntegerRing{});
  // Res(la a, lb b) = la^n lb^m Res(a, b)
  BigRational r(det, ipow(la, n) * ipow(lb, m));
  r.canonicalize();
  return r;
}

template <class K>
typename K::Elem resultant(const Poly<K>& a, const Poly<K>& b) {
  if constexpr (std::is_same_v<K, Rationals>) {
    return resultant_bareiss(a, b);
  } else {
    return resultant_euclid(a, b);
  }
}

// ---------------------------------------------------------------------------
// Finite fields.

/// X^(q^i) mod f for i = 1..count, by repeated q-th powering.
template <class K>
Poly<K> frobenius_power_of_x(const Poly<K>& f, unsigned i) {
  const K& k = f.field();
  Poly<K> h = Poly<K>::x(k) % f;
  for (unsigned j = 0; j < i; ++j) h = powmod(h, BigInt(k.size()), f);
  return h;
}

/// Ben-Or: a nonconstant f is irreducible iff gcd(f, X^(q^i) - X) = 1 for i <= deg/2.
template <class K>
bool is_irreducible(const Poly<K>& f) {
  static_assert(K::is_finite, "is_irreducible is implemented for finite fields");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const K& k = f.field();
  const Poly<K> x = Poly<K>::x(k);
  Poly<K> h = x % f;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, BigInt(k.size()), f);
    if (gcd(f, h - x).degree() > 0) return false;
  }
  return true;
}

/// Distinct-degree factorization of a monic squarefree f: pairs (product of
/// all irreducible factors of degree i, i). Stops after degree `max_degree`
/// when that is nonzero.
template <class K>
std::vector<FactorPower<K>> distinct_degree_factorization(Poly<K> f, unsigned max_degree = 0) {
  const K& k = f.field();
  std::vector<FactorPower<K>> out;
  const Poly<K> x = Poly<K>::x(k);
  Poly<K> h = x % f;
  for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
    if (max_degree != 0 && i > max_degree) return out;
    h = powmod(h, BigInt(k.size()), f);
    Poly<K> g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = div_exact(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0 && (max_degree == 0 || f.degree() <= static_cast<int>(max_degree)))
    out.push_back({f, static_cast<unsigned>(f.degree())});
  return out;
}

/// Cantor-Zassenhaus: split a monic squarefree f whose irreducible factors all
/// have degree d. Output is in no particular order.
template <class K>
void equal_degree_split(const Poly<K>& f, unsigned d, std::mt19937_64& rng, std::vector<Poly<K>>& out) {
  const K& k = f.field();
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = k.characteristic();
  for (;;) {
    std::vector<typename K::Elem> rc;
    for (int i = 0; i < f.degree(); ++i) rc.push_back(k.random(rng));
    Poly<K> a(k, std::move(rc));
    if (a.degree() < 1) continue;
    Poly<K> b(k);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(kd-1)), kd = d * log2 q.
      const unsigned bits = d * k.degree();
      Poly<K> t = a % f;
      b = t;
      for (unsigned i = 1; i < bits; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      BigInt e = (ipow(BigInt(k.size()), d) - 1) / 2;
      b = powmod(a, e, f) - Poly<K>::one(k);
    }
    Poly<K> g = b.is_zero() ? f : gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(div_exact(f, g), d, rng, out);
      return;
    }
  }
}

template <class K>
void sort_canonical(std::vector<FactorPower<K>>& v) {
  std::sort(v.begin(), v.end(),
            [](const FactorPower<K>& a, const FactorPower<K>& b) { return poly_less(a.factor, b.factor); });
}

/// Complete factorization over a finite field; deterministic for a given seed.
/// Factors are listed in canonical order.
template <class K>
Factorization<K> factor(const Poly<K>& f, std::uint64_t seed = 0) {
  static_assert(K::is_finite, "factor is implemented for finite fields only");
  if (f.is_zero()) throw PreconditionError("factor: zero polynomial");
  const K& k = f.field();
  Factorization<K> out{f.lead(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& sq : squarefree_decomposition(f)) {
    for (const auto& dd : distinct_degree_factorization(sq.factor)) {
      std::vector<Poly<K>> parts;
      equal_degree_split(dd.factor, dd.multiplicity, rng, parts);
      for (auto& part : parts) out.factors.push_back({std::move(part), sq.multiplicity});
    }
  }
  (void)k;
  sort_canonical(out.factors);
  return out;
}

/// The canonically smallest monic irreducible factor of f of degree exactly n, if any.
template <class K>
std::optional<Poly<K>> irreducible_factor_of_degree(const Poly<K>& f, unsigned n, std::uint64_t seed = 0) {
  static_assert(K::is_finite, "irreducible_factor_of_degree needs a finite field");
  if (f.is_zero()) throw PreconditionError("irreducible_factor_of_degree: zero polynomial");
  if (n == 0) throw PreconditionError("irreducible_factor_of_degree: n must be positive");
  if (f.degree() < static_cast<int>(n)) return std::nullopt;
  const Poly<K> rad = radical(f);
  for (const auto& dd : distinct_degree_factorization(rad, n)) {
    if (dd.multiplicity != n) continue;
    std::mt19937_64 rng(seed);
    std::vector<Poly<K>> parts;
    equal_degree_split(dd.factor, n, rng, parts);
    return *std::min_element(parts.begin(), parts.end(),
                             [](const Poly<K>& a, const Poly<K>& b) { return poly_less(a, b); });
  }
  return std::nullopt;
}

}  // namespace iterdep

#endif  // ITERDEP_POLYFACTOR_HPP
