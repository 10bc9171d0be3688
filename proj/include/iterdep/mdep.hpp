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


// Exact multiplicative dependence of rational functions: a product
// r_1^k_1 ... r_n^k_n equals the constant 1. Inputs are decomposed over a
// gcd-free basis so no irreducible factorization is needed; the constant
// parts add prime-valuation rows (over Q) or a discrete-log row (over F_q).

#ifndef ITERDEP_MDEP_HPP
#define ITERDEP_MDEP_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "iterdep/field.hpp"
#include "iterdep/linalg.hpp"
#include "iterdep/ratfunc.hpp"

namespace iterdep {

template <class K>
struct GcdFreeBasis {
  std::vector<Poly<K>> basis;
  std::vector<std::vector<long>> exponents;  // [input][basis element]
  std::vector<typename K::Elem> constants;
};

namespace detail {

template <class K>
bool basis_less(const Poly<K>& a, const Poly<K>& b) {
  if constexpr (K::is_finite) {
    return poly_less(a, b);
  } else {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
      if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
  }
}

// Exponent of b in a (b nonconstant), dividing it out of a.
template <class K>
long strip_factor(Poly<K>& a, const Poly<K>& b) {
  long v = 0;
  for (;;) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return v;
    a = std::move(q);
    ++v;
  }
}

}  // namespace detail

template <class K>
GcdFreeBasis<K> gcdfree_basis(const std::vector<RationalFunction<K>>& inputs) {
  if (inputs.empty()) throw PreconditionError("gcdfree_basis: no inputs");
  const K& k = inputs.front().field();
  std::vector<Poly<K>> pool;
  auto add = [&](const Poly<K>& p) {
    if (p.degree() < 1) return;
    Poly<K> m = monic(p);
    for (const auto& x : pool)
      if (x == m) return;
    pool.push_back(std::move(m));
  };
  for (const auto& r : inputs) {
    if (r.is_zero()) throw PreconditionError("gcdfree_basis: zero input");
    add(r.num());
    add(r.den());
  }
  // Split any two elements with a common factor a, b -> gcd, a/gcd, b/gcd.
  // The total degree drops each round, so this terminates.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < pool.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < pool.size() && !changed; ++j) {
        Poly<K> g = gcd(pool[i], pool[j]);
        if (g.degree() < 1) continue;
        const Poly<K> a = div_exact(pool[i], g), b = div_exact(pool[j], g);
        pool.erase(pool.begin() + static_cast<long>(j));
        pool.erase(pool.begin() + static_cast<long>(i));
        add(g);
        add(a);
        add(b);
        changed = true;
      }
    }
  }
  std::sort(pool.begin(), pool.end(), detail::basis_less<K>);
  GcdFreeBasis<K> out;
  out.basis = pool;
  for (const auto& r : inputs) {
    std::vector<long> row(pool.size(), 0);
    Poly<K> g = r.num(), h = r.den();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      row[j] += detail::strip_factor(g, pool[j]);
      row[j] -= detail::strip_factor(h, pool[j]);
    }
    if (g.degree() != 0 || h.degree() != 0) throw InvariantViolation("gcdfree_basis: input not covered by the basis");
    out.exponents.push_back(std::move(row));
    out.constants.push_back(k.div(g.lead(), h.lead()));
  }
  return out;
}

/// Degree of prod inputs_i^k_i in lowest terms.
template <class K>
long product_degree(const GcdFreeBasis<K>& b, const std::vector<long>& k) {
  if (k.size() != b.exponents.size()) throw PreconditionError("product_degree: exponent vector has the wrong length");
  long up = 0, down = 0;
  for (std::size_t j = 0; j < b.basis.size(); ++j) {
    long c = 0;
    for (std::size_t i = 0; i < k.size(); ++i) c += k[i] * b.exponents[i][j];
    (c > 0 ? up : down) += std::abs(c) * b.basis[j].degree();
  }
  return std::max(up, down);
}

template <class K>
struct DependenceResult {
  bool dependent = false;
  std::vector<long> witness;
  unsigned rank = 0;  // rank of the relation system; equals n when independent
  GcdFreeBasis<K> basis;
};

/// prod inputs_i^k_i, reduced.
template <class K>
RationalFunction<K> power_product(const std::vector<RationalFunction<K>>& inputs, const std::vector<long>& k) {
  RationalFunction<K> acc = RationalFunction<K>::constant(inputs.front().field(), inputs.front().field().one());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (k[i] != 0) acc = acc * rf_pow(inputs[i], k[i]);
  return acc;
}

namespace detail {

// Rows expressing "prod c_i^k_i = 1" for the constant parts, as integer
// linear conditions; each modular row gets its own slack column.
struct ConstantRows {
  IntMatrix rows;  // over the n inputs
  std::vector<BigInt> moduli;  // modulus per row (0: plain equation)
};

inline ConstantRows constant_rows(const Rationals&, const std::vector<BigRational>& c) {
  ConstantRows out;
  const std::size_t n = c.size();
  std::vector<BigInt> sign(n, 0);
  bool any_negative = false;
  std::map<BigInt, std::vector<BigInt>> valuations;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] < 0) {
      sign[i] = 1;
      any_negative = true;
    }
    auto add = [&](const BigInt& v, int s) {
      for (const auto& pp : factor_integer(abs(v))) {
        auto& row = valuations[pp.prime];
        row.resize(n, 0);
        row[i] += s * static_cast<long>(pp.exponent);
      }
    };
    add(c[i].get_num(), 1);
    add(c[i].get_den(), -1);
  }
  for (auto& [p, row] : valuations) {
    out.rows.push_back(row);
    out.moduli.push_back(0);
  }
  if (any_negative) {
    out.rows.push_back(sign);
    out.moduli.push_back(2);
  }
  return out;
}

template <class K>
ConstantRows constant_rows(const K& k, const std::vector<typename K::Elem>& c) {
  ConstantRows out;
  if (std::all_of(c.begin(), c.end(), [&](const auto& x) { return k.is_one(x); })) return out;
  const std::uint64_t q = k.size();
  if (q > (std::uint64_t{1} << 22)) throw RefusedError("dependence: discrete logarithms need q <= 2^22");
  const IntFactorization group = factor_integer(BigInt(q - 1));
  typename K::Elem gen = k.one();
  for (std::uint64_t i = 1; i < q; ++i) {
    gen = k.from_index(i);
    if (element_order(k, gen, group) == BigInt(q - 1)) break;
  }
  std::vector<std::uint64_t> log(q, 0);
  typename K::Elem x = k.one();
  for (std::uint64_t e = 0; e + 1 < q; ++e) {
    log[k.index(x)] = e;
    x = k.mul(x, gen);
  }
  std::vector<BigInt> row;
  for (const auto& ci : c) row.push_back(BigInt(log[k.index(ci)]));
  out.rows.push_back(row);
  out.moduli.push_back(BigInt(q - 1));
  return out;
}

inline BigInt max_norm(const std::vector<BigInt>& v) {
  BigInt m = 0;
  for (const auto& x : v) m = std::max(m, BigInt(abs(x)));
  return m;
}

// Sign convention: the entry of least nonzero absolute value is positive.
inline void normalize_sign(std::vector<BigInt>& v) {
  std::size_t at = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && (at == v.size() || abs(v[i]) < abs(v[at]))) at = i;
  if (at < v.size() && v[at] < 0)
    for (auto& x : v) x = -x;
}

// Short vector of the lattice spanned by `basis`: size-reduce pairwise, then
// search small integer combinations. Ties go to the lexicographically
// smallest normalized vector.
inline std::vector<BigInt> shortest_combination(IntMatrix basis) {
  auto norm2 = [](const std::vector<BigInt>& v) {
    BigInt s = 0;
    for (const auto& x : v) s += x * x;
    return s;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (int s : {1, -1}) {
          std::vector<BigInt> w = basis[i];
          for (std::size_t t = 0; t < w.size(); ++t) w[t] += s * basis[j][t];
          if (norm2(w) < norm2(basis[i])) {
            basis[i] = std::move(w);
            changed = true;
          }
        }
      }
    }
  }
  const std::size_t t = basis.size();
  long bound = 8;
  auto combos = [&](long b) {
    double c = 1;
    for (std::size_t i = 0; i < t; ++i) c *= static_cast<double>(2 * b + 1);
    return c;
  };
  while (bound > 1 && combos(bound) > 2e6) --bound;
  std::vector<long> coef(t, -bound);
  std::vector<BigInt> best;
  BigInt best_norm = -1;
  for (;;) {
    std::vector<BigInt> v(basis.front().size(), 0);
    for (std::size_t i = 0; i < t; ++i)
      if (coef[i] != 0)
        for (std::size_t s = 0; s < v.size(); ++s) v[s] += coef[i] * basis[i][s];
    if (std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x != 0; })) {
      normalize_sign(v);
      const BigInt m = max_norm(v);
      if (best_norm < 0 || m < best_norm || (m == best_norm && v < best)) {
        best = v;
        best_norm = m;
      }
    }
    std::size_t i = 0;
    while (i < t && coef[i] == bound) coef[i++] = -bound;
    if (i == t) break;
    ++coef[i];
  }
  return best;
}

}  // namespace detail

/// Exact dependence test; a returned witness has been replayed to 1.
template <class K>
DependenceResult<K> is_mult_dependent(const std::vector<RationalFunction<K>>& inputs) {
  DependenceResult<K> out;
  out.basis = gcdfree_basis(inputs);
  const std::size_t n = inputs.size();
  const auto& b = out.basis;
  const auto cons = detail::constant_rows(inputs.front().field(), b.constants);
  std::size_t slack = 0;
  for (const auto& m : cons.moduli)
    if (m != 0) ++slack;
  const std::size_t cols = n + slack;
  IntMatrix a;
  for (std::size_t j = 0; j < b.basis.size(); ++j) {
    std::vector<BigInt> row(cols, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = b.exponents[i][j];
    a.push_back(std::move(row));
  }
  std::size_t s = n;
  for (std::size_t r = 0; r < cons.rows.size(); ++r) {
    std::vector<BigInt> row(cols, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = cons.rows[r][i];
    if (cons.moduli[r] != 0) row[s++] = -cons.moduli[r];
    a.push_back(std::move(row));
  }
  IntMatrix kernel = integer_kernel(a, cols);
  for (auto& v : kernel) v.resize(n);
  out.rank = static_cast<unsigned>(n - kernel.size());
  if (kernel.empty()) return out;
  const auto w = detail::shortest_combination(kernel);
  for (const auto& x : w) {
    if (!fits_i64(x)) throw RefusedError("dependence: witness exponent out of range");
    out.witness.push_back(x.get_si());
  }
  const auto replay = power_product(inputs, out.witness);
  if (!(replay.den().is_one() && replay.num().is_one()))
    throw InvariantViolation("dependence: witness does not replay to 1");
  out.dependent = true;
  return out;
}

struct PsiSearchResult {
  long min_degree = 0;
  std::vector<long> argmin;
};

/// Least product_degree over |k_i| <= K with k_n != 0, over the first n iterates.
/// k and -k give the same degree, so only k_n > 0 is enumerated. Ties go to
/// the least sum |k_i|, then to the first in order (k_1 varying fastest).
template <class K>
PsiSearchResult psi_search(const RationalFunction<K>& f, unsigned n, long bound,
                           std::uint64_t max_degree = std::uint64_t{1} << 16) {
  if (f.degree() < 2) throw PreconditionError("psi_search: degree must be at least 2");
  if (n < 1 || bound < 1) throw PreconditionError("psi_search: n and K must be positive");
  if (ipow(BigInt(f.degree()), n) > BigInt(max_degree)) throw RefusedError("psi_search: iterate degree too large");
  const auto basis = gcdfree_basis(iterates(f, n));
  PsiSearchResult best;
  best.min_degree = -1;
  long best_l1 = 0;
  std::vector<long> k(n, -bound);
  k[n - 1] = 1;
  for (;;) {
    {
      const long deg = product_degree(basis, k);
      long l1 = 0;
      for (long x : k) l1 += std::abs(x);
      if (best.min_degree < 0 || deg < best.min_degree || (deg == best.min_degree && l1 < best_l1)) {
        best_l1 = l1;
        best.min_degree = deg;
        best.argmin = k;
      }
    }
    std::size_t i = 0;
    while (i < n && k[i] == bound) k[i++] = -bound;
    if (i == n) break;
    ++k[i];
  }
  return best;
}

}  // namespace iterdep

#endif  // ITERDEP_MDEP_HPP
