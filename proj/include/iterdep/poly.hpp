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

// Dense univariate polynomials over any field type from field.hpp.

#ifndef ITERDEP_POLY_HPP
#define ITERDEP_POLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "iterdep/field.hpp"

namespace iterdep {

template <class K>
class Poly {
 public:
  using Field = K;
  using Elem = typename K::Elem;

  explicit Poly(K field) : field_(std::move(field)) {}
  Poly(K field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const K& field, Elem c) { return Poly(field, {std::move(c)}); }
  static Poly one(const K& field) { return constant(field, field.one()); }
  static Poly monomial(const K& field, Elem c, std::size_t e) {
    std::vector<Elem> v(e + 1, field.zero());
    v[e] = std::move(c);
    return Poly(field, std::move(v));
  }
  static Poly x(const K& field) { return monomial(field, field.one(), 1); }

  const K& field() const { return field_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && field_.is_one(c_[0]); }
  bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Elem lead() const { return c_.empty() ? field_.zero() : c_.back(); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [&](const Elem& a) { return !field_.is_zero(a); }));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_;
  std::vector<Elem> c_;
};

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
  const K& f = a.field();
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<typename K::Elem> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(f.add(a.coeff(i), b.coeff(i)));
  return Poly<K>(f, std::move(r));
}

template <class K>
Poly<K> operator-(const Poly<K>& a) {
  const K& f = a.field();
  std::vector<typename K::Elem> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.push_back(f.neg(c));
  return Poly<K>(f, std::move(r));
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
  const K& f = a.field();
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<typename K::Elem> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(f.sub(a.coeff(i), b.coeff(i)));
  return Poly<K>(f, std::move(r));
}

template <class K>
Poly<K> scale(const Poly<K>& a, const typename K::Elem& s) {
  const K& f = a.field();
  std::vector<typename K::Elem> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.push_back(f.mul(c, s));
  return Poly<K>(f, std::move(r));
}

namespace detail {

template <class K, class E = typename K::Elem>
void mul_schoolbook(const K& f, const E* a, std::size_t na, const E* b, std::size_t nb, E* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
}

// out (length 2n-1, zero-initialised) += a*b for equal lengths n.
template <class K, class E = typename K::Elem>
void mul_karatsuba(const K& f, const E* a, const E* b, std::size_t n, E* out) {
  if (n <= 32) {
    mul_schoolbook(f, a, n, b, n, out);
    return;
  }
  const std::size_t h = n / 2, hi = n - h;
  std::vector<E> a01(hi, f.zero()), b01(hi, f.zero());
  for (std::size_t i = 0; i < hi; ++i) {
    a01[i] = i < h ? f.add(a[i], a[h + i]) : a[h + i];
    b01[i] = i < h ? f.add(b[i], b[h + i]) : b[h + i];
  }
  std::vector<E> lo(2 * h - 1, f.zero()), up(2 * hi - 1, f.zero()), mid(2 * hi - 1, f.zero());
  mul_karatsuba(f, a, b, h, lo.data());
  mul_karatsuba(f, a + h, b + h, hi, up.data());
  mul_karatsuba(f, a01.data(), b01.data(), hi, mid.data());
  for (std::size_t i = 0; i < lo.size(); ++i) mid[i] = f.sub(mid[i], lo[i]);
  for (std::size_t i = 0; i < up.size(); ++i) mid[i] = f.sub(mid[i], up[i]);
  for (std::size_t i = 0; i < lo.size(); ++i) out[i] = f.add(out[i], lo[i]);
  for (std::size_t i = 0; i < mid.size(); ++i) out[h + i] = f.add(out[h + i], mid[i]);
  for (std::size_t i = 0; i < up.size(); ++i) out[2 * h + i] = f.add(out[2 * h + i], up[i]);
}

}  // namespace detail

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
  const K& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly<K>(f);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<typename K::Elem> r(x.size() + y.size() - 1, f.zero());
  const std::size_t small = std::min(x.size(), y.size());
  if (small <= 32) {
    detail::mul_schoolbook(f, x.data(), x.size(), y.data(), y.size(), r.data());
  } else {
    // Split the longer operand into blocks of the shorter length.
    const auto& lng = x.size() >= y.size() ? x : y;
    const auto& sht = x.size() >= y.size() ? y : x;
    std::vector<typename K::Elem> block(small, f.zero()), part(2 * small - 1, f.zero());
    for (std::size_t off = 0; off < lng.size(); off += small) {
      const std::size_t len = std::min(small, lng.size() - off);
      std::fill(block.begin(), block.end(), f.zero());
      std::copy(lng.begin() + off, lng.begin() + off + len, block.begin());
      std::fill(part.begin(), part.end(), f.zero());
      detail::mul_karatsuba(f, block.data(), sht.data(), small, part.data());
      for (std::size_t i = 0; i < part.size() && off + i < r.size(); ++i)
        r[off + i] = f.add(r[off + i], part[i]);
    }
  }
  return Poly<K>(f, std::move(r));
}

template <class K>
Poly<K> shift_up(const Poly<K>& a, std::size_t e) {
  if (a.is_zero()) return a;
  std::vector<typename K::Elem> r(e, a.field().zero());
  r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly<K>(a.field(), std::move(r));
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  const K& f = a.field();
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(f), a};
  auto r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<typename K::Elem> q(r.size() - db, f.zero());
  const auto inv = f.inv(d.back());
  const bool monic = f.is_one(d.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    const auto c = monic ? r[i] : f.mul(r[i], inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, d[j]));
  }
  r.resize(db);
  return {Poly<K>(f, std::move(q)), Poly<K>(f, std::move(r))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

// a / b where b is known to divide a.
template <class K>
Poly<K> div_exact(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("div_exact: divisor does not divide");
  return q;
}

template <class K>
bool divides(const Poly<K>& b, const Poly<K>& a) {
  return (a % b).is_zero();
}

template <class K>
Poly<K> monic(const Poly<K>& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.lead()));
}

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd: both arguments are zero");
  while (!b.is_zero()) {
    Poly<K> r = monic(a % b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
struct XgcdResult {
  Poly<K> g, s, t;
};

template <class K>
XgcdResult<K> xgcd(const Poly<K>& a, const Poly<K>& b) {
  const K& f = a.field();
  if (a.is_zero() && b.is_zero()) throw PreconditionError("xgcd: both arguments are zero");
  Poly<K> r0 = a, r1 = b, s0 = Poly<K>::one(f), s1(f), t0(f), t1 = Poly<K>::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const auto inv = f.inv(r0.lead());
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

template <class K>
bool coprime(const Poly<K>& a, const Poly<K>& b) {
  return gcd(a, b).degree() == 0;
}

template <class K>
Poly<K> derivative(const Poly<K>& a) {
  const K& f = a.field();
  if (a.degree() < 1) return Poly<K>(f);
  std::vector<typename K::Elem> r;
  r.reserve(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    r.push_back(f.mul(f.from_int(static_cast<long long>(i)), a.coeffs()[i]));
  return Poly<K>(f, std::move(r));
}

template <class K>
typename K::Elem eval(const Poly<K>& a, const typename K::Elem& x) {
  const K& f = a.field();
  auto acc = f.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
  return acc;
}

// a(b(X)) by Horner.
template <class K>
Poly<K> compose(const Poly<K>& a, const Poly<K>& b) {
  const K& f = a.field();
  Poly<K> acc(f);
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    acc = acc * b + Poly<K>::constant(f, a.coeffs()[i]);
  return acc;
}

template <class K>
Poly<K> pow(const Poly<K>& a, unsigned long e) {
  return power(a, BigInt(e), Poly<K>::one(a.field()),
               [](const Poly<K>& x, const Poly<K>& y) { return x * y; });
}

template <class K>
Poly<K> powmod(const Poly<K>& a, const BigInt& e, const Poly<K>& m) {
  return power(a % m, e, Poly<K>::one(a.field()) % m,
               [&m](const Poly<K>& x, const Poly<K>& y) { return (x * y) % m; });
}

template <class K>
std::size_t valuation_at_zero(const Poly<K>& a) {
  if (a.is_zero()) throw PreconditionError("valuation_at_zero: zero polynomial");
  std::size_t i = 0;
  while (a.field().is_zero(a.coeffs()[i])) ++i;
  return i;
}

// Multiplicity of y as a root of a (a nonzero).
template <class K>
unsigned root_multiplicity(Poly<K> a, const typename K::Elem& y) {
  if (a.is_zero()) throw PreconditionError("root_multiplicity: zero polynomial");
  const K& f = a.field();
  const Poly<K> lin(f, {f.neg(y), f.one()});
  unsigned m = 0;
  for (;;) {
    auto [q, r] = divmod(a, lin);
    if (!r.is_zero()) return m;
    a = std::move(q);
    ++m;
  }
}

// Canonical order on polynomials over a finite field: degree first, then
// coefficients compared from the top by element index.
template <class K>
bool poly_less(const Poly<K>& a, const Poly<K>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const K& f = a.field();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const auto x = f.index(a.coeffs()[i]), y = f.index(b.coeffs()[i]);
    if (x != y) return x < y;
  }
  return false;
}

// The polynomial with the given position in the canonical order among
// polynomials of degree <= deg (index 0 is the zero polynomial).
template <class K>
Poly<K> poly_from_index(const K& f, std::uint64_t index, std::size_t len) {
  std::vector<typename K::Elem> c;
  c.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    c.push_back(f.from_index(index % f.size()));
    index /= f.size();
  }
  return Poly<K>(f, std::move(c));
}

// Replace each coefficient by its p-th root (coefficient-wise Frobenius inverse).
template <class K>
Poly<K> map_pth_root(const Poly<K>& a) {
  std::vector<typename K::Elem> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.push_back(a.field().pth_root(c));
  return Poly<K>(a.field(), std::move(r));
}

}  // namespace iterdep

#endif  // ITERDEP_POLY_HPP
