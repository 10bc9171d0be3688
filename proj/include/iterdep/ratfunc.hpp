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

// Rational functions g/h in lowest terms with monic h, composition with an
// explicit homogeneous decomposition, iteration and evaluation on P^1.

#ifndef ITERDEP_RATFUNC_HPP
#define ITERDEP_RATFUNC_HPP

#include <optional>
#include <string>

#include "iterdep/poly.hpp"
#include "iterdep/text.hpp"

namespace iterdep {

template <class K>
class RationalFunction {
 public:
  using Elem = typename K::Elem;

  // Reduces g/h: divides out the gcd, makes h monic. h must be nonzero.
  RationalFunction(Poly<K> g, Poly<K> h) : g_(std::move(g)), h_(std::move(h)) {
    if (h_.is_zero()) throw PreconditionError("rational function with zero denominator");
    const K& f = h_.field();
    if (g_.is_zero()) {
      h_ = Poly<K>::one(f);
      return;
    }
    Poly<K> c = gcd(g_, h_);
    if (c.degree() > 0) {
      g_ = div_exact(g_, c);
      h_ = div_exact(h_, c);
    }
    if (!h_.is_monic()) {
      const Elem inv = f.inv(h_.lead());
      g_ = scale(g_, inv);
      h_ = scale(h_, inv);
    }
  }
  explicit RationalFunction(Poly<K> g) : RationalFunction(g, Poly<K>::one(g.field())) {}

  static RationalFunction identity(const K& f) { return RationalFunction(Poly<K>::x(f)); }
  static RationalFunction constant(const K& f, Elem c) { return RationalFunction(Poly<K>::constant(f, c)); }

  const K& field() const { return g_.field(); }
  const Poly<K>& num() const { return g_; }
  const Poly<K>& den() const { return h_; }
  int degree() const { return std::max(std::max(g_.degree(), 0), h_.degree()); }
  bool is_constant() const { return degree() == 0; }
  bool is_polynomial() const { return h_.degree() == 0; }
  bool is_zero() const { return g_.is_zero(); }

  bool operator==(const RationalFunction& o) const { return g_ == o.g_ && h_ == o.h_; }

 private:
  Poly<K> g_, h_;
};

template <class K>
RationalFunction<K> operator*(const RationalFunction<K>& a, const RationalFunction<K>& b) {
  return RationalFunction<K>(a.num() * b.num(), a.den() * b.den());
}

template <class K>
RationalFunction<K> inverse(const RationalFunction<K>& a) {
  if (a.is_zero()) throw PreconditionError("inverse of the zero function");
  return RationalFunction<K>(a.den(), a.num());
}

// a^k for any integer k (a nonzero when k < 0).
template <class K>
RationalFunction<K> rf_pow(const RationalFunction<K>& a, long k) {
  const RationalFunction<K> base = k < 0 ? inverse(a) : a;
  const unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  return RationalFunction<K>(pow(base.num(), e), pow(base.den(), e));
}

template <class K>
struct CompositionTrace {
  int l = 0, s = 0;  // degree / valuation of u's numerator
  int m = 0, t = 0;  // degree / valuation of u's denominator
  int D = 0;
  Poly<K> qpart, rpart;
  int h_exponent = 0;  // m - l, on H
  int g_exponent = 0;  // s - t, on G
};

template <class K>
struct Composition {
  RationalFunction<K> value;
  std::optional<CompositionTrace<K>> trace;
};

/// u o F in lowest terms. With u = v/w and F = G/H,
///   u(F) = H^(m-l) G^(s-t) q / r,
///   q = sum_{i=0}^{l-s} a_{l-i} G^(l-s-i) H^i,  r likewise from w,
/// and G, H, q, r are pairwise coprime, so no cancellation is expected.
template <class K>
Composition<K> compose_traced(const RationalFunction<K>& u, const RationalFunction<K>& F) {
  if (F.is_constant()) throw PreconditionError("compose: inner function is constant");
  const K& f = u.field();
  if (u.is_constant()) return {u, std::nullopt};
  const Poly<K>& G = F.num();
  const Poly<K>& H = F.den();
  CompositionTrace<K> tr{.qpart = Poly<K>(f), .rpart = Poly<K>(f)};
  const Poly<K>& v = u.num();
  const Poly<K>& w = u.den();
  tr.l = v.degree();
  tr.s = static_cast<int>(valuation_at_zero(v));
  tr.m = w.degree();
  tr.t = static_cast<int>(valuation_at_zero(w));
  tr.D = std::max(tr.l, tr.m);
  // Homogeneous Horner: acc = acc*G + c_j * H^(top-j).
  auto homogeneous = [&](const Poly<K>& p, int top, int bottom) {
    Poly<K> acc = Poly<K>::constant(f, p.coeff(top));
    Poly<K> hp = Poly<K>::one(f);
    for (int j = top - 1; j >= bottom; --j) {
      hp = hp * H;
      acc = acc * G;
      const auto& c = p.coeffs()[j];
      if (!f.is_zero(c)) acc = acc + scale(hp, c);
    }
    return acc;
  };
  tr.qpart = homogeneous(v, tr.l, tr.s);
  tr.rpart = homogeneous(w, tr.m, tr.t);
  tr.h_exponent = tr.m - tr.l;
  tr.g_exponent = tr.s - tr.t;
  Poly<K> P = tr.qpart, Q = tr.rpart;
  if (tr.h_exponent > 0) P = P * pow(H, tr.h_exponent);
  if (tr.h_exponent < 0) Q = Q * pow(H, -tr.h_exponent);
  if (tr.g_exponent > 0) P = P * pow(G, tr.g_exponent);
  if (tr.g_exponent < 0) Q = Q * pow(G, -tr.g_exponent);
  if (gcd(P, Q).degree() > 0) throw InvariantViolation("compose: numerator and denominator share a factor");
  RationalFunction<K> value(std::move(P), std::move(Q));
  return {std::move(value), std::move(tr)};
}

template <class K>
RationalFunction<K> compose(const RationalFunction<K>& u, const RationalFunction<K>& F) {
  return compose_traced(u, F).value;
}

/// f^(k): f^(0) = X, f^(k) = f o f^(k-1).
template <class K>
RationalFunction<K> iterate(const RationalFunction<K>& f, unsigned k) {
  if (f.is_constant()) throw PreconditionError("iterate: constant function");
  RationalFunction<K> acc = RationalFunction<K>::identity(f.field());
  for (unsigned i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

/// f^(1), ..., f^(n).
template <class K>
std::vector<RationalFunction<K>> iterates(const RationalFunction<K>& f, unsigned n) {
  if (f.is_constant()) throw PreconditionError("iterate: constant function");
  std::vector<RationalFunction<K>> out;
  out.reserve(n);
  for (unsigned i = 0; i < n; ++i) out.push_back(i == 0 ? f : compose(f, out.back()));
  return out;
}

// A point of P^1: a field element, or nullopt for infinity.
template <class K>
using ProjectivePoint = std::optional<typename K::Elem>;

template <class K>
ProjectivePoint<K> eval_projective(const RationalFunction<K>& f, const ProjectivePoint<K>& p) {
  const K& k = f.field();
  const Poly<K>& g = f.num();
  const Poly<K>& h = f.den();
  if (!p) {
    if (g.degree() > h.degree()) return std::nullopt;
    if (g.degree() < h.degree()) return k.zero();
    return k.div(g.lead(), h.lead());
  }
  const auto hv = eval(h, *p);
  if (k.is_zero(hv)) return std::nullopt;
  return k.div(eval(g, *p), hv);
}

/// Ramification index of f at y: the multiplicity with which y appears in the
/// fibre over f(y).
template <class K>
unsigned local_multiplicity(const RationalFunction<K>& f, const ProjectivePoint<K>& y) {
  if (f.is_constant()) throw PreconditionError("local_multiplicity: constant function");
  const Poly<K>& g = f.num();
  const Poly<K>& h = f.den();
  const ProjectivePoint<K> c = eval_projective(f, y);
  if (y) {
    if (!c) return root_multiplicity(h, *y);
    return root_multiplicity(g - scale(h, *c), *y);
  }
  if (!c) return static_cast<unsigned>(g.degree() - h.degree());
  return static_cast<unsigned>(h.degree() - (g - scale(h, *c)).degree());
}

template <class K>
std::string format_ratfunc(const RationalFunction<K>& f) {
  const std::string num = format_poly(f.num());
  if (f.is_polynomial()) return num;
  auto wrap = [](const std::string& s, std::size_t terms) {
    return terms > 1 || s.find('/') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num, f.num().term_count()) + "/" + wrap(format_poly(f.den()), f.den().term_count());
}

template <class K>
RationalFunction<K> parse_ratfunc(const K& field, std::string_view text) {
  auto [g, h] = parse_fraction(field, text);
  if (h.is_zero()) throw ParseError("denominator is zero", 0);
  return RationalFunction<K>(std::move(g), std::move(h));
}

template <class K>
std::string format_point(const K& field, const ProjectivePoint<K>& p) {
  return p ? field.format(*p) : "inf";
}

}  // namespace iterdep

#endif  // ITERDEP_RATFUNC_HPP
