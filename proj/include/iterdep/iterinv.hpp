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

// Orbit invariants of a rational function f = g/h, detection of the shapes for
// which iterates can be multiplicatively dependent, and the resulting lower
// bound on the degree of power products of iterates.
//
// With f^(k) = g_k/h_k:
//   e    least k >= 1 with f^(k)(0) = 0       (0 is a zero of f^(k))
//   eps  least k >= 1 with f^(k)(0) = inf     (0 is a pole of f^(k))
//   mu   least k >= 1 with f^(k)(inf) = 0     (deg g_k < deg h_k)
//   nu   least k >= 1 with f^(k)(inf) = inf   (deg g_k > deg h_k)
// so all four come from the projective orbits of 0 and inf.

#ifndef ITERDEP_ITERINV_HPP
#define ITERDEP_ITERINV_HPP

#include <set>
#include <string>
#include <vector>

#include "iterdep/polyfactor.hpp"
#include "iterdep/ratfunc.hpp"

namespace iterdep {

class InvariantValue {
 public:
  enum class Kind { finite, infinite, unknown };

  static InvariantValue finite(std::uint64_t k) { return {Kind::finite, k}; }
  static InvariantValue infinite() { return {Kind::infinite, 0}; }
  // Not reached within `cutoff` steps; the true value is > cutoff.
  static InvariantValue unknown(std::uint64_t cutoff) { return {Kind::unknown, cutoff}; }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  bool is_unknown() const { return kind_ == Kind::unknown; }
  std::uint64_t value() const { return value_; }
  std::uint64_t cutoff() const { return value_; }

  // Whether n <= value (nullopt when an unknown value leaves it undecided).
  std::optional<bool> at_least(std::uint64_t n) const {
    switch (kind_) {
      case Kind::finite: return n <= value_;
      case Kind::infinite: return true;
      case Kind::unknown: if (n <= value_ + 1) return true; return std::nullopt;
    }
    return std::nullopt;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::finite: return std::to_string(value_);
      case Kind::infinite: return "inf";
      case Kind::unknown: return "unknown";
    }
    return "";
  }

  bool operator==(const InvariantValue&) const = default;

 private:
  InvariantValue(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::uint64_t value_;
};

// a < b, or nullopt when unknown values leave it undecided.
inline std::optional<bool> invariant_less(const InvariantValue& a, const InvariantValue& b) {
  if (a.is_infinite()) return false;
  if (a.is_finite()) return b.at_least(a.value() + 1);
  // a unknown: a > cutoff.
  if (b.is_finite() && b.value() <= a.cutoff() + 1) return false;
  return std::nullopt;
}

struct IterateProfile {
  InvariantValue e = InvariantValue::infinite(), epsilon = InvariantValue::infinite(),
                 mu = InvariantValue::infinite(), nu = InvariantValue::infinite();
  std::optional<BigInt> delta;  // |deg g_k - deg h_k| at k = min(mu, nu)
  std::optional<BigInt> T;      // valuation of h_eps at 0
  int d = 0;
};

struct OrbitOptions {
  std::uint64_t cutoff = 64;                     // orbit steps over Q
  std::uint64_t finite_step_guard = 1u << 26;    // orbit steps over finite fields
  std::size_t bit_guard = 65536;                 // size of iterates over Q
};

namespace detail {

struct OrbitHits {
  InvariantValue zero = InvariantValue::infinite();
  InvariantValue inf = InvariantValue::infinite();
};

// Escape radius of a polynomial of degree >= 2 over Q: for |x| > R the orbit
// grows strictly in absolute value, so it never comes back to 0.
inline BigRational escape_radius(const Poly<Rationals>& g) {
  BigRational s = 1;
  for (int i = 0; i < g.degree(); ++i) s += abs(g.coeffs()[i]);
  BigRational r = s / abs(g.lead());
  return r < 1 ? BigRational(1) : r;
}

template <class K>
OrbitHits orbit_hits(const RationalFunction<K>& f, const ProjectivePoint<K>& start, const OrbitOptions& opt) {
  const K& k = f.field();
  OrbitHits out;
  std::optional<std::uint64_t> zero_at, inf_at;
  auto note = [&](const ProjectivePoint<K>& x, std::uint64_t step) {
    if (!x) {
      if (!inf_at) inf_at = step;
    } else if (k.is_zero(*x)) {
      if (!zero_at) zero_at = step;
    }
  };
  auto finish = [&](bool proven, std::uint64_t steps) {
    out.zero = zero_at ? InvariantValue::finite(*zero_at)
                       : (proven ? InvariantValue::infinite() : InvariantValue::unknown(steps));
    out.inf = inf_at ? InvariantValue::finite(*inf_at)
                     : (proven ? InvariantValue::infinite() : InvariantValue::unknown(steps));
    return out;
  };
  if constexpr (K::is_finite) {
    // Brent: the hare walks x_1, x_2, ... one step at a time and stops once
    // the cycle length is known, after covering every point of the orbit.
    ProjectivePoint<K> tortoise = start;
    ProjectivePoint<K> hare = eval_projective(f, start);
    std::uint64_t step = 1, power = 1, lam = 1;
    note(hare, step);
    while (tortoise != hare) {
      if (zero_at && inf_at) break;
      if (step >= opt.finite_step_guard) return finish(false, step);
      if (power == lam) {
        tortoise = hare;
        power *= 2;
        lam = 0;
      }
      hare = eval_projective(f, hare);
      ++lam;
      ++step;
      note(hare, step);
    }
    return finish(true, step);
  } else {
    std::set<ProjectivePoint<K>> seen{start};
    const bool escape = f.is_polynomial() && f.degree() >= 2;
    const BigRational radius = escape ? escape_radius(f.num()) : BigRational(0);
    ProjectivePoint<K> x = start;
    for (std::uint64_t step = 1; step <= opt.cutoff; ++step) {
      x = eval_projective(f, x);
      note(x, step);
      if (zero_at && inf_at) return finish(true, step);
      if (!seen.insert(x).second) return finish(true, step);
      if (x && escape && abs(*x) > radius) return finish(true, step);
      if (x && (mpz_sizeinbase(x->get_num_mpz_t(), 2) > opt.bit_guard ||
                mpz_sizeinbase(x->get_den_mpz_t(), 2) > opt.bit_guard))
        return finish(false, step);
    }
    return finish(false, opt.cutoff);
  }
}

// Ramification of f^(steps) at x: product of local multiplicities along the orbit.
template <class K>
BigInt orbit_multiplicity(const RationalFunction<K>& f, ProjectivePoint<K> x, std::uint64_t steps) {
  BigInt acc = 1;
  for (std::uint64_t i = 0; i < steps; ++i) {
    acc *= local_multiplicity(f, x);
    x = eval_projective(f, x);
  }
  return acc;
}

}  // namespace detail

template <class K>
IterateProfile orbit_invariants(const RationalFunction<K>& f, const OrbitOptions& opt = {}) {
  if (f.degree() < 1) throw PreconditionError("orbit_invariants: f is constant");
  IterateProfile p;
  p.d = f.degree();
  const auto from_zero = detail::orbit_hits(f, ProjectivePoint<K>(f.field().zero()), opt);
  const auto from_inf = detail::orbit_hits(f, ProjectivePoint<K>(), opt);
  p.e = from_zero.zero;
  p.epsilon = from_zero.inf;
  p.mu = from_inf.zero;
  p.nu = from_inf.inf;
  std::optional<std::uint64_t> k;
  if (p.mu.is_finite()) k = p.mu.value();
  if (p.nu.is_finite() && (!k || p.nu.value() < *k)) k = p.nu.value();
  // min(mu, nu) is only known when the other one cannot be smaller.
  if (k && ((p.mu.is_unknown() && p.mu.cutoff() < *k) || (p.nu.is_unknown() && p.nu.cutoff() < *k))) k.reset();
  if (k) p.delta = detail::orbit_multiplicity(f, ProjectivePoint<K>(), *k);
  if (p.epsilon.is_finite())
    p.T = detail::orbit_multiplicity(f, ProjectivePoint<K>(f.field().zero()), p.epsilon.value());
  return p;
}

struct LowestTerms {
  std::size_t S = 0, T = 0;
};

/// (S_k, T_k) for k = 1..k_max: valuations at 0 of g_k and h_k.
template <class K>
std::vector<LowestTerms> lowest_term_profile(const RationalFunction<K>& f, unsigned k_max) {
  std::vector<LowestTerms> out;
  for (const auto& it : iterates(f, k_max))
    out.push_back({it.num().is_zero() ? 0 : valuation_at_zero(it.num()), valuation_at_zero(it.den())});
  return out;
}

/// Entry [l-1][k-1] (l < k) records a nonconstant gcd between the iterates'
/// numerators/denominators.
struct SharedFactorMatrix {
  unsigned n = 0;
  std::vector<std::vector<bool>> zero_zero, pole_pole, pole_zero, zero_pole;
};

template <class K>
SharedFactorMatrix shared_factor_matrix(const RationalFunction<K>& f, unsigned n) {
  if (f.degree() < 2) throw PreconditionError("shared_factor_matrix: degree must be at least 2");
  const auto it = iterates(f, n);
  SharedFactorMatrix m;
  m.n = n;
  const std::vector<std::vector<bool>> blank(n, std::vector<bool>(n, false));
  m.zero_zero = m.pole_pole = m.pole_zero = m.zero_pole = blank;
  auto share = [](const auto& a, const auto& b) { return gcd(a, b).degree() > 0; };
  for (unsigned l = 0; l < n; ++l) {
    for (unsigned k = l + 1; k < n; ++k) {
      m.zero_zero[l][k] = share(it[l].num(), it[k].num());
      m.pole_pole[l][k] = share(it[l].den(), it[k].den());
      m.pole_zero[l][k] = share(it[l].den(), it[k].num());
      m.zero_pole[l][k] = share(it[l].num(), it[k].den());
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Exceptional shapes.

enum class ExceptionalTag { none, monomial, frobenius_binomial, conjugate_to_inv_power, frobenius_moebius, polynomial_type };

inline const char* tag_name(ExceptionalTag t) {
  switch (t) {
    case ExceptionalTag::none: return "None";
    case ExceptionalTag::monomial: return "Monomial";
    case ExceptionalTag::frobenius_binomial: return "FrobeniusBinomial";
    case ExceptionalTag::conjugate_to_inv_power: return "ConjugateToInvPower";
    case ExceptionalTag::frobenius_moebius: return "FrobeniusMoebius";
    case ExceptionalTag::polynomial_type: return "PolynomialType";
  }
  return "";
}

struct ExceptionalStatus {
  ExceptionalTag tag = ExceptionalTag::none;
  bool separable = true;
  // FrobeniusBinomial: a X^(p^ell) + b.  FrobeniusMoebius: L(X^(p^ell)).
  std::string a, b, L;
  unsigned ell = 0;
  // ConjugateToInvPower: the totally ramified 2-cycle. A conjugate pair of
  // quadratic points is reported through its minimal polynomial.
  std::string alpha, beta;
};

/// Hypotheses shared by the degree bound and the independence statement:
/// degree >= 2 and none of the excluded shapes.
inline bool is_admissible(const ExceptionalStatus& s) {
  return s.tag == ExceptionalTag::none || s.tag == ExceptionalTag::polynomial_type;
}

namespace detail {

// ell >= 1 with d = p^ell, or 0.
inline unsigned frobenius_exponent(std::uint64_t p, int d) {
  if (p == 0 || d < 2) return 0;
  unsigned ell = 0;
  std::uint64_t v = static_cast<std::uint64_t>(d);
  while (v % p == 0) {
    v /= p;
    ++ell;
  }
  return v == 1 ? ell : 0;
}

template <class K>
bool supported_on(const Poly<K>& a, int lo, int hi) {
  for (int i = 0; i <= a.degree(); ++i)
    if (i != lo && i != hi && !a.field().is_zero(a.coeffs()[i])) return false;
  return true;
}

template <class K>
Poly<K> wronskian(const Poly<K>& g, const Poly<K>& h) {
  return derivative(g) * h - g * derivative(h);
}

// Is {alpha, f(alpha)} a 2-cycle with f totally ramified at both points?
template <class K>
bool totally_ramified_two_cycle(const RationalFunction<K>& f, const ProjectivePoint<K>& alpha) {
  const unsigned d = static_cast<unsigned>(f.degree());
  const ProjectivePoint<K> beta = eval_projective(f, alpha);
  if (beta == alpha) return false;
  if (eval_projective(f, beta) != alpha) return false;
  return local_multiplicity(f, alpha) == d && local_multiplicity(f, beta) == d;
}

// Same test for the pair of roots of a monic squarefree quadratic a, done in
// A = K[X]/(a): with x the class of X and c = f(x), require c to be the other
// root (c = -a_1 - x) and g(Y) - c h(Y) = lambda (Y - x)^d in A[Y].
template <class K>
bool quadratic_two_cycle(const RationalFunction<K>& f, const Poly<K>& a) {
  const K& k = f.field();
  const unsigned d = static_cast<unsigned>(f.degree());
  using P = Poly<K>;
  const P x = P::x(k) % a;
  auto mulA = [&](const P& u, const P& v) { return (u * v) % a; };
  const P hx = compose(f.den(), x) % a;
  auto inv = xgcd(hx, a);
  if (inv.g.degree() != 0) return false;
  const P c = mulA(compose(f.num(), x) % a, inv.s % a);
  const P other = (-x) - P::constant(k, a.coeff(1));
  if (!(c == other % a)) return false;
  if (c == x) return false;
  // Coefficients of g(Y) - c h(Y) over A.
  std::vector<P> G(d + 1, P(k));
  for (unsigned i = 0; i <= d; ++i)
    G[i] = (P::constant(k, f.num().coeff(i)) - scale(c, f.den().coeff(i))) % a;
  const P lambda = G[d];
  if (xgcd(lambda, a).g.degree() != 0) return false;
  // lambda * (Y - x)^d by repeated multiplication.
  std::vector<P> acc{lambda};
  for (unsigned step = 0; step < d; ++step) {
    std::vector<P> next(acc.size() + 1, P(k));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = next[i + 1] + acc[i];
      next[i] = (next[i] - mulA(acc[i], x)) % a;
    }
    acc = std::move(next);
  }
  for (unsigned i = 0; i <= d; ++i)
    if (!(acc[i] % a == G[i])) return false;
  return true;
}

template <class K>
std::optional<std::pair<std::string, std::string>> find_inv_power_cycle(const RationalFunction<K>& f) {
  const K& k = f.field();
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Poly<K>> linear, quadratic;
  if constexpr (K::is_finite) {
    // Deflate f = phi(X^(p^ell)) until phi is separable; a totally ramified
    // point alpha of f gives the ramified point alpha^(p^ell) of phi, whose
    // degree over K is at most 2, so it is a root of a small factor of W_phi.
    Poly<K> g = f.num(), h = f.den();
    unsigned ell = 0;
    const std::uint64_t p = k.characteristic();
    while (wronskian(g, h).is_zero()) {
      auto deflate = [&](const Poly<K>& a) {
        std::vector<typename K::Elem> c;
        for (std::size_t i = 0; i < a.coeffs().size(); i += p) c.push_back(a.coeffs()[i]);
        return Poly<K>(k, std::move(c));
      };
      g = deflate(g);
      h = deflate(h);
      ++ell;
    }
    const Poly<K> w = wronskian(g, h);
    for (const auto& fp : factor(w).factors) {
      if (fp.factor.degree() > 2) continue;
      Poly<K> a = fp.factor;
      for (unsigned i = 0; i < ell; ++i) a = map_pth_root(a);
      (a.degree() == 1 ? linear : quadratic).push_back(a);
    }
  } else {
    // Characteristic 0: a point of total ramification is a root of W of
    // multiplicity exactly d - 1, and at most two such finite points exist.
    for (const auto& fp : squarefree_decomposition(wronskian(f.num(), f.den()))) {
      if (fp.multiplicity != d - 1) continue;
      if (fp.factor.degree() == 1) linear.push_back(fp.factor);
      if (fp.factor.degree() == 2) quadratic.push_back(fp.factor);
    }
  }
  for (const auto& a : linear) {
    const ProjectivePoint<K> alpha = k.neg(a.coeff(0));
    if (totally_ramified_two_cycle(f, alpha))
      return std::make_pair(format_point(k, alpha), format_point(k, eval_projective(f, alpha)));
  }
  if (totally_ramified_two_cycle(f, ProjectivePoint<K>()))
    return std::make_pair(std::string("inf"), format_point(k, eval_projective(f, ProjectivePoint<K>())));
  for (const auto& a : quadratic) {
    if (quadratic_two_cycle(f, a)) {
      const std::string s = "root of " + format_poly(a);
      return std::make_pair(s, "conjugate " + s);
    }
  }
  return std::nullopt;
}

}  // namespace detail

template <class K>
ExceptionalStatus classify_exceptional(const RationalFunction<K>& f) {
  if (f.degree() < 2) throw PreconditionError("classify_exceptional: degree must be at least 2");
  const K& k = f.field();
  const Poly<K>& g = f.num();
  const Poly<K>& h = f.den();
  const int d = f.degree();
  ExceptionalStatus s;
  s.separable = !detail::wronskian(g, h).is_zero();
  const unsigned ell = detail::frobenius_exponent(k.characteristic(), d);
  if (f.is_polynomial() && g.term_count() == 1) {
    s.tag = ExceptionalTag::monomial;
    return s;
  }
  if (f.is_polynomial() && ell > 0 && g.term_count() == 2 && detail::supported_on(g, 0, d)) {
    s.tag = ExceptionalTag::frobenius_binomial;
    s.a = k.format(g.lead());
    s.b = k.format(g.coeff(0));
    s.ell = ell;
    return s;
  }
  if (ell > 0 && detail::supported_on(g, 0, d) && detail::supported_on(h, 0, d)) {
    s.tag = ExceptionalTag::frobenius_moebius;
    s.ell = ell;
    const RationalFunction<K> L(Poly<K>(k, {g.coeff(0), g.coeff(d)}), Poly<K>(k, {h.coeff(0), h.coeff(d)}));
    s.L = format_ratfunc(L);
    return s;
  }
  if (!f.is_polynomial()) {
    if (auto cyc = detail::find_inv_power_cycle(f)) {
      s.tag = ExceptionalTag::conjugate_to_inv_power;
      s.alpha = cyc->first;
      s.beta = cyc->second;
      return s;
    }
  }
  s.tag = f.is_polynomial() ? ExceptionalTag::polynomial_type : ExceptionalTag::none;
  return s;
}

// ---------------------------------------------------------------------------
// Degree bound for power products of iterates.

struct PsiBound {
  unsigned n = 0;
  std::string branch;
  unsigned j = 0;
  BigInt bound;
};

template <class K>
PsiBound psi_lower_bound(const RationalFunction<K>& f, unsigned n, const IterateProfile& p,
                         const ExceptionalStatus& status) {
  if (n < 1) throw PreconditionError("psi_lower_bound: n must be positive");
  if (f.degree() < 2) throw PreconditionError("psi_lower_bound: degree must be at least 2");
  if (!is_admissible(status))
    throw PreconditionError(std::string("psi_lower_bound: f is excluded (") + tag_name(status.tag) + ")");
  auto need = [](std::optional<bool> v, const char* what) {
    if (!v) throw RefusedError(std::string("psi_lower_bound: ") + what + " is unknown at the orbit cutoff");
    return *v;
  };
  PsiBound out;
  out.n = n;
  auto done = [&](std::string label, unsigned j) {
    out.branch = std::move(label);
    out.j = j;
    out.bound = ipow(BigInt(p.d), n - j);
    return out;
  };
  if (f.is_polynomial()) {
    if (need(p.e.at_least(n), "e")) return done("case-i, n<=e", 0);
    return done("case-i, n>e", static_cast<unsigned>(p.e.value()));
  }
  const int dg = f.num().degree(), dh = f.den().degree();
  const std::string c = ((dg > dh && dh >= 1) || (1 <= dg && dg < dh)) ? "case-ii" : "case-iii";
  const bool below_mu = need(p.mu.at_least(n + 1), "mu");
  const bool below_nu = below_mu ? need(p.nu.at_least(n + 1), "nu") : false;
  if (below_mu && below_nu) return done(c + ", n<min(mu,nu)", 0);
  // n >= min(mu, nu), so the smaller of the two is finite and known.
  const bool nu_first = need(invariant_less(p.nu, p.mu), "nu vs mu");
  if (nu_first) return done(c + ", nu<mu", static_cast<unsigned>(p.nu.value()));
  if (p.epsilon.is_infinite()) return done(c + ", mu<nu, eps=inf", 0);
  if (need(p.epsilon.at_least(n), "eps")) return done(c + ", mu<nu, n<=eps", 0);
  // deg h_mu = d^mu and deg g_mu = d^mu - delta.
  if (!p.delta) throw RefusedError("psi_lower_bound: delta is unknown");
  const BigInt deg_g_mu = ipow(BigInt(p.d), p.mu.value()) - *p.delta;
  if (deg_g_mu >= 1) return done(c + ", mu<nu, n>eps, deg g_mu>=1", static_cast<unsigned>(p.mu.value()));
  return done(c + ", mu<nu, n>eps, deg g_mu=0", static_cast<unsigned>(p.epsilon.value()));
}

}  // namespace iterdep

#endif  // ITERDEP_ITERINV_HPP
