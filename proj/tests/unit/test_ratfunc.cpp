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


#include "doctest.h"

#include "../support/oracles.hpp"
#include "iterdep/iterinv.hpp"

using namespace iterdep;

namespace {

const Rationals QQ;
const PrimeField F2(2), F3(3), F5(5);

template <class K>
RationalFunction<K> R(const K& k, const char* s) { return parse_ratfunc(k, s); }

}  // namespace

TEST_CASE("reduce examples") {
  const auto a = R(QQ, "(X^2-1)/(X-1)");
  CHECK(format_ratfunc(a) == "X+1");
  CHECK(a.den().is_one());
  const auto b = RationalFunction<Rationals>(parse_poly(QQ, "2X"), parse_poly(QQ, "4"));
  CHECK(format_ratfunc(b) == "1/2X");
  const auto c = R(F2, "(X^2+1)/X^2");
  CHECK(format_ratfunc(c) == "(X^2+1)/X^2");
  CHECK_THROWS_AS(R(QQ, "X/0"), ParseError);
  CHECK_THROWS_AS(RationalFunction<Rationals>(parse_poly(QQ, "X"), Poly<Rationals>(QQ)), PreconditionError);
}

TEST_CASE("compose examples") {
  const auto f = R(F2, "(X^2+1)/X^2");
  CHECK(compose(f, f) == R(F2, "1/(X^4+1)"));
  const auto g = R(QQ, "(X^2+1)/X");
  const auto gg = compose(g, g);
  CHECK(gg == R(QQ, "(X^4+3X^2+1)/(X^3+X)"));
  CHECK(coprime(gg.num(), gg.den()));
  CHECK(compose(RationalFunction<Rationals>::identity(QQ), g) == g);
  CHECK_THROWS_AS(compose(g, R(QQ, "3")), PreconditionError);
  const auto c = compose_traced(R(QQ, "5"), g);
  CHECK_FALSE(c.trace.has_value());
  CHECK(c.value == R(QQ, "5"));
}

TEST_CASE("iterate examples") {
  const auto f = R(F2, "(X^2+1)/X^2");
  CHECK(iterate(f, 3) == R(F2, "X^8"));
  CHECK(iterate(f, 0) == RationalFunction<PrimeField>::identity(F2));
  const auto p = R(QQ, "X^2+1");
  const auto p3 = iterate(p, 3);
  CHECK(p3 == R(QQ, "((X^2+1)^2+1)^2+1"));
  CHECK(p3.degree() == 8);
}

TEST_CASE("eval_projective examples") {
  const auto f = R(F2, "(X^2+1)/X^2");
  CHECK_FALSE(eval_projective(f, ProjectivePoint<PrimeField>(0)).has_value());
  CHECK(eval_projective(f, ProjectivePoint<PrimeField>()) == ProjectivePoint<PrimeField>(1));
  CHECK(eval_projective(R(F3, "1/(X^2+1)"), ProjectivePoint<PrimeField>()) == ProjectivePoint<PrimeField>(0));
}

TEST_CASE("ratfunc text round-trips") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto f = oracle::random_function(QQ, 1 + i % 4, rng);
    CHECK(parse_ratfunc(QQ, format_ratfunc(f)) == f);
    const auto g = oracle::random_function(F5, 1 + i % 4, rng);
    CHECK(parse_ratfunc(F5, format_ratfunc(g)) == g);
  }
}

namespace {

template <class K>
void check_composition_laws(const K& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const auto u = oracle::random_function(k, 1 + static_cast<int>(rng() % 4), rng);
    const auto F = oracle::random_function(k, 1 + static_cast<int>(rng() % 4), rng);
    const auto w = oracle::random_function(k, 1 + static_cast<int>(rng() % 2), rng);
    const auto c = compose_traced(u, F);
    REQUIRE(c.trace);
    const auto& tr = *c.trace;
    CHECK(c.value.degree() == u.degree() * F.degree());
    CHECK(coprime(F.num(), F.den()));
    CHECK(coprime(tr.qpart, tr.rpart));
    CHECK(coprime(tr.qpart, F.num()));
    CHECK(coprime(tr.qpart, F.den()));
    CHECK(coprime(tr.rpart, F.num()));
    CHECK(coprime(tr.rpart, F.den()));
    CHECK(tr.l >= tr.s);
    CHECK(tr.m >= tr.t);
    const int dG = F.num().degree(), dH = F.den().degree(), dF = F.degree();
    if (dG != dH) {
      // With deg G != deg H no leading terms cancel in q and r, so the
      // reduced numerator is H^(D-l) G^s q and the denominator H^(D-m) G^t r.
      CHECK(c.value.num().degree() == dH * (tr.D - tr.l) + dG * tr.s + dF * (tr.l - tr.s));
      CHECK(c.value.den().degree() == dH * (tr.D - tr.m) + dG * tr.t + dF * (tr.m - tr.t));
    }
    CHECK(compose(compose(u, F), w) == compose(u, compose(F, w)));
  }
}

}  // namespace

TEST_CASE("composition multiplies degrees and follows the trace") {
  check_composition_laws(F2, 1);
  check_composition_laws(F3, 2);
  check_composition_laws(F5, 3);
  check_composition_laws(QQ, 4);
}

TEST_CASE("iterate(f, a+b) = iterate(f, a) o iterate(f, b)") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = oracle::random_function(F3, 2, rng);
    const unsigned a = rng() % 3, b = rng() % 3;
    CHECK(iterate(f, a + b) == compose(iterate(f, a), iterate(f, b)));
  }
}

TEST_CASE("orbit invariants examples") {
  const auto f = R(F2, "(X^2+1)/X^2");
  const auto p = orbit_invariants(f);
  CHECK(p.epsilon == InvariantValue::finite(1));
  CHECK(p.mu == InvariantValue::finite(2));
  CHECK(p.e == InvariantValue::finite(3));
  CHECK(p.nu == InvariantValue::finite(3));
  CHECK(p.delta == BigInt(4));
  CHECK(p.T == BigInt(2));
  const auto q = orbit_invariants(R(QQ, "X^2+X"));
  CHECK(q.e == InvariantValue::finite(1));
  CHECK(q.epsilon.is_infinite());
  CHECK(q.mu.is_infinite());
  CHECK(q.nu == InvariantValue::finite(1));
  const auto r = orbit_invariants(R(F3, "1/(X^2+1)"));
  CHECK(r.mu == InvariantValue::finite(1));
  CHECK(r.e.is_infinite());
  CHECK(r.epsilon.is_infinite());
  CHECK(r.nu.is_infinite());
  CHECK(r.delta == BigInt(2));
  CHECK_FALSE(r.T.has_value());
  CHECK_THROWS_AS(orbit_invariants(R(QQ, "7")), PreconditionError);
}

TEST_CASE("orbit invariants over Q: escape certificates and cutoffs") {
  // 0 -> 1 -> 2 -> 5 -> ... escapes.
  const auto a = orbit_invariants(R(QQ, "X^2+1"));
  CHECK(a.e.is_infinite());
  // Small leading coefficient: the orbit of 0 is 0 -> 1 -> 3/2 -> ... and returns nowhere.
  const auto b = orbit_invariants(R(QQ, "1/8X^2+1"));
  CHECK_FALSE(b.e.is_finite());
  // X^2 - 1: 0 -> -1 -> 0.
  CHECK(orbit_invariants(R(QQ, "X^2-1")).e == InvariantValue::finite(2));
  // Non-polynomial with a wandering orbit: no certificate, cutoff reported.
  OrbitOptions opt;
  opt.cutoff = 10;
  const auto c = orbit_invariants(R(QQ, "(2X^2+1)/(X^2+1)"), opt);
  CHECK(c.e == InvariantValue::unknown(10));
  CHECK(c.e.to_string() == "unknown");
}

TEST_CASE("orbit invariants agree with explicit iterates") {
  std::mt19937_64 rng(17);
  for (const PrimeField& k : {F2, F3, F5}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto f = oracle::random_function(k, 2 + trial % 2, rng);
      const auto p = orbit_invariants(f);
      const unsigned n = 6;
      const auto d = oracle::iterate_data(f, n);
      auto first = [&](auto pred) -> InvariantValue {
        for (unsigned j = 1; j <= n; ++j)
          if (pred(j)) return InvariantValue::finite(j);
        return InvariantValue::unknown(n);
      };
      auto agree = [&](const InvariantValue& v, const InvariantValue& w) {
        if (w.is_finite()) return v == w;
        return !v.is_finite() || v.value() > n;
      };
      CHECK(agree(p.e, first([&](unsigned j) { return d.zero_at_zero(j); })));
      CHECK(agree(p.epsilon, first([&](unsigned j) { return d.pole_at_zero(j); })));
      CHECK(agree(p.mu, first([&](unsigned j) { return d.deg_g[j - 1] < d.deg_h[j - 1]; })));
      CHECK(agree(p.nu, first([&](unsigned j) { return d.deg_g[j - 1] > d.deg_h[j - 1]; })));
      if (p.epsilon.is_finite() && p.mu.is_finite()) CHECK(p.e.value() == p.epsilon.value() + p.mu.value());
      const auto lt = lowest_term_profile(f, n);
      for (unsigned j = 0; j < n; ++j) {
        CHECK(lt[j].S == d.S[j]);
        CHECK(lt[j].T == d.T[j]);
      }
      CHECK(oracle::closed_form_mismatches(d, p, n) == 0);
    }
  }
}

TEST_CASE("lowest_term_profile examples") {
  const auto lt = lowest_term_profile(R(F2, "(X^2+1)/X^2"), 4);
  CHECK(lt[0].S == 0);
  CHECK(lt[1].S == 0);
  CHECK(lt[2].S == 8);
  CHECK(lt[3].T == 16);
  for (const auto& v : lowest_term_profile(R(QQ, "X^3-2X+1"), 3)) CHECK(v.T == 0);
}

TEST_CASE("shared_factor_matrix examples and predicate tables") {
  const auto f = R(F2, "(X^2+1)/X^2");
  const auto m = shared_factor_matrix(f, 4);
  CHECK(m.zero_zero[0][3]);
  const auto g = shared_factor_matrix(R(QQ, "X^2+1"), 4);
  for (unsigned l = 0; l < 4; ++l)
    for (unsigned k = 0; k < 4; ++k) {
      CHECK_FALSE(g.zero_zero[l][k]);
      CHECK_FALSE(g.pole_pole[l][k]);
      CHECK_FALSE(g.pole_zero[l][k]);
      CHECK_FALSE(g.zero_pole[l][k]);
    }
  std::mt19937_64 rng(4);
  for (const PrimeField& k : {F2, F3, F5}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto h = oracle::random_function(k, 2 + trial % 2, rng);
      const unsigned n = 5;
      const auto mat = shared_factor_matrix(h, n);
      const auto tables = oracle::predicate_tables(oracle::iterate_data(h, n), orbit_invariants(h), n);
      CHECK(mat.zero_zero == tables.zero_zero);
      CHECK(mat.pole_pole == tables.pole_pole);
      CHECK(mat.pole_zero == tables.pole_zero);
      CHECK(mat.zero_pole == tables.zero_pole);
    }
  }
}

TEST_CASE("zero-pole predicate needs the eps-only case") {
  // eps = 1 and mu = inf: zeros of f^(1) are poles of f^(2), which the
  // congruence k = l - mu (mod e) cannot express.
  const auto f = R(QQ, "(X^2+1)/X");
  const auto p = orbit_invariants(f);
  CHECK(p.epsilon == InvariantValue::finite(1));
  CHECK(p.mu.is_infinite());
  CHECK(shared_factor_matrix(f, 2).zero_pole[0][1]);
}

TEST_CASE("classify_exceptional examples") {
  CHECK(classify_exceptional(R(QQ, "3X^4")).tag == ExceptionalTag::monomial);
  const auto s = classify_exceptional(R(F2, "(X^2+1)/X^2"));
  CHECK(s.tag == ExceptionalTag::frobenius_moebius);
  CHECK(s.L == "(X+1)/X");
  CHECK(s.ell == 1);
  CHECK_FALSE(s.separable);
  const auto c = classify_exceptional(R(QQ, "(-X^2-2X)/(X^2+2X+1)"));
  CHECK(c.tag == ExceptionalTag::conjugate_to_inv_power);
  CHECK(c.alpha == "-1");
  CHECK(c.beta == "inf");
  const auto b = classify_exceptional(R(F3, "2X^3+1"));
  CHECK(b.tag == ExceptionalTag::frobenius_binomial);
  CHECK(b.a == "2");
  CHECK(b.b == "1");
  CHECK(classify_exceptional(R(QQ, "X^2+1")).tag == ExceptionalTag::polynomial_type);
  CHECK(classify_exceptional(R(QQ, "(X^2+1)/(X+3)")).tag == ExceptionalTag::none);
  CHECK_THROWS_AS(classify_exceptional(R(QQ, "(X+1)/X")), PreconditionError);
}

TEST_CASE("inverse-power conjugates are detected over Q") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    // psi^-1 o (a / X^d) o psi with psi = (pX + q)/(rX + s).
    const long a = 1 + trial % 3, pp = c(rng), qq = c(rng), rr = c(rng), ss = c(rng);
    if (pp * ss - qq * rr == 0) continue;
    const unsigned d = 2 + trial % 3;
    const RationalFunction<Rationals> psi(Poly<Rationals>(QQ, {BigRational(qq), BigRational(pp)}),
                                          Poly<Rationals>(QQ, {BigRational(ss), BigRational(rr)}));
    const RationalFunction<Rationals> psi_inv(Poly<Rationals>(QQ, {BigRational(-qq), BigRational(ss)}),
                                              Poly<Rationals>(QQ, {BigRational(pp), BigRational(-rr)}));
    const RationalFunction<Rationals> inv_power(Poly<Rationals>::constant(QQ, BigRational(a)),
                                                Poly<Rationals>::monomial(QQ, BigRational(1), d));
    const auto f = compose(psi_inv, compose(inv_power, psi));
    REQUIRE(f.degree() == static_cast<int>(d));
    CHECK(classify_exceptional(f).tag == ExceptionalTag::conjugate_to_inv_power);
  }
  // Conjugating 1/X^2 by (X - i)/(X + i) gives a rational f whose cycle is {i, -i}.
  const auto q = classify_exceptional(R(QQ, "(1-X^2)/(2X)"));
  CHECK(q.tag == ExceptionalTag::conjugate_to_inv_power);
  CHECK(q.alpha == "root of X^2+1");
}

TEST_CASE("inverse-power detection agrees with point enumeration over F_2, F_3") {
  for (const PrimeField& k : {F2, F3}) {
    for (int d = 2; d <= 3; ++d) {
      if (k.size() == 3 && d == 3) continue;
      for (const auto& f : oracle::all_functions(k, d)) {
        if (f.is_polynomial()) continue;
        const auto s = classify_exceptional(f);
        if (s.tag == ExceptionalTag::frobenius_moebius || s.tag == ExceptionalTag::monomial) continue;
        const bool expected = oracle::has_inv_power_cycle_by_enumeration(f);
        CHECK_MESSAGE((s.tag == ExceptionalTag::conjugate_to_inv_power) == expected, format_ratfunc(f));
      }
    }
  }
}

TEST_CASE("psi_lower_bound examples") {
  const auto a = R(QQ, "X^2+1");
  const auto pa = psi_lower_bound(a, 5, orbit_invariants(a), classify_exceptional(a));
  CHECK(pa.bound == 32);
  CHECK(pa.j == 0);
  CHECK(pa.branch == "case-i, n<=e");
  const auto b = R(F3, "1/(X^2+1)");
  const auto pb = psi_lower_bound(b, 3, orbit_invariants(b), classify_exceptional(b));
  CHECK(pb.bound == 8);
  CHECK(pb.j == 0);
  const auto c = R(F2, "(X^2+1)/X^2");
  CHECK_THROWS_AS(psi_lower_bound(c, 3, orbit_invariants(c), classify_exceptional(c)), PreconditionError);
  // X^2 - 1 has e = 2, so n = 5 uses j = e.
  const auto d = R(QQ, "X^2-1");
  const auto pd = psi_lower_bound(d, 5, orbit_invariants(d), classify_exceptional(d));
  CHECK(pd.j == 2);
  CHECK(pd.bound == 8);
  // An unknown invariant that the branch needs is refused.
  OrbitOptions opt;
  opt.cutoff = 3;
  const auto e = R(QQ, "(2X^2+1)/(X^2+1)");
  const auto pe = orbit_invariants(e, opt);
  CHECK_THROWS_AS(psi_lower_bound(e, 6, pe, classify_exceptional(e)), RefusedError);
  CHECK(psi_lower_bound(e, 2, pe, classify_exceptional(e)).j == 0);
}
