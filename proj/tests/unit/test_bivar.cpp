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

#include <random>

#include "iterdep/bivar.hpp"
#include "iterdep/polyfactor.hpp"
#include "iterdep/text.hpp"

using namespace iterdep;

namespace {

const Rationals QQ;

QPoly q(const char* s) { return parse_poly(QQ, s); }
BivariatePolynomial B(const char* s) { return parse_bivariate(s); }

std::vector<BivariateFunction> shifts(std::initializer_list<const char*> fs) {
  std::vector<BivariateFunction> out;
  for (const char* f : fs) out.push_back(parse_bivariate_function(std::string("Y+") + f));
  return out;
}

// Resultant at X = x0 through the univariate routine, when the leading
// Y-coefficients do not vanish there.
std::optional<BigRational> res_at(const BivariatePolynomial& a, const BivariatePolynomial& b, const BigRational& x0) {
  const QPoly sa = specialize_x(a, x0), sb = specialize_x(b, x0);
  if (sa.degree() != a.deg_y() || sb.degree() != b.deg_y()) return std::nullopt;
  return resultant_euclid(sa, sb);
}

BivariatePolynomial random_bivariate(std::mt19937_64& rng, int dy, int dx) {
  std::vector<QPoly> c;
  for (int i = 0; i <= dy; ++i) {
    std::vector<BigRational> v;
    for (int j = 0; j <= dx; ++j) v.push_back(BigRational(static_cast<long>(rng() % 5) - 2));
    c.emplace_back(QQ, v);
  }
  if (c.back().is_zero()) c.back() = QPoly::one(QQ);
  return BivariatePolynomial(c);
}

}  // namespace

TEST_CASE("bivariate text round-trips") {
  for (const char* s : {"Y^2-X", "(X^2+1)Y-X", "2XY^3+Y+1/2", "-Y", "X"}) CHECK(format_bivariate(B(s)) == s);
  CHECK(B("(Y+X)(Y-X)") == B("Y^2-X^2"));
  CHECK_THROWS_AS(B("Y+Z"), ParseError);
}

TEST_CASE("res_y examples") {
  CHECK(res_y(B("Y+X^2+2X"), B("Y+X")) == q("X-X^2-2X"));
  CHECK(res_y(B("Y"), B("Y-X^3-1")) == q("-X^3-1"));
  CHECK(res_y(B("Y^2-X"), B("Y-X")) == q("X^2-X"));
  CHECK_THROWS_AS(res_y(B("X"), B("X+1")), PreconditionError);
}

TEST_CASE("res_y specializes to univariate resultants") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_bivariate(rng, 1 + trial % 3, 2), b = random_bivariate(rng, 1 + trial % 2, 2);
    const QPoly r = res_y(a, b);
    CHECK(r.degree() <= (a.deg_y() + b.deg_y()) * std::max(a.deg_x(), b.deg_x()));
    for (long x0 = -3; x0 <= 3; ++x0) {
      const auto v = res_at(a, b, BigRational(x0));
      if (v) CHECK(*v == eval(r, BigRational(x0)));
    }
  }
}

TEST_CASE("res_y vanishes exactly on common factors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = random_bivariate(rng, 1, 1);
    const auto a = random_bivariate(rng, 1, 1), b = random_bivariate(rng, 1, 2);
    if (c.deg_y() < 1) continue;
    CHECK(res_y(a * c, b * c).is_zero());
    CHECK_FALSE(bivariate_coprime(a * c, b * c));
    // Without the shared factor, check against gcds of X-specializations.
    const bool zero = res_y(a, b).is_zero();
    bool common_everywhere = true;
    for (long x0 = -4; x0 <= 4; ++x0) {
      const QPoly sa = specialize_x(a, BigRational(x0)), sb = specialize_x(b, BigRational(x0));
      if (sa.degree() != a.deg_y() || sb.degree() != b.deg_y()) continue;
      if (gcd(sa, sb).degree() < 1) common_everywhere = false;
    }
    CHECK(zero == common_everywhere);
  }
}

TEST_CASE("shift_bound_report examples") {
  const auto rep = shift_bound_report(shifts({"X^2+2X", "X"}));
  CHECK(rep.E == 2);
  CHECK(rep.alpha == 1);
  CHECK(rep.degree_bound == 5);
  REQUIRE(rep.count_bound);
  CHECK(*rep.count_bound == 36);
  CHECK(rep.E <= rep.e_upper);
  const auto deg = shift_bound_report(shifts({"X", "X"}));
  CHECK_FALSE(deg.valid());
  CHECK_FALSE(deg.count_bound.has_value());
  // No polynomial among the F_i: alpha = 2.
  std::vector<BivariateFunction> F{parse_bivariate_function("(Y+X)/(Y+1)"), parse_bivariate_function("Y/(Y+X^2)")};
  CHECK(shift_bound_report(F).alpha == 2);
  CHECK_THROWS_AS(shift_bound_report({parse_bivariate_function("(Y+X)(X+1)/((Y+X)X)")}), PreconditionError);
}

TEST_CASE("shift E matches pure-shift differences") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<BivariateFunction> F;
    std::vector<QPoly> f;
    for (int i = 0; i < n; ++i) {
      std::vector<BigRational> c;
      for (int j = 0; j <= 1 + trial % 3; ++j) c.push_back(BigRational(static_cast<long>(rng() % 7) - 3));
      f.emplace_back(QQ, c);
      F.push_back({BivariatePolynomial::y() + BivariatePolynomial::from_x(f.back()),
                   BivariatePolynomial::from_x(QPoly::one(QQ))});
    }
    const auto rep = shift_bound_report(F);
    long E = 0, dn = 0;
    bool distinct = true;
    for (int i = 0; i < n; ++i) {
      dn = std::max<long>(dn, f[i].degree());
      for (int j = i + 1; j < n; ++j) {
        if (f[i] == f[j]) distinct = false;
        else E += (f[j] - f[i]).degree();
      }
    }
    CHECK(rep.valid() == distinct);
    if (distinct) {
      CHECK(rep.E == E);
      CHECK(rep.E <= dn * n * (n - 1) / 2);
    }
  }
}

TEST_CASE("mason_check examples") {
  const auto a = mason_check(q("X^2"), q("1-X^2"), q("-1"));
  CHECK(a.max_degree == 2);
  CHECK(a.rad_degree == 3);
  CHECK(a.holds);
  const auto b = mason_check(q("X^3+3X^2+3X"), q("1"), q("-(X+1)^3"));
  CHECK(b.max_degree == 3);
  CHECK(b.rad_degree == 4);
  CHECK_THROWS_AS(mason_check(q("1"), q("2"), q("-3")), PreconditionError);
  CHECK_THROWS_AS(mason_check(q("X"), q("X"), q("-2X")), PreconditionError);
  CHECK_THROWS_AS(mason_check(q("X"), q("1"), q("1")), PreconditionError);
}

TEST_CASE("verify_shift examples") {
  const auto F = shifts({"X^2+2X", "X"});
  const auto a = verify_shift(F, q("1"));
  CHECK(a.dependent);
  CHECK(a.witness == std::vector<long>{1, -2});
  CHECK_FALSE(verify_shift(F, q("X")).dependent);
  // F_1 = Y - X + 1 is identically 1 at u = X.
  const auto G = std::vector<BivariateFunction>{parse_bivariate_function("Y-X+1"), parse_bivariate_function("Y+X")};
  CHECK(verify_shift(G, q("X")).witness == std::vector<long>{1, 0});
  CHECK_THROWS_AS(verify_shift(F, q("2X")), PreconditionError);
}

TEST_CASE("shift_search example") {
  std::vector<BigRational> box;
  for (long c = -2; c <= 2; ++c) box.emplace_back(c);
  const auto r = shift_search(shifts({"X^2+2X", "X"}), 2, box);
  CHECK(r.candidates == 31);
  REQUIRE(r.found.size() == 1);
  CHECK(r.found[0].u.is_one());
  CHECK(r.found[0].witness == std::vector<long>{1, -2});
  CHECK_FALSE(r.clipped);
  CHECK(shift_search(shifts({"X^2+2X", "X"}), 9, box).max_degree == 5);
  CHECK_THROWS_AS(shift_search(shifts({"X", "X"}), 1, box), RefusedError);
}

TEST_CASE("constant-valued shifts exceed the count bound when E = 0") {
  // f_2 - f_1 = -3, so E = 0 and the bound allows one u; but F_1(X, X) = 1,
  // F_1(X, X - 2) = -1 and F_2(X, X + 1) = -1 are each dependent on their own.
  const std::vector<BivariateFunction> F{parse_bivariate_function("Y-X+1"), parse_bivariate_function("Y-X-2")};
  const auto rep = shift_bound_report(F);
  CHECK(rep.E == 0);
  REQUIRE(rep.count_bound);
  CHECK(*rep.count_bound == 1);
  std::vector<BigRational> box;
  for (long c = -2; c <= 2; ++c) box.emplace_back(c);
  const auto r = shift_search(F, 1, box, false);
  REQUIRE(r.found.size() == 3);
  CHECK(r.found[0].u == q("X-2"));
  CHECK(r.found[0].witness == std::vector<long>{2, 0});
  CHECK(r.found[1].u == q("X"));
  CHECK(r.found[1].witness == std::vector<long>{1, 0});
  CHECK(r.found[2].u == q("X+1"));
  CHECK(r.found[2].witness == std::vector<long>{0, 2});
  CHECK_THROWS_AS(shift_search(F, 1, box), InvariantViolation);
}
