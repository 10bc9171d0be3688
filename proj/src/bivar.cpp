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


#include "iterdep/bivar.hpp"

#include "iterdep/linalg.hpp"
#include "iterdep/polyfactor.hpp"
#include "iterdep/text.hpp"

namespace iterdep {

namespace {

const Rationals kQ;

struct PolyRing {
  using Elem = QPoly;
  Elem zero() const { return QPoly(kQ); }
  Elem one() const { return QPoly::one(kQ); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem exact_div(const Elem& a, const Elem& b) const { return div_exact(a, b); }
};

struct BivariateBuilder {
  using Value = BivariatePolynomial;
  Value zero() const { return {}; }
  Value one() const { return Value::from_x(QPoly::one(kQ)); }
  Value coeff(const BigRational& c) const { return Value::from_x(QPoly::constant(kQ, c)); }
  std::optional<Value> variable(char c) const {
    if (c == 'X') return Value::from_x(QPoly::x(kQ));
    if (c == 'Y') return Value::y();
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
};

QPoly content_x(const BivariatePolynomial& a) {
  QPoly g(kQ);
  for (const auto& c : a.coeffs())
    if (!c.is_zero()) g = g.is_zero() ? monic(c) : gcd(g, c);
  return g;
}

BivariatePolynomial divide_x(const BivariatePolynomial& a, const QPoly& d) {
  std::vector<QPoly> c;
  for (const auto& x : a.coeffs()) c.push_back(div_exact(x, d));
  return BivariatePolynomial(std::move(c));
}

QPoly res_y_any(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("res_y: zero argument");
  if (a.deg_y() == 0 && b.deg_y() == 0) return QPoly::one(kQ);
  auto s = sylvester_matrix<QPoly>(a.coeffs(), b.coeffs(), QPoly(kQ), [](const QPoly& p) { return p; });
  QPoly r = bareiss_determinant(std::move(s), PolyRing{});
  const int bound = (a.deg_y() + b.deg_y()) * std::max(a.deg_x(), b.deg_x());
  if (r.degree() > bound) throw InvariantViolation("res_y: resultant exceeds its degree bound");
  return r;
}

}  // namespace

BivariatePolynomial::BivariatePolynomial(std::vector<QPoly> c) : c_(std::move(c)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BivariatePolynomial BivariatePolynomial::y() { return BivariatePolynomial({QPoly(kQ), QPoly::one(kQ)}); }

QPoly BivariatePolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QPoly(kQ); }

int BivariatePolynomial::deg_x() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  std::vector<QPoly> c(std::max(a.coeffs().size(), b.coeffs().size()), QPoly(kQ));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  std::vector<QPoly> c(std::max(a.coeffs().size(), b.coeffs().size()), QPoly(kQ));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly> c(a.coeffs().size() + b.coeffs().size() - 1, QPoly(kQ));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
  return BivariatePolynomial(std::move(c));
}

QPoly substitute_y(const BivariatePolynomial& a, const QPoly& u) {
  QPoly acc(kQ);
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = acc * u + a.coeffs()[i];
  return acc;
}

QPoly specialize_x(const BivariatePolynomial& a, const BigRational& x0) {
  std::vector<BigRational> c;
  for (const auto& p : a.coeffs()) c.push_back(eval(p, x0));
  return QPoly(kQ, std::move(c));
}

BivariatePolynomial parse_bivariate(std::string_view text) {
  const std::string t = detail::strip_spaces(text);
  BivariateBuilder b;
  return detail::ExprParser<Rationals, BivariateBuilder>(kQ, b, t).parse_all();
}

std::string format_bivariate(const BivariatePolynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const QPoly& c = a.coeffs()[i];
    if (c.is_zero()) continue;
    std::string piece;
    if (i == 0) {
      piece = format_poly(c);
    } else {
      const std::string y = i == 1 ? "Y" : "Y^" + std::to_string(i);
      if (c.is_one()) {
        piece = y;
      } else if (c == -QPoly::one(kQ)) {
        piece = "-" + y;
      } else if (c.term_count() == 1) {
        piece = format_poly(c) + y;
      } else {
        piece = "(" + format_poly(c) + ")" + y;
      }
    }
    if (!out.empty() && piece[0] != '-') out += '+';
    out += piece;
  }
  return out;
}

BivariateFunction parse_bivariate_function(std::string_view text) {
  const std::string t = detail::strip_spaces(text);
  const std::size_t slash = detail::find_ratfunc_slash(t, true);
  BivariateFunction f;
  if (slash == std::string::npos) {
    f.G = parse_bivariate(t);
    f.H = BivariatePolynomial::from_x(QPoly::one(kQ));
  } else {
    auto part = [&](std::string_view s, std::size_t offset) {
      try {
        return parse_bivariate(s);
      } catch (const ParseError& e) {
        throw ParseError("bad bivariate function", offset + e.position());
      }
    };
    f.G = part(std::string_view(t).substr(0, slash), 0);
    f.H = part(std::string_view(t).substr(slash + 1), slash + 1);
  }
  if (f.H.is_zero()) throw ParseError("denominator is zero", slash == std::string::npos ? 0 : slash + 1);
  if (f.G.is_zero()) throw PreconditionError("bivariate function is zero");
  return f;
}

std::string format_bivariate_function(const BivariateFunction& f) {
  const std::string g = format_bivariate(f.G);
  if (f.H.deg_y() == 0 && f.H.coeff(0).is_one()) return g;
  return "(" + g + ")/(" + format_bivariate(f.H) + ")";
}

QPoly res_y(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("res_y: zero argument");
  if (a.deg_y() < 1 && b.deg_y() < 1) throw PreconditionError("res_y: both arguments are constant in Y");
  return res_y_any(a, b);
}

bool bivariate_coprime(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const QPoly ca = content_x(a), cb = content_x(b);
  if (gcd(ca, cb).degree() > 0) return false;
  const auto pa = divide_x(a, ca), pb = divide_x(b, cb);
  // Primitive parts share a factor only if it has positive Y-degree.
  if (pa.deg_y() < 1 || pb.deg_y() < 1) return true;
  return !res_y_any(pa, pb).is_zero();
}

ShiftBoundReport shift_bound_report(const std::vector<BivariateFunction>& F) {
  if (F.empty()) throw PreconditionError("shift_bound_report: no functions");
  ShiftBoundReport rep;
  bool any_polynomial = false;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto& f = F[i];
    if (f.e() < 1) throw PreconditionError("shift_bound_report: function " + std::to_string(i + 1) + " does not involve Y");
    if (!bivariate_coprime(f.G, f.H))
      throw PreconditionError("shift_bound_report: numerator and denominator of function " + std::to_string(i + 1) +
                              " share a factor");
    rep.d_n = std::max(rep.d_n, f.d());
    rep.e_n = std::max(rep.e_n, f.e());
    if (f.H.deg_y() == 0 && f.H.deg_x() == 0) any_polynomial = true;
  }
  rep.alpha = any_polynomial ? 1 : 2;
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      const QPoly r = res_y_any(F[i].G, F[j].G) * res_y_any(F[i].G, F[j].H) * res_y_any(F[i].H, F[j].G) *
                      res_y_any(F[i].H, F[j].H);
      ResultantDegree rd{i, j, std::nullopt};
      if (r.is_zero()) {
        rep.degenerate_pairs.emplace_back(i, j);
      } else {
        rd.degree = r.degree();
        rep.E += r.degree();
      }
      rep.r.push_back(rd);
    }
  }
  const long n = static_cast<long>(F.size());
  rep.degree_bound = rep.E + 2L * rep.d_n - 1;
  rep.e_upper = 4 * n * (n - 1) * rep.d_n * rep.e_n;
  if (rep.valid()) {
    const BigInt c = binomial(static_cast<unsigned long>(rep.e_n * rep.degree_bound + rep.E + rep.d_n),
                              static_cast<unsigned long>(rep.E));
    rep.count_bound = ipow(c, static_cast<unsigned long>(rep.alpha));
  }
  return rep;
}

MasonReport mason_check(const QPoly& a, const QPoly& b, const QPoly& c) {
  if (!(a + b + c).is_zero()) throw PreconditionError("mason: A + B + C is not zero");
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw PreconditionError("mason: zero argument");
  if (a.degree() < 1 && b.degree() < 1 && c.degree() < 1) throw PreconditionError("mason: all arguments are constant");
  if (!coprime(a, b) || !coprime(a, c) || !coprime(b, c)) throw PreconditionError("mason: arguments share a factor");
  MasonReport r;
  r.max_degree = std::max({a.degree(), b.degree(), c.degree()});
  r.rad_degree = radical(a * b * c).degree();
  r.holds = r.max_degree <= r.rad_degree - 1;
  if (!r.holds) throw InvariantViolation("mason: inequality fails on coprime input");
  return r;
}

DependenceResult<Rationals> verify_shift(const std::vector<BivariateFunction>& F, const QPoly& u) {
  if (!u.is_monic()) throw PreconditionError("verify_shift: u must be monic");
  std::vector<RationalFunction<Rationals>> values;
  for (std::size_t i = 0; i < F.size(); ++i) {
    QPoly g = substitute_y(F[i].G, u), h = substitute_y(F[i].H, u);
    if (h.is_zero()) throw PreconditionError("verify_shift: u lies on the pole curve of function " + std::to_string(i + 1));
    if (g.is_zero()) throw PreconditionError("verify_shift: u lies on the zero curve of function " + std::to_string(i + 1));
    values.emplace_back(std::move(g), std::move(h));
  }
  return is_mult_dependent(values);
}

ShiftSearchResult shift_search(const std::vector<BivariateFunction>& F, int max_deg,
                               const std::vector<BigRational>& coeff_set, bool check_bounds) {
  ShiftSearchResult out;
  out.report = shift_bound_report(F);
  if (!out.report.valid()) throw RefusedError("shift_search: some R_ij vanishes, the bound does not apply");
  if (max_deg < 0) throw PreconditionError("shift_search: negative degree");
  if (coeff_set.empty()) throw PreconditionError("shift_search: empty coefficient set");
  out.max_degree = max_deg;
  if (max_deg > out.report.degree_bound) {
    out.max_degree = static_cast<int>(out.report.degree_bound);
    out.clipped = true;
  }
  for (int deg = 0; deg <= out.max_degree; ++deg) {
    // idx[k] selects the coefficient of X^k; the top coefficient varies slowest.
    std::vector<std::size_t> idx(deg, 0);
    for (;;) {
      std::vector<BigRational> c;
      for (int k = 0; k < deg; ++k) c.push_back(coeff_set[idx[k]]);
      c.push_back(BigRational(1));
      const QPoly u(kQ, std::move(c));
      ++out.candidates;
      try {
        const auto r = verify_shift(F, u);
        if (r.dependent) out.found.push_back({u, r.witness});
      } catch (const PreconditionError&) {
        ++out.skipped;
      }
      int k = 0;
      while (k < deg && idx[k] + 1 == coeff_set.size()) idx[k++] = 0;
      if (k == deg) break;
      ++idx[k];
    }
  }
  if (!check_bounds) return out;
  for (const auto& f : out.found)
    if (f.u.degree() > out.report.degree_bound)
      throw InvariantViolation("shift_search: u = " + format_poly(f.u) + " is above the degree bound");
  if (BigInt(out.found.size()) > *out.report.count_bound)
    throw InvariantViolation("shift_search: " + std::to_string(out.found.size()) +
                             " dependent u found, above the count bound " + out.report.count_bound->get_str());
  return out;
}

}  // namespace iterdep
