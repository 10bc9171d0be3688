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


// Bivariate polynomials over Q, resultants in Y, and the degree/count bounds
// for polynomials u that make F_1(X, u), ..., F_n(X, u) multiplicatively
// dependent.

#ifndef ITERDEP_BIVAR_HPP
#define ITERDEP_BIVAR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iterdep/mdep.hpp"

namespace iterdep {

using QPoly = Poly<Rationals>;

/// sum_i c_i(X) Y^i with the top coefficient nonzero (empty for zero).
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<QPoly> c);
  static BivariatePolynomial from_x(const QPoly& p) { return BivariatePolynomial({p}); }
  static BivariatePolynomial y();

  const std::vector<QPoly>& coeffs() const { return c_; }
  QPoly coeff(std::size_t i) const;
  bool is_zero() const { return c_.empty(); }
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }
  int deg_x() const;
  bool operator==(const BivariatePolynomial&) const = default;

 private:
  std::vector<QPoly> c_;
};

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// A(X, u(X)).
QPoly substitute_y(const BivariatePolynomial& a, const QPoly& u);
/// A(x0, Y) as a polynomial in Y.
QPoly specialize_x(const BivariatePolynomial& a, const BigRational& x0);

BivariatePolynomial parse_bivariate(std::string_view text);
std::string format_bivariate(const BivariatePolynomial& a);

struct BivariateFunction {
  BivariatePolynomial G, H;
  int d() const { return std::max(G.deg_x(), H.deg_x()); }
  int e() const { return std::max(G.deg_y(), H.deg_y()); }
};

/// "G/H" or "G"; G and H must be coprime and H nonzero.
BivariateFunction parse_bivariate_function(std::string_view text);
std::string format_bivariate_function(const BivariateFunction& f);

/// Resultant in Y with coefficients in Q[X], by fraction-free elimination.
/// Requires at least one argument of positive Y-degree.
QPoly res_y(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// Whether A and B have no common factor of positive degree in X or Y.
bool bivariate_coprime(const BivariatePolynomial& a, const BivariatePolynomial& b);

struct ResultantDegree {
  std::size_t i = 0, j = 0;  // 0-based, i < j
  std::optional<int> degree; // absent when R_ij vanishes identically
};

struct ShiftBoundReport {
  std::vector<ResultantDegree> r;
  long E = 0;
  int alpha = 2;
  int d_n = 0, e_n = 0;
  long degree_bound = 0;          // E + 2 d_n - 1
  std::optional<BigInt> count_bound;
  std::vector<std::pair<std::size_t, std::size_t>> degenerate_pairs;
  long e_upper = 0;               // 4 n (n - 1) d_n e_n
  bool valid() const { return degenerate_pairs.empty(); }
};

ShiftBoundReport shift_bound_report(const std::vector<BivariateFunction>& F);

struct MasonReport {
  int max_degree = 0;
  int rad_degree = 0;
  bool holds = false;
};

/// max deg <= deg rad(ABC) - 1 for coprime A + B + C = 0, not all constant.
MasonReport mason_check(const QPoly& a, const QPoly& b, const QPoly& c);

/// Dependence of F_i(X, u(X)).
DependenceResult<Rationals> verify_shift(const std::vector<BivariateFunction>& F, const QPoly& u);

struct ShiftFind {
  QPoly u;
  std::vector<long> witness;
};

struct ShiftSearchResult {
  ShiftBoundReport report;
  int max_degree = 0;        // after clipping to the degree bound
  bool clipped = false;
  std::uint64_t candidates = 0;
  std::uint64_t skipped = 0; // u on a zero or pole curve of some F_i
  std::vector<ShiftFind> found;
};

/// All monic u of degree <= max_deg with lower coefficients from coeff_set
/// (u = 1 included) for which the F_i(X, u) are dependent. With check_bounds
/// the degree and count bounds are asserted (InvariantViolation). The count
/// bound can fail when E = 0 and some F_i(X, u) is the constant 1 or -1.
ShiftSearchResult shift_search(const std::vector<BivariateFunction>& F, int max_deg,
                               const std::vector<BigRational>& coeff_set, bool check_bounds = true);

}  // namespace iterdep

#endif  // ITERDEP_BIVAR_HPP
