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

// Exact linear algebra: fraction-free determinants over integral domains with
// exact division, and integer kernels by unimodular column reduction.

#ifndef ITERDEP_LINALG_HPP
#define ITERDEP_LINALG_HPP

#include <utility>
#include <vector>

#include "iterdep/intmath.hpp"

namespace iterdep {

struct IntegerRing {
  using Elem = BigInt;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem exact_div(const Elem& a, const Elem& b) const {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

/// Bareiss elimination. Every intermediate division is exact in an integral
/// domain, so the ring only needs exact_div.
template <class Ring>
typename Ring::Elem bareiss_determinant(std::vector<std::vector<typename Ring::Elem>> m, const Ring& ring) {
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  bool negate = false;
  typename Ring::Elem prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && ring.is_zero(m[pivot][k])) ++pivot;
    if (pivot == n) return ring.zero();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto t = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]));
        m[i][j] = ring.exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  auto det = m[n - 1][n - 1];
  return negate ? ring.neg(det) : det;
}

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Z-basis of {x in Z^c : A x = 0} for an r x c integer matrix A.
/// Column operations are applied to [A; I]; once the A-part is in column
/// echelon form the identity-part columns over zero A-columns span the kernel.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  // cols[j] = column j of [A; I]
  std::vector<std::vector<BigInt>> c(cols, std::vector<BigInt>(rows + cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) c[j][i] = a[i][j];
    c[j][rows + j] = 1;
  }
  auto axpy = [](std::vector<BigInt>& dst, const BigInt& f, const std::vector<BigInt>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= f * src[i];
  };
  std::size_t piv = 0;
  for (std::size_t i = 0; i < rows && piv < cols; ++i) {
    for (;;) {
      // Smallest nonzero |entry| in row i among columns piv..cols-1.
      std::size_t best = cols;
      for (std::size_t j = piv; j < cols; ++j)
        if (c[j][i] != 0 && (best == cols || abs(c[j][i]) < abs(c[best][i]))) best = j;
      if (best == cols) break;
      std::swap(c[piv], c[best]);
      bool done = true;
      for (std::size_t j = piv + 1; j < cols; ++j) {
        if (c[j][i] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), c[j][i].get_mpz_t(), c[piv][i].get_mpz_t());
        axpy(c[j], q, c[piv]);
        if (c[j][i] != 0) done = false;
      }
      if (done) {
        ++piv;
        break;
      }
    }
  }
  IntMatrix kernel;
  for (std::size_t j = piv; j < cols; ++j) kernel.emplace_back(c[j].begin() + rows, c[j].end());
  return kernel;
}

}  // namespace iterdep

#endif  // ITERDEP_LINALG_HPP
