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

// Coefficient fields. Each field is a small immutable value type exposing the
// same interface (an `Elem` type plus arithmetic on it), so the polynomial
// layer can be written once as templates:
//
//   PrimeField  F_p           Elem = uint64_t residue in [0, p)
//   ExtField    F_p[z]/(m(z)) Elem = exactly k residues, index = power of z
//   Rationals   Q             Elem = mpq_class in lowest terms
//
// AnyField is the runtime sum used at the C API and CLI boundary.

#ifndef ITERDEP_FIELD_HPP
#define ITERDEP_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "iterdep/intmath.hpp"

namespace iterdep {

enum class FieldKind { prime, extension, rationals };

// Result of parsing one coefficient token: the value and characters consumed.
template <class E>
struct Parsed {
  E value;
  std::size_t length = 0;
};

class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint64_t p);

  FieldKind kind() const { return FieldKind::prime; }
  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return 1; }
  std::uint64_t size() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  Elem from_bigint(const BigInt& v) const;

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  // Bijection [0, q) <-> elements; also the canonical element order.
  Elem from_index(std::uint64_t i) const { return i; }
  std::uint64_t index(Elem a) const { return a; }
  template <class Rng>
  Elem random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
  }
  Elem pth_root(Elem a) const { return a; }

  std::string format(Elem a) const { return std::to_string(a); }
  std::string format_coefficient(Elem a) const { return format(a); }
  bool is_negative(Elem) const { return false; }
  std::optional<Parsed<Elem>> parse_coefficient(std::string_view s) const;
  Elem parse(std::string_view s) const;
  std::string describe() const { return "Fq:" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

class ExtField {
 public:
  using Elem = std::vector<std::uint64_t>;
  static constexpr bool is_finite = true;

  // modulus: coefficients low-to-high, length k + 1, monic and irreducible
  // over F_p. Empty selects the smallest irreducible in the canonical order.
  ExtField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus = {});

  FieldKind kind() const { return FieldKind::extension; }
  std::uint64_t p() const { return d_->p; }
  std::uint64_t characteristic() const { return d_->p; }
  unsigned degree() const { return d_->k; }
  std::uint64_t size() const { return d_->q; }
  const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
  PrimeField base() const { return PrimeField(d_->p); }

  Elem zero() const { return Elem(d_->k, 0); }
  Elem one() const {
    Elem e(d_->k, 0);
    e[0] = 1;
    return e;
  }
  // The class of z.
  Elem generator() const;
  Elem from_int(long long v) const {
    Elem e = zero();
    e[0] = base().from_int(v);
    return e;
  }
  Elem from_bigint(const BigInt& v) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const { return a == one(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem from_index(std::uint64_t i) const;
  std::uint64_t index(const Elem& a) const;
  template <class Rng>
  Elem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, d_->p - 1);
    Elem e(d_->k);
    for (auto& c : e) c = dist(rng);
    return e;
  }
  // Inverse Frobenius: a^(p^(k-1)).
  Elem pth_root(const Elem& a) const;

  std::string format(const Elem& a) const;
  std::string format_coefficient(const Elem& a) const;
  bool is_negative(const Elem&) const { return false; }
  std::optional<Parsed<Elem>> parse_coefficient(std::string_view s) const;
  Elem parse(std::string_view s) const;
  std::string describe() const;

  bool operator==(const ExtField& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->modulus == o.d_->modulus);
  }

 private:
  struct Data {
    std::uint64_t p;
    unsigned k;
    std::uint64_t q;
    std::vector<std::uint64_t> modulus;
  };
  std::shared_ptr<const Data> d_;
};

class Rationals {
 public:
  using Elem = BigRational;
  static constexpr bool is_finite = false;

  FieldKind kind() const { return FieldKind::rationals; }
  std::uint64_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_bigint(const BigInt& v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  std::string format(const Elem& a) const { return a.get_str(); }
  std::string format_coefficient(const Elem& a) const { return a.get_str(); }
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }
  std::optional<Parsed<Elem>> parse_coefficient(std::string_view s) const;
  Elem parse(std::string_view s) const;
  std::string describe() const { return "Q"; }

  bool operator==(const Rationals&) const = default;
};

using AnyField = std::variant<PrimeField, ExtField, Rationals>;

/// Validated field construction. For an extension without a modulus the
/// smallest monic irreducible of degree k (polynomial order: degree, then
/// coefficients from the top) is chosen, so runs are reproducible.
AnyField make_field(FieldKind kind, std::uint64_t p = 0, unsigned k = 1,
                    std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

/// Field for q = p^k (prime field when k = 1).
AnyField finite_field_of_size(std::uint64_t q);

/// Field descriptor micro-grammar: `Q | Fq:<p> | Fq:<p>^<k>[:<modulus in X>]`.
AnyField parse_field_descriptor(std::string_view text);

std::string describe(const AnyField& f);

/// Multiplicative order of a nonzero element given the factorization of q - 1.
template <class K>
BigInt element_order(const K& field, const typename K::Elem& a, const IntFactorization& group) {
  static_assert(K::is_finite, "element_order needs a finite field");
  if (field.is_zero(a)) throw PreconditionError("element_order: zero has no multiplicative order");
  if (product(group) != BigInt(field.size()) - 1)
    throw PreconditionError("element_order: factorization does not multiply to q - 1");
  auto mul = [&](const typename K::Elem& x, const typename K::Elem& y) { return field.mul(x, y); };
  auto eq = [&](const typename K::Elem& x, const typename K::Elem& y) { return field.equal(x, y); };
  return multiplicative_order(a, field.one(), group, mul, eq);
}

}  // namespace iterdep

#endif  // ITERDEP_FIELD_HPP
