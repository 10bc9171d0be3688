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

#include "iterdep/field.hpp"

#include <cctype>

#include "iterdep/polyfactor.hpp"
#include "iterdep/text.hpp"

namespace iterdep {

namespace {

using Residues = std::vector<std::uint64_t>;

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 62;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::size_t scan_digits(std::string_view s, std::size_t pos) {
  std::size_t end = pos;
  while (end < s.size() && is_digit(s[end])) ++end;
  return end;
}

BigInt parse_uint(std::string_view digits) { return BigInt(std::string(digits)); }

void trim(Residues& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomial remainder over F_p with monic divisor.
void reduce_monic(const PrimeField& fp, Residues& a, const Residues& m) {
  const std::size_t k = m.size() - 1;
  for (std::size_t i = a.size(); i-- > k;) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) a[i - k + j] = fp.sub(a[i - k + j], fp.mul(c, m[j]));
  }
  a.resize(k, 0);
}

// Extended Euclid over F_p: returns s with s*a = 1 mod m (a nonzero, m irreducible).
Residues inverse_mod(const PrimeField& fp, Residues a, const Residues& m) {
  Residues r0 = m, r1 = std::move(a), s0, s1{1};
  trim(r1);
  while (!(r1.size() == 1)) {
    // r0 = qt * r1 + rem
    Residues rem = r0, qt(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const std::uint64_t lead_inv = fp.inv(r1.back());
    for (std::size_t i = rem.size(); i-- >= r1.size();) {
      const std::uint64_t c = fp.mul(rem[i], lead_inv);
      qt[i - (r1.size() - 1)] = c;
      if (c != 0)
        for (std::size_t j = 0; j < r1.size(); ++j)
          rem[i - (r1.size() - 1) + j] = fp.sub(rem[i - (r1.size() - 1) + j], fp.mul(c, r1[j]));
      if (i == r1.size() - 1) break;
    }
    trim(rem);
    // s2 = s0 - qt * s1
    Residues prod(qt.size() + s1.size(), 0);
    for (std::size_t i = 0; i < qt.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        prod[i + j] = fp.add(prod[i + j], fp.mul(qt[i], s1[j]));
    Residues s2(std::max(prod.size(), s0.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i)
      s2[i] = fp.sub(i < s0.size() ? s0[i] : 0, i < prod.size() ? prod[i] : 0);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw InvariantViolation("ExtField: modulus is not irreducible");
  }
  const std::uint64_t c = fp.inv(r1[0]);
  for (auto& v : s1) v = fp.mul(v, c);
  return s1;
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= kMaxFieldSize) throw PreconditionError("prime field: p must be below 2^62");
  if (!is_prime(p)) throw PreconditionError("prime field: " + std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::from_bigint(const BigInt& v) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
  // a^(p-2)
  Elem result = 1, base = a;
  for (std::uint64_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::optional<Parsed<PrimeField::Elem>> PrimeField::parse_coefficient(std::string_view s) const {
  const std::size_t end = scan_digits(s, 0);
  if (end == 0) return std::nullopt;
  return Parsed<Elem>{from_bigint(parse_uint(s.substr(0, end))), end};
}

PrimeField::Elem PrimeField::parse(std::string_view s) const {
  std::string t = detail::strip_spaces(s);
  bool negative = !t.empty() && t[0] == '-';
  std::string_view body = std::string_view(t).substr(negative ? 1 : 0);
  auto c = parse_coefficient(body);
  if (!c || c->length != body.size()) throw ParseError("expected an integer residue", 0);
  return negative ? neg(c->value) : c->value;
}

// ---------------------------------------------------------------------------
// ExtField

ExtField::ExtField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  PrimeField fp(p);
  if (k < 1) throw PreconditionError("extension field: degree must be >= 1");
  BigInt q = ipow(BigInt(p), k);
  if (q >= BigInt(kMaxFieldSize)) throw PreconditionError("extension field: p^k must be below 2^62");
  if (modulus.empty()) {
    // Smallest monic irreducible in canonical order: walk the k low coefficients.
    const std::uint64_t count = to_u64(ipow(BigInt(p), k));
    for (std::uint64_t i = 0; i < count; ++i) {
      std::vector<std::uint64_t> cand(k + 1, 0);
      std::uint64_t idx = i;
      for (unsigned j = 0; j < k; ++j) {
        cand[j] = idx % p;
        idx /= p;
      }
      cand[k] = 1;
      if (is_irreducible(Poly<PrimeField>(fp, cand))) {
        modulus = std::move(cand);
        break;
      }
    }
  } else {
    for (auto& c : modulus) c %= p;
    if (modulus.size() != k + 1 || modulus.back() != 1)
      throw PreconditionError("extension field: modulus must be monic of degree " + std::to_string(k));
    if (!is_irreducible(Poly<PrimeField>(fp, modulus)))
      throw PreconditionError("extension field: modulus is reducible over F_" + std::to_string(p));
  }
  d_ = std::make_shared<const Data>(Data{p, k, to_u64(q), std::move(modulus)});
}

ExtField::Elem ExtField::generator() const {
  Elem e = zero();
  if (d_->k == 1) {
    // z is a root of the linear modulus z + c.
    e[0] = base().neg(d_->modulus[0]);
  } else {
    e[1] = 1;
  }
  return e;
}

ExtField::Elem ExtField::from_bigint(const BigInt& v) const {
  Elem e = zero();
  e[0] = base().from_bigint(v);
  return e;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  const PrimeField fp = base();
  Elem r(d_->k);
  for (unsigned i = 0; i < d_->k; ++i) r[i] = fp.add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  const PrimeField fp = base();
  Elem r(d_->k);
  for (unsigned i = 0; i < d_->k; ++i) r[i] = fp.sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  const PrimeField fp = base();
  Elem r(d_->k);
  for (unsigned i = 0; i < d_->k; ++i) r[i] = fp.neg(a[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const PrimeField fp = base();
  const unsigned k = d_->k;
  Residues prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = fp.add(prod[i + j], fp.mul(a[i], b[j]));
  }
  reduce_monic(fp, prod, d_->modulus);
  return prod;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw PreconditionError("division by zero in " + describe());
  Residues s = inverse_mod(base(), a, d_->modulus);
  s.resize(d_->k, 0);
  return s;
}

bool ExtField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

ExtField::Elem ExtField::from_index(std::uint64_t i) const {
  Elem e(d_->k);
  for (unsigned j = 0; j < d_->k; ++j) {
    e[j] = i % d_->p;
    i /= d_->p;
  }
  return e;
}

std::uint64_t ExtField::index(const Elem& a) const {
  std::uint64_t i = 0;
  for (unsigned j = d_->k; j-- > 0;) i = i * d_->p + a[j];
  return i;
}

ExtField::Elem ExtField::pth_root(const Elem& a) const {
  const BigInt e = ipow(BigInt(d_->p), d_->k - 1);
  return power(a, e, one(), [this](const Elem& x, const Elem& y) { return mul(x, y); });
}

std::string ExtField::format(const Elem& a) const {
  std::string out;
  for (unsigned i = d_->k; i-- > 0;) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || a[i] != 1) out += std::to_string(a[i]);
    if (i >= 1) out += 'z';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string ExtField::format_coefficient(const Elem& a) const {
  std::string s = format(a);
  return s.find('+') != std::string::npos || (s.find('z') != std::string::npos && !std::isalpha(s[0]))
             ? "(" + s + ")"
             : s;
}

std::optional<Parsed<ExtField::Elem>> ExtField::parse_coefficient(std::string_view s) const {
  if (s.empty()) return std::nullopt;
  if (is_digit(s[0])) {
    const std::size_t end = scan_digits(s, 0);
    return Parsed<Elem>{from_bigint(parse_uint(s.substr(0, end))), end};
  }
  if (s[0] == 'z') {
    std::size_t pos = 1;
    unsigned long e = 1;
    if (pos < s.size() && s[pos] == '^') {
      const std::size_t end = scan_digits(s, pos + 1);
      if (end == pos + 1) throw ParseError("expected exponent after 'z^'", pos + 1);
      e = parse_uint(s.substr(pos + 1, end - pos - 1)).get_ui();
      pos = end;
    }
    Elem v = power(generator(), BigInt(e), one(), [this](const Elem& x, const Elem& y) { return mul(x, y); });
    return Parsed<Elem>{std::move(v), pos};
  }
  if (s[0] == '(') {
    const std::size_t close = s.find(')');
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in field element", 0);
    return Parsed<Elem>{parse(s.substr(1, close - 1)), close + 1};
  }
  return std::nullopt;
}

ExtField::Elem ExtField::parse(std::string_view s) const {
  const std::string t = detail::strip_spaces(s);
  if (t.empty()) throw ParseError("empty field element", 0);
  Elem acc = zero();
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in field element", pos);
    }
    Elem term = one();
    bool any = false;
    if (pos < t.size() && is_digit(t[pos])) {
      const std::size_t end = scan_digits(t, pos);
      term = from_bigint(parse_uint(std::string_view(t).substr(pos, end - pos)));
      pos = end;
      any = true;
      if (pos < t.size() && t[pos] == '*') ++pos;
    }
    if (pos < t.size() && t[pos] == 'z') {
      auto z = parse_coefficient(std::string_view(t).substr(pos));
      term = mul(term, z->value);
      pos += z->length;
      any = true;
    }
    if (!any) throw ParseError("expected a term in z", pos);
    acc = negative ? sub(acc, term) : add(acc, term);
  }
  return acc;
}

std::string ExtField::describe() const {
  std::string m;
  const PrimeField fp = base();
  m = format_poly(Poly<PrimeField>(fp, d_->modulus));
  return "Fq:" + std::to_string(d_->p) + "^" + std::to_string(d_->k) + ":" + m;
}

// ---------------------------------------------------------------------------
// Rationals

Rationals::Elem Rationals::inv(const Elem& a) const {
  if (sgn(a) == 0) throw PreconditionError("division by zero in Q");
  return Elem(1) / a;
}

Rationals::Elem Rationals::div(const Elem& a, const Elem& b) const {
  if (sgn(b) == 0) throw PreconditionError("division by zero in Q");
  return a / b;
}

std::optional<Parsed<Rationals::Elem>> Rationals::parse_coefficient(std::string_view s) const {
  std::size_t end = scan_digits(s, 0);
  if (end == 0) return std::nullopt;
  BigInt num = parse_uint(s.substr(0, end));
  BigInt den = 1;
  // `a/b` is a fraction only when a digit follows the slash directly;
  // otherwise the slash separates numerator and denominator of a function.
  if (end + 1 < s.size() && s[end] == '/' && is_digit(s[end + 1])) {
    const std::size_t dend = scan_digits(s, end + 1);
    den = parse_uint(s.substr(end + 1, dend - end - 1));
    if (den == 0) throw ParseError("zero denominator in rational coefficient", end + 1);
    end = dend;
  }
  Elem v(num, den);
  v.canonicalize();
  return Parsed<Elem>{std::move(v), end};
}

Rationals::Elem Rationals::parse(std::string_view s) const {
  const std::string t = detail::strip_spaces(s);
  const bool negative = !t.empty() && t[0] == '-';
  std::string_view body = std::string_view(t).substr(negative ? 1 : 0);
  auto c = parse_coefficient(body);
  if (!c || c->length != body.size()) throw ParseError("expected a rational a or a/b", 0);
  return negative ? Elem(-c->value) : c->value;
}

// ---------------------------------------------------------------------------

AnyField make_field(FieldKind kind, std::uint64_t p, unsigned k,
                    std::optional<std::vector<std::uint64_t>> modulus) {
  switch (kind) {
    case FieldKind::rationals:
      return Rationals{};
    case FieldKind::prime:
      return PrimeField(p);
    case FieldKind::extension:
      return ExtField(p, k, modulus.value_or(std::vector<std::uint64_t>{}));
  }
  throw PreconditionError("make_field: unknown kind");
}

AnyField finite_field_of_size(std::uint64_t q) {
  auto pk = prime_power_decomposition(q);
  if (!pk) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  if (pk->second == 1) return PrimeField(pk->first);
  return ExtField(pk->first, pk->second);
}

AnyField parse_field_descriptor(std::string_view text) {
  const std::string t = detail::strip_spaces(text);
  if (t == "Q") return Rationals{};
  if (t.rfind("Fq:", 0) != 0) throw ParseError("field descriptor must be Q or Fq:<p>[^<k>[:modulus]]", 0);
  std::size_t pos = 3;
  std::size_t end = scan_digits(t, pos);
  if (end == pos) throw ParseError("expected the characteristic p", pos);
  const BigInt pbig = parse_uint(std::string_view(t).substr(pos, end - pos));
  if (pbig >= BigInt(kMaxFieldSize)) throw PreconditionError("field descriptor: p too large");
  const std::uint64_t p = to_u64(pbig);
  pos = end;
  if (pos == t.size()) return PrimeField(p);
  if (t[pos] != '^') throw ParseError("expected '^<k>' after the characteristic", pos);
  end = scan_digits(t, pos + 1);
  if (end == pos + 1) throw ParseError("expected the extension degree k", pos + 1);
  const unsigned k = static_cast<unsigned>(parse_uint(std::string_view(t).substr(pos + 1, end - pos - 1)).get_ui());
  pos = end;
  if (pos == t.size()) return k == 1 ? AnyField(PrimeField(p)) : AnyField(ExtField(p, k));
  if (t[pos] != ':') throw ParseError("expected ':<modulus>' after the extension degree", pos);
  const PrimeField fp(p);
  Poly<PrimeField> m = parse_poly(fp, std::string_view(t).substr(pos + 1));
  return ExtField(p, k, m.coeffs());
}

std::string describe(const AnyField& f) {
  return std::visit([](const auto& k) { return k.describe(); }, f);
}

}  // namespace iterdep
