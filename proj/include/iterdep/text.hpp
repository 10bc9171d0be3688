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

// Polynomial text grammar.
//
//   ratfunc := poly ('/' poly)?
//   poly    := ('+'|'-')? term (('+'|'-') term)*
//   term    := factor ('*'? factor)*
//   factor  := atom ('^' uint)?
//   atom    := coefficient | variable | '(' poly ')'
//
// Coefficients follow the field's element syntax. Over Q, `a/b` directly
// followed by a digit is a fraction coefficient; any other `/` at the top
// level separates numerator and denominator. Whitespace is ignored.
//
// Printing is canonical: descending exponents, no '*', no spaces.

#ifndef ITERDEP_TEXT_HPP
#define ITERDEP_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "iterdep/poly.hpp"

namespace iterdep {

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Recursive-descent parser over a value algebra supplied by `B`:
//   B::Value, coeff(Elem), variable(char) -> optional<Value>, add, sub, neg, mul.
template <class K, class B>
class ExprParser {
 public:
  using Value = typename B::Value;

  ExprParser(const K& field, const B& builder, std::string_view text)
      : field_(field), b_(builder), s_(text) {}

  Value parse_all() {
    if (s_.empty()) throw ParseError("empty polynomial", 0);
    Value v = expr();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Value expr() {
    Value acc = b_.zero();
    bool first = true;
    while (first || at('+') || at('-')) {
      bool negative = false;
      if (at('+') || at('-')) {
        negative = at('-');
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      Value t = term();
      acc = negative ? b_.sub(acc, t) : b_.add(acc, t);
    }
    return acc;
  }

  bool starts_factor() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        acc = b_.mul(acc, factor());
      } else if (starts_factor()) {
        acc = b_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    Value base = atom();
    if (!at('^')) return base;
    ++pos_;
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    if (end == pos_) throw ParseError("expected exponent after '^'", pos_);
    if (end - pos_ > 9) throw ParseError("exponent too large", pos_);
    const unsigned long e = std::stoul(std::string(s_.substr(pos_, end - pos_)));
    pos_ = end;
    return power(base, BigInt(e), b_.one(), [this](const Value& x, const Value& y) { return b_.mul(x, y); });
  }

  Value atom() {
    if (pos_ >= s_.size()) throw ParseError("expected a term", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!at(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (auto v = b_.variable(c)) {
      ++pos_;
      return *v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c))) {
      std::optional<Parsed<typename K::Elem>> p;
      try {
        p = field_.parse_coefficient(s_.substr(pos_));
      } catch (const ParseError& e) {
        throw ParseError("bad coefficient", pos_ + e.position());
      }
      if (p) {
        pos_ += p->length;
        return b_.coeff(p->value);
      }
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  const K& field_;
  const B& b_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class K>
struct UnivariateBuilder {
  using Value = Poly<K>;
  K field;
  char var = 'X';
  Value zero() const { return Poly<K>(field); }
  Value one() const { return Poly<K>::one(field); }
  Value coeff(const typename K::Elem& c) const { return Poly<K>::constant(field, c); }
  std::optional<Value> variable(char c) const {
    if (c == var) return Poly<K>::x(field);
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
};

// Position of the top-level '/' separating numerator and denominator, or npos.
inline std::size_t find_ratfunc_slash(std::string_view s, bool fractions) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != '/' || depth != 0) continue;
    const bool digit_before = i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]));
    const bool digit_after = i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]));
    if (fractions && digit_before && digit_after) {
      // Only a fraction if the digits before are a standalone coefficient.
      std::size_t j = i;
      while (j > 0 && std::isdigit(static_cast<unsigned char>(s[j - 1]))) --j;
      if (j == 0 || s[j - 1] != '^') continue;
    }
    return i;
  }
  return std::string_view::npos;
}

}  // namespace detail

template <class K>
Poly<K> parse_poly(const K& field, std::string_view text, char var = 'X') {
  const std::string t = detail::strip_spaces(text);
  detail::UnivariateBuilder<K> b{field, var};
  return detail::ExprParser<K, detail::UnivariateBuilder<K>>(field, b, t).parse_all();
}

/// Splits `num / den` (or a bare polynomial, den = 1) without reducing.
template <class K>
std::pair<Poly<K>, Poly<K>> parse_fraction(const K& field, std::string_view text) {
  const std::string t = detail::strip_spaces(text);
  const std::size_t slash = detail::find_ratfunc_slash(t, !K::is_finite);
  if (slash == std::string::npos) return {parse_poly(field, t), Poly<K>::one(field)};
  auto wrap = [&](std::string_view part, std::size_t offset) {
    try {
      return parse_poly(field, part);
    } catch (const ParseError& e) {
      throw ParseError("bad rational function", offset + e.position());
    }
  };
  return {wrap(std::string_view(t).substr(0, slash), 0), wrap(std::string_view(t).substr(slash + 1), slash + 1)};
}

/// Canonical text of a polynomial in `var`.
template <class K>
std::string format_poly(const Poly<K>& p, char var = 'X') {
  const K& f = p.field();
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    auto c = p.coeffs()[i];
    if (f.is_zero(c)) continue;
    const bool negative = f.is_negative(c);
    if (negative) c = f.neg(c);
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (i == 0 || !f.is_one(c)) out += f.format_coefficient(c);
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace iterdep

#endif  // ITERDEP_TEXT_HPP
