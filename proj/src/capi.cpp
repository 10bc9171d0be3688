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


#include "iterdep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "iterdep/bivar.hpp"
#include "iterdep/field.hpp"
#include "iterdep/highorder.hpp"
#include "iterdep/iterinv.hpp"
#include "iterdep/mdep.hpp"
#include "iterdep/polyfactor.hpp"
#include "iterdep/ratfunc.hpp"
#include "iterdep/text.hpp"

using iterdep::AnyField;
using iterdep::BigInt;
using iterdep::BigRational;
using iterdep::Rationals;
using Json = nlohmann::ordered_json;

struct itd_field {
  AnyField field;
};

using AnyRatfunc = std::variant<iterdep::RationalFunction<iterdep::PrimeField>,
                                iterdep::RationalFunction<iterdep::ExtField>,
                                iterdep::RationalFunction<Rationals>>;

struct itd_ratfunc {
  AnyRatfunc f;
};

struct itd_shift_system {
  std::vector<iterdep::BivariateFunction> functions;
};

namespace {

thread_local std::string last_error;

itd_status fail(itd_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs `body`, mapping library exceptions to status codes.
template <class F>
itd_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return ITD_OK;
  } catch (const iterdep::PreconditionError& e) {
    return fail(ITD_ERR_PRECONDITION, e.what());
  } catch (const iterdep::RefusedError& e) {
    return fail(ITD_ERR_REFUSED, e.what());
  } catch (const iterdep::InvariantViolation& e) {
    return fail(ITD_ERR_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ITD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ITD_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw iterdep::PreconditionError(std::string(name) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = dup_string(j.dump(2)); }

Json big(const BigInt& v) {
  if (iterdep::fits_i64(v)) return v.get_si();
  return v.get_str();
}

std::string rational_text(const BigRational& r) { return r.get_str(); }

Json invariant(const iterdep::InvariantValue& v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

AnyRatfunc make_ratfunc(const AnyField& field, std::string_view text) {
  return std::visit([&](const auto& k) -> AnyRatfunc { return iterdep::parse_ratfunc(k, text); }, field);
}

template <class K>
std::string field_name(const K& k) {
  return k.describe();
}

template <class K>
Json profile_json(const iterdep::IterateProfile& p, const iterdep::ExceptionalStatus& s) {
  Json j;
  j["e"] = invariant(p.e);
  j["epsilon"] = invariant(p.epsilon);
  j["mu"] = invariant(p.mu);
  j["nu"] = invariant(p.nu);
  j["delta"] = p.delta ? big(*p.delta) : Json(nullptr);
  j["T"] = p.T ? big(*p.T) : Json(nullptr);
  j["exceptional"] = iterdep::tag_name(s.tag);
  j["separable"] = s.separable;
  return j;
}

Json status_detail(const iterdep::ExceptionalStatus& s) {
  using iterdep::ExceptionalTag;
  Json j = Json::object();
  switch (s.tag) {
    case ExceptionalTag::frobenius_binomial:
      j["a"] = s.a;
      j["b"] = s.b;
      j["ell"] = s.ell;
      break;
    case ExceptionalTag::frobenius_moebius:
      j["L"] = s.L;
      j["ell"] = s.ell;
      break;
    case ExceptionalTag::conjugate_to_inv_power:
      j["alpha"] = s.alpha;
      j["beta"] = s.beta;
      break;
    default:
      break;
  }
  return j;
}

iterdep::OrbitOptions orbit_options(std::uint64_t cutoff) {
  iterdep::OrbitOptions opt;
  if (cutoff != 0) opt.cutoff = cutoff;
  return opt;
}

// Iterates up to k are printed only while their degree stays moderate.
void check_iterate_size(int d, unsigned k) {
  if (iterdep::ipow(BigInt(d), k) > BigInt(1 << 16)) throw iterdep::RefusedError("iterate degree exceeds 65536");
}

template <class K>
Json analyze_impl(const iterdep::RationalFunction<K>& f, unsigned k_max, unsigned shown, std::uint64_t cutoff) {
  if (f.degree() < 1) throw iterdep::PreconditionError("analyze: f must be nonconstant");
  const auto profile = iterdep::orbit_invariants(f, orbit_options(cutoff));
  const auto status = iterdep::classify_exceptional(f);
  Json j;
  j["field"] = field_name(f.field());
  j["f"] = iterdep::format_ratfunc(f);
  j["d"] = f.degree();
  j.update(profile_json<K>(profile, status));
  j["admissible"] = f.degree() >= 2 && iterdep::is_admissible(status);
  j["exceptional_detail"] = status_detail(status);
  check_iterate_size(f.degree(), std::max(k_max, shown));
  Json lt = Json::array();
  const auto terms = iterdep::lowest_term_profile(f, k_max);
  for (std::size_t i = 0; i < terms.size(); ++i) lt.push_back({{"k", i + 1}, {"S", terms[i].S}, {"T", terms[i].T}});
  j["lowest_terms"] = lt;
  Json it = Json::array();
  if (shown > 0)
    for (const auto& g : iterdep::iterates(f, shown)) it.push_back(iterdep::format_ratfunc(g));
  j["iterates"] = it;
  return j;
}

template <class K>
Json psi_impl(const iterdep::RationalFunction<K>& f, unsigned n, long search_bound, std::uint64_t cutoff) {
  const auto profile = iterdep::orbit_invariants(f, orbit_options(cutoff));
  const auto status = iterdep::classify_exceptional(f);
  const auto b = iterdep::psi_lower_bound(f, n, profile, status);
  Json j;
  j["field"] = field_name(f.field());
  j["f"] = iterdep::format_ratfunc(f);
  j["n"] = n;
  j["branch"] = b.branch;
  j["j"] = b.j;
  j["bound"] = big(b.bound);
  j["profile"] = profile_json<K>(profile, status);
  if (search_bound > 0) {
    const auto s = iterdep::psi_search(f, n, search_bound);
    if (BigInt(s.min_degree) < b.bound)
      throw iterdep::InvariantViolation("psi: exhaustive minimum is below the lower bound");
    j["search"] = {{"K", search_bound}, {"min_degree", s.min_degree}, {"argmin", s.argmin}};
  } else {
    j["search"] = nullptr;
  }
  return j;
}

template <class K>
Json dependence_json(const iterdep::DependenceResult<K>& r) {
  Json j;
  j["dependent"] = r.dependent;
  j["witness"] = r.dependent ? Json(r.witness) : Json(nullptr);
  Json degrees = Json::array(), basis = Json::array();
  for (const auto& p : r.basis.basis) {
    degrees.push_back(p.degree());
    basis.push_back(iterdep::format_poly(p));
  }
  j["basis_degrees"] = degrees;
  j["basis"] = basis;
  j["rank"] = r.rank;
  return j;
}

// Over Q only the squarefree decomposition is available; "complete" says
// whether the listed factors are irreducible.
template <class K>
Json factor_impl(const K& k, std::string_view text, std::uint64_t seed) {
  const auto p = iterdep::parse_poly(k, text);
  if (p.is_zero()) throw iterdep::PreconditionError("factor: zero polynomial");
  iterdep::Factorization<K> fac{p.lead(), {}};
  if constexpr (K::is_finite) {
    fac = iterdep::factor(p, seed);
  } else {
    if (p.degree() > 0) fac.factors = iterdep::squarefree_decomposition(p);
  }
  if (!(iterdep::expand(k, fac) == p)) throw iterdep::InvariantViolation("factor: product does not reassemble");
  Json j;
  j["field"] = field_name(k);
  j["f"] = iterdep::format_poly(p);
  j["unit"] = k.format(fac.unit);
  Json list = Json::array();
  for (const auto& fp : fac.factors)
    list.push_back({{"factor", iterdep::format_poly(fp.factor)}, {"multiplicity", fp.multiplicity}});
  j["factors"] = list;
  j["complete"] = K::is_finite;
  j["seed"] = seed;
  return j;
}

template <class K>
Json certificate_json(const iterdep::ConstructResult<K>& r, const iterdep::HighOrderParams& p) {
  Json j;
  j["q"] = p.q;
  j["n"] = p.n;
  j["d"] = p.d;
  j["m"] = p.m;
  j["t"] = p.t;
  if (r.certificate) {
    const auto& c = *r.certificate;
    j["g"] = iterdep::format_poly(c.g);
    j["h"] = iterdep::format_poly(c.h);
    j["factor"] = iterdep::format_poly(c.factor);
    j["order_bound"] = big(p.order_bound);
    j["verified_order"] = c.verified_order ? big(*c.verified_order) : Json(nullptr);
    j["frobenius_ok"] = c.frobenius_ok;
    j["found"] = true;
    j["pair_index"] = c.pair_index;
  } else {
    j["order_bound"] = big(p.order_bound);
    j["found"] = false;
  }
  j["lambe_bound"] = rational_text(p.lambe_bound);
  j["tried"] = r.tried;
  j["exhausted"] = r.exhausted;
  return j;
}

template <class K>
Json high_order_impl(const K& k, std::uint64_t n, std::uint64_t pair_limit, bool verify,
                     std::optional<std::uint64_t> shuffle, std::uint64_t seed) {
  const auto params = iterdep::derive_params(k.size(), n);
  auto r = iterdep::construct(k, n, pair_limit, seed, shuffle);
  if (r.certificate) {
    if (!r.certificate->frobenius_ok) throw iterdep::InvariantViolation("high-order: Frobenius identities failed");
    if (verify) iterdep::verify_order(*r.certificate);
  }
  Json j = certificate_json(r, params);
  j["seed"] = seed;
  j["shuffle_seed"] = shuffle ? Json(*shuffle) : Json(nullptr);
  return j;
}

template <class K>
Json scan_impl(const K& k, std::uint64_t from, std::uint64_t to, std::uint64_t sample, std::uint64_t seed) {
  const auto rep = iterdep::conjecture_scan(k, from, to, sample, seed);
  Json j;
  j["q"] = rep.q;
  j["n_from"] = rep.n_from;
  j["n_to"] = rep.n_to;
  j["sample"] = rep.sample;
  j["seed"] = rep.seed;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row;
    row["n"] = r.n;
    row["d"] = r.d;
    row["m"] = r.m;
    row["exhaustive"] = r.exhaustive;
    row["tried"] = r.tried;
    row["coprime"] = r.coprime;
    row["admissible"] = r.admissible;
    row["successes"] = r.successes;
    row["success_fraction"] = r.success_fraction;
    row["inverse_n"] = r.inverse_n;
    row["coprime_fraction"] = r.coprime_fraction;
    row["t_estimate"] = rational_text(r.t_estimate);
    row["eq9_value"] = rational_text(r.eq9_value);
    row["first_success"] =
        r.first_success ? Json{{"g", r.first_success->first}, {"h", r.first_success->second}} : Json(nullptr);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json report_json(const iterdep::ShiftBoundReport& r) {
  Json j;
  Json pairs = Json::array();
  for (const auto& p : r.r)
    pairs.push_back({{"i", p.i + 1}, {"j", p.j + 1}, {"degree", p.degree ? Json(*p.degree) : Json(nullptr)}});
  j["resultants"] = pairs;
  j["E"] = r.E;
  j["alpha"] = r.alpha;
  j["d_n"] = r.d_n;
  j["e_n"] = r.e_n;
  j["degree_bound"] = r.degree_bound;
  j["count_bound"] = r.count_bound ? big(*r.count_bound) : Json(nullptr);
  j["e_upper"] = r.e_upper;
  j["valid"] = r.valid();
  Json deg = Json::array();
  for (const auto& [a, b] : r.degenerate_pairs) deg.push_back({a + 1, b + 1});
  j["degenerate_pairs"] = deg;
  return j;
}

Json functions_json(const itd_shift_system* s) {
  Json list = Json::array();
  for (const auto& f : s->functions) list.push_back(iterdep::format_bivariate_function(f));
  return list;
}

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw iterdep::PreconditionError("empty coefficient");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw iterdep::PreconditionError("bad rational coefficient '" + text + "'");
  BigRational r;
  if (r.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0 || r.get_den() == 0)
    throw iterdep::PreconditionError("bad rational coefficient '" + text + "'");
  r.canonicalize();
  return r;
}

// "a..b" with integers, or a comma-separated list of rationals.
std::vector<BigRational> parse_coeff_set(std::string_view text) {
  std::string t = iterdep::detail::strip_spaces(text);
  std::vector<BigRational> out;
  if (const auto dots = t.find(".."); dots != std::string::npos) {
    const BigRational lo = parse_rational(t.substr(0, dots)), hi = parse_rational(t.substr(dots + 2));
    if (lo.get_den() != 1 || hi.get_den() != 1) throw iterdep::PreconditionError("coefficient range needs integers");
    if (hi < lo) throw iterdep::PreconditionError("empty coefficient range");
    if (hi - lo > 1000) throw iterdep::RefusedError("coefficient range wider than 1001 values");
    for (BigInt v = lo.get_num(); v <= hi.get_num(); ++v) out.emplace_back(v);
    return out;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const BigRational r = parse_rational(item);
    bool seen = false;
    for (const auto& x : out) seen = seen || x == r;
    if (!seen) out.push_back(r);
  }
  if (out.empty()) throw iterdep::PreconditionError("empty coefficient set");
  return out;
}

}  // namespace

extern "C" {

const char* itd_version(void) { return "0.1.0"; }

const char* itd_last_error(void) { return last_error.c_str(); }

void itd_string_free(char* s) { std::free(s); }

itd_status itd_field_new(const char* descriptor, itd_field** out) {
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    *out = new itd_field{iterdep::parse_field_descriptor(descriptor)};
  });
}

itd_status itd_field_describe(const itd_field* field, char** out) {
  return guarded([&] {
    require(field, "field");
    require(out, "out");
    *out = dup_string(iterdep::describe(field->field));
  });
}

void itd_field_free(itd_field* field) { delete field; }

itd_status itd_ratfunc_parse(const itd_field* field, const char* text, itd_ratfunc** out) {
  return guarded([&] {
    require(field, "field");
    require(text, "text");
    require(out, "out");
    *out = new itd_ratfunc{make_ratfunc(field->field, text)};
  });
}

itd_status itd_ratfunc_format(const itd_ratfunc* f, char** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = dup_string(std::visit([](const auto& g) { return iterdep::format_ratfunc(g); }, f->f));
  });
}

itd_status itd_ratfunc_degree(const itd_ratfunc* f, int* out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = std::visit([](const auto& g) { return g.degree(); }, f->f);
  });
}

itd_status itd_ratfunc_iterate(const itd_ratfunc* f, unsigned k, itd_ratfunc** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    check_iterate_size(std::visit([](const auto& g) { return g.degree(); }, f->f), k);
    *out = new itd_ratfunc{std::visit([&](const auto& g) -> AnyRatfunc { return iterdep::iterate(g, k); }, f->f)};
  });
}

itd_status itd_ratfunc_compose(const itd_ratfunc* u, const itd_ratfunc* f, itd_ratfunc** out) {
  return guarded([&] {
    require(u, "u");
    require(f, "f");
    require(out, "out");
    *out = new itd_ratfunc{std::visit(
        [](const auto& a, const auto& b) -> AnyRatfunc {
          using A = std::decay_t<decltype(a)>;
          using B = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<A, B>) {
            if (!(a.field() == b.field())) throw iterdep::PreconditionError("compose: functions over different fields");
            return iterdep::compose(a, b);
          } else {
            throw iterdep::PreconditionError("compose: functions over different fields");
          }
        },
        u->f, f->f)};
  });
}

void itd_ratfunc_free(itd_ratfunc* f) { delete f; }

itd_status itd_analyze(const itd_ratfunc* f, unsigned k_max, unsigned iterates_shown, uint64_t cutoff, char** json) {
  return guarded([&] {
    require(f, "f");
    require(json, "json");
    emit(std::visit([&](const auto& g) { return analyze_impl(g, k_max, iterates_shown, cutoff); }, f->f), json);
  });
}

itd_status itd_psi(const itd_ratfunc* f, unsigned n, long search_bound, uint64_t cutoff, char** json) {
  return guarded([&] {
    require(f, "f");
    require(json, "json");
    emit(std::visit([&](const auto& g) { return psi_impl(g, n, search_bound, cutoff); }, f->f), json);
  });
}

itd_status itd_dep_test(const itd_ratfunc* const* inputs, size_t count, char** json) {
  return guarded([&] {
    require(json, "json");
    if (count == 0) throw iterdep::PreconditionError("dep-test: no functions");
    require(inputs, "inputs");
    for (size_t i = 0; i < count; ++i) require(inputs[i], "input");
    emit(std::visit(
             [&](const auto& first) {
               using R = std::decay_t<decltype(first)>;
               std::vector<R> fs;
               Json listed = Json::array();
               for (size_t i = 0; i < count; ++i) {
                 const R* g = std::get_if<R>(&inputs[i]->f);
                 if (g == nullptr || !(g->field() == first.field()))
                   throw iterdep::PreconditionError("dep-test: functions over different fields");
                 fs.push_back(*g);
                 listed.push_back(iterdep::format_ratfunc(*g));
               }
               Json j;
               j["field"] = field_name(first.field());
               j["inputs"] = listed;
               j.update(dependence_json(iterdep::is_mult_dependent(fs)));
               return j;
             },
             inputs[0]->f),
         json);
  });
}

itd_status itd_factor(const itd_field* field, const char* poly, uint64_t seed, char** json) {
  return guarded([&] {
    require(field, "field");
    require(poly, "poly");
    require(json, "json");
    emit(std::visit([&](const auto& k) { return factor_impl(k, poly, seed); }, field->field), json);
  });
}

itd_status itd_high_order(uint64_t q, uint64_t n, uint64_t pair_limit, int verify, int shuffle, uint64_t shuffle_seed,
                          uint64_t seed, char** json) {
  return guarded([&] {
    require(json, "json");
    const AnyField field = iterdep::finite_field_of_size(q);
    const std::optional<std::uint64_t> sh = shuffle ? std::optional<std::uint64_t>(shuffle_seed) : std::nullopt;
    emit(std::visit(
             [&](const auto& k) -> Json {
               using K = std::decay_t<decltype(k)>;
               if constexpr (K::is_finite) return high_order_impl(k, n, pair_limit, verify != 0, sh, seed);
               else throw iterdep::PreconditionError("high-order: field must be finite");
             },
             field),
         json);
  });
}

itd_status itd_scan(uint64_t q, uint64_t n_from, uint64_t n_to, uint64_t sample, uint64_t seed, char** json) {
  return guarded([&] {
    require(json, "json");
    const AnyField field = iterdep::finite_field_of_size(q);
    emit(std::visit(
             [&](const auto& k) -> Json {
               using K = std::decay_t<decltype(k)>;
               if constexpr (K::is_finite) return scan_impl(k, n_from, n_to, sample, seed);
               else throw iterdep::PreconditionError("scan: field must be finite");
             },
             field),
         json);
  });
}

itd_status itd_shift_system_parse(const char* text, itd_shift_system** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto s = std::make_unique<itd_shift_system>();
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (iterdep::detail::strip_spaces(line).empty()) continue;
      try {
        s->functions.push_back(iterdep::parse_bivariate_function(line));
      } catch (const iterdep::PreconditionError& e) {
        throw iterdep::PreconditionError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (s->functions.empty()) throw iterdep::PreconditionError("no functions given");
    *out = s.release();
  });
}

size_t itd_shift_system_size(const itd_shift_system* s) { return s ? s->functions.size() : 0; }

void itd_shift_system_free(itd_shift_system* s) { delete s; }

itd_status itd_shift_bound(const itd_shift_system* s, char** json) {
  return guarded([&] {
    require(s, "system");
    require(json, "json");
    Json j;
    j["functions"] = functions_json(s);
    j.update(report_json(iterdep::shift_bound_report(s->functions)));
    emit(j, json);
  });
}

itd_status itd_shift_search(const itd_shift_system* s, int max_deg, const char* coeffs, char** json) {
  return guarded([&] {
    require(s, "system");
    require(coeffs, "coeffs");
    require(json, "json");
    const auto set = parse_coeff_set(coeffs);
    const auto r = iterdep::shift_search(s->functions, max_deg, set);
    Json j;
    j["functions"] = functions_json(s);
    j["report"] = report_json(r.report);
    j["requested_max_deg"] = max_deg;
    j["max_deg"] = r.max_degree;
    j["clipped"] = r.clipped;
    Json cs = Json::array();
    for (const auto& c : set) cs.push_back(rational_text(c));
    j["coeff_set"] = cs;
    j["candidates"] = r.candidates;
    j["skipped"] = r.skipped;
    Json found = Json::array();
    for (const auto& f : r.found) found.push_back({{"u", iterdep::format_poly(f.u)}, {"witness", f.witness}});
    j["found"] = found;
    j["exhaustive_over_q"] = false;
    emit(j, json);
  });
}

itd_status itd_shift_dep_test(const itd_shift_system* s, const char* u, char** json) {
  return guarded([&] {
    require(s, "system");
    require(u, "u");
    require(json, "json");
    const Rationals QQ;
    const auto up = iterdep::parse_poly(QQ, u);
    const auto r = iterdep::verify_shift(s->functions, up);
    Json j;
    j["field"] = "Q";
    j["functions"] = functions_json(s);
    j["u"] = iterdep::format_poly(up);
    Json subs = Json::array();
    for (const auto& f : s->functions)
      subs.push_back(iterdep::format_ratfunc(
          iterdep::RationalFunction<Rationals>(iterdep::substitute_y(f.G, up), iterdep::substitute_y(f.H, up))));
    j["inputs"] = subs;
    j.update(dependence_json(r));
    emit(j, json);
  });
}

itd_status itd_mason(const char* a, const char* b, const char* c, char** json) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(c, "c");
    require(json, "json");
    const Rationals QQ;
    const auto pa = iterdep::parse_poly(QQ, a), pb = iterdep::parse_poly(QQ, b), pc = iterdep::parse_poly(QQ, c);
    const auto r = iterdep::mason_check(pa, pb, pc);
    Json j;
    j["a"] = iterdep::format_poly(pa);
    j["b"] = iterdep::format_poly(pb);
    j["c"] = iterdep::format_poly(pc);
    j["max_degree"] = r.max_degree;
    j["rad_degree"] = r.rad_degree;
    j["holds"] = r.holds;
    emit(j, json);
  });
}

}  // extern "C"
