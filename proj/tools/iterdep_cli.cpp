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


// Command-line front end. Every subcommand calls the C API, which returns a
// JSON document; --json prints it as is, otherwise it is rendered as
// indented "key: value" text.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iterdep.h"

namespace {

using Json = nlohmann::ordered_json;

// Status carried out of a subcommand; exit code equals the C status.
struct Failure {
  int code;
  std::string message;
};

void check(itd_status s) {
  if (s != ITD_OK) throw Failure{static_cast<int>(s), itd_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FieldPtr = std::unique_ptr<itd_field, Deleter<itd_field, itd_field_free>>;
using RatfuncPtr = std::unique_ptr<itd_ratfunc, Deleter<itd_ratfunc, itd_ratfunc_free>>;
using SystemPtr = std::unique_ptr<itd_shift_system, Deleter<itd_shift_system, itd_shift_system_free>>;

std::string take(char* s) {
  std::string out(s);
  itd_string_free(s);
  return out;
}

FieldPtr field(const std::string& descriptor) {
  itd_field* f = nullptr;
  check(itd_field_new(descriptor.c_str(), &f));
  return FieldPtr(f);
}

RatfuncPtr ratfunc(const itd_field* k, const std::string& text) {
  itd_ratfunc* f = nullptr;
  check(itd_ratfunc_parse(k, text.c_str(), &f));
  return RatfuncPtr(f);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{ITD_ERR_PRECONDITION, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-empty lines with '#' comments removed.
std::vector<std::string> function_lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

SystemPtr shift_system(const std::string& path) {
  itd_shift_system* s = nullptr;
  check(itd_shift_system_parse(read_file(path).c_str(), &s));
  return SystemPtr(s);
}

std::string scalar(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : j.items()) {
    if (flat(v)) {
      if (!v.is_array()) {
        os << pad << key << ": " << scalar(v) << "\n";
        continue;
      }
      os << pad << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
      os << "]\n";
    } else if (v.is_object()) {
      os << pad << key << ":\n";
      render(os, v, indent + 2);
    } else {
      os << pad << key << ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          os << pad << "  -\n";
          render(os, item, indent + 4);
        } else if (item.is_array()) {
          os << pad << "  - [";
          for (std::size_t i = 0; i < item.size(); ++i) os << (i ? ", " : "") << scalar(item[i]);
          os << "]\n";
        } else {
          os << pad << "  - " << scalar(item) << "\n";
        }
      }
    }
  }
}

void output(char* raw, bool json) {
  const std::string text = take(raw);
  if (json) {
    std::cout << text << "\n";
    return;
  }
  render(std::cout, Json::parse(text), 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with iterated rational functions"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print JSON instead of text");

  std::string field_desc = "Q", f_text;
  unsigned n = 0;
  std::uint64_t seed = 0, cutoff = 0;

  auto* analyze = app.add_subcommand("analyze", "orbit invariants, exceptional shape, valuations of iterates");
  analyze->add_option("--field", field_desc, "Q | Fq:p | Fq:p^k[:modulus]");
  analyze->add_option("--f", f_text, "rational function g/h")->required();
  unsigned analyze_n = 3;
  analyze->add_option("--n", analyze_n, "iterates to list (default 3)");
  analyze->add_option("--cutoff", cutoff, "orbit steps over Q (default 64)");

  auto* psi = app.add_subcommand("psi", "degree lower bound for power products of iterates");
  psi->add_option("--field", field_desc);
  psi->add_option("--f", f_text)->required();
  psi->add_option("--n", n)->required();
  long psi_k = 0;
  psi->add_option("--K", psi_k, "also search exponents in [-K, K]");
  psi->add_option("--cutoff", cutoff);

  auto* dep = app.add_subcommand("dep-test", "multiplicative dependence");
  dep->add_option("--field", field_desc);
  std::vector<std::string> dep_f;
  std::string functions_file, subst;
  dep->add_option("--f", dep_f, "function (repeatable)");
  dep->add_option("--functions", functions_file, "file, one function per line");
  dep->add_option("--subst", subst, "monic u: test F_i(X, u(X)) for bivariate F_i over Q");

  auto* high = app.add_subcommand("high-order", "certified high-order element of F_q[X]/(P)");
  std::uint64_t q = 0, pair_limit = 0, shuffle = 0;
  std::uint64_t n64 = 0;
  bool verify = false;
  high->add_option("--q", q)->required();
  high->add_option("--n", n64)->required();
  high->add_option("--pair-limit", pair_limit, "stop after L pairs (0: no limit)");
  high->add_flag("--verify", verify, "compute the exact order");
  auto* shuffle_opt = high->add_option("--shuffle", shuffle, "permute the pair order with this seed");
  high->add_option("--seed", seed, "factorization seed (default 0)");

  auto* scan = app.add_subcommand("scan", "construction success statistics over a range of n");
  std::uint64_t n_from = 0, n_to = 0, sample = 0;
  scan->add_option("--q", q)->required();
  scan->add_option("--n-from", n_from)->required();
  scan->add_option("--n-to", n_to)->required();
  scan->add_option("--sample", sample, "pairs per n (0: exhaustive)");
  scan->add_option("--seed", seed);

  auto* sbound = app.add_subcommand("shift-bound", "degree and count bounds for dependent shifts");
  sbound->add_option("--functions", functions_file)->required();

  auto* ssearch = app.add_subcommand("shift-search", "bounded search for dependent shifts");
  int max_deg = 0;
  std::string coeffs = "-2..2";
  ssearch->add_option("--functions", functions_file)->required();
  ssearch->add_option("--max-deg", max_deg)->required();
  ssearch->add_option("--coeffs", coeffs, "a..b or a comma-separated list (default -2..2)");
  ssearch->footer("Only monic u with lower coefficients in the given set are tried; finding none there "
                  "says nothing about other u over Q.");

  auto* mason = app.add_subcommand("mason", "check max deg <= deg rad(ABC) - 1 for A + B + C = 0");
  std::string a, b, c;
  mason->add_option("--a", a)->required();
  mason->add_option("--b", b)->required();
  mason->add_option("--c", c)->required();

  auto* fac = app.add_subcommand("factor", "factor into monic irreducibles");
  fac->add_option("--field", field_desc);
  fac->add_option("--f", f_text)->required();
  fac->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ITD_ERR_PRECONDITION;
  }

  try {
    char* out = nullptr;
    if (*analyze) {
      auto k = field(field_desc);
      auto f = ratfunc(k.get(), f_text);
      check(itd_analyze(f.get(), analyze_n, analyze_n, cutoff, &out));
    } else if (*psi) {
      auto k = field(field_desc);
      auto f = ratfunc(k.get(), f_text);
      check(itd_psi(f.get(), n, psi_k, cutoff, &out));
    } else if (*dep) {
      if (!subst.empty()) {
        if (functions_file.empty()) throw Failure{ITD_ERR_PRECONDITION, "--subst needs --functions"};
        auto s = shift_system(functions_file);
        check(itd_shift_dep_test(s.get(), subst.c_str(), &out));
      } else {
        auto k = field(field_desc);
        std::vector<std::string> texts = dep_f;
        if (!functions_file.empty())
          for (auto& line : function_lines(read_file(functions_file))) texts.push_back(line);
        std::vector<RatfuncPtr> owned;
        std::vector<const itd_ratfunc*> raw;
        for (const auto& t : texts) {
          owned.push_back(ratfunc(k.get(), t));
          raw.push_back(owned.back().get());
        }
        check(itd_dep_test(raw.data(), raw.size(), &out));
      }
    } else if (*high) {
      check(itd_high_order(q, n64, pair_limit, verify, shuffle_opt->count() > 0, shuffle, seed, &out));
    } else if (*scan) {
      check(itd_scan(q, n_from, n_to, sample, seed, &out));
    } else if (*sbound) {
      auto s = shift_system(functions_file);
      check(itd_shift_bound(s.get(), &out));
    } else if (*ssearch) {
      auto s = shift_system(functions_file);
      check(itd_shift_search(s.get(), max_deg, coeffs.c_str(), &out));
      const std::string text(out);
      const Json j = Json::parse(text);
      if (j["clipped"].get<bool>())
        std::cerr << "note: --max-deg clipped to the degree bound " << j["max_deg"].get<int>() << "\n";
    } else if (*mason) {
      check(itd_mason(a.c_str(), b.c_str(), c.c_str(), &out));
    } else if (*fac) {
      auto k = field(field_desc);
      check(itd_factor(k.get(), f_text.c_str(), seed, &out));
    }
    output(out, json);
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
}
