// Copyright 2026 The wmh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmh/errors.hpp"
#include "wmh/verify.hpp"

namespace wmh::cli {

namespace {

using Json = nlohmann::ordered_json;

int parse_int(const std::string& text, const char* what) {
  int v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string(what) + ": not an integer: '" + text + "'");
  }
  return v;
}

Json tuple_json(const IntTuple& t) { return Json(t.values()); }

Json spec_json(const PolytopeSpec& spec) {
  return Json{{"n", spec.n()}, {"k", spec.k()}, {"a", tuple_json(spec.a())},
              {"c", tuple_json(spec.c())}};
}

std::optional<EhrhartResult> closed_form(const PolytopeSpec& spec) {
  const int k = spec.k();
  if (spec.is_hypersimplex() && k <= spec.n() - 1) {
    return ehrhart_hypersimplex_closed(k, spec.n());
  }
  if (spec.is_rkc() && k < spec.c().sum()) return ehrhart_rkc_closed(k, spec.c());
  if (spec.is_pan_shape() && spec.c()[spec.c().size() - 1] == 1) {
    return ehrhart_pan5term_closed(k, spec.c());
  }
  return std::nullopt;
}

void emit_empty(std::ostream& out) { out << Json{{"empty", true}}.dump() << "\n"; }

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PolytopeSpec spec = spec_from(cfg);
  if (is_empty(spec)) {
    emit_empty(out);
    return kEmpty;
  }
  std::optional<EhrhartResult> result;
  if (cfg.method == "closed" || cfg.method == "auto") {
    result = closed_form(spec);
    if (!result && cfg.method == "closed") {
      err << "no closed form applies to " << spec.to_string() << "\n";
      return kUsage;
    }
  }
  if (!result) {
    result = ehrhart_interpolated(spec, cfg.method == "genfun" ? Counter::genfun : Counter::brute);
  }
  const UniPoly& p = result->poly;
  std::vector<BigInt> scaled;
  try {
    scaled = scaled_integer_coeffs(p, spec.n());
  } catch (const std::domain_error&) {
    // reported without the scaled column
  }
  const std::size_t len = p.coeffs().size();
  switch (cfg.format) {
    case Format::plain:
      out << p.to_string() << "\n";
      break;
    case Format::csv:
      out << "m,coeff" << (scaled.empty() ? "" : ",scaled") << "\n";
      for (std::size_t m = 0; m < len; ++m) {
        out << m << "," << to_string(p.coeffs()[m]);
        if (!scaled.empty()) out << "," << to_string(scaled[m]);
        out << "\n";
      }
      break;
    case Format::json: {
      Json j = spec_json(spec);
      j["method"] = std::string(to_string(result->method));
      Json coeffs = Json::array();
      for (const auto& q : p.coeffs()) coeffs.push_back(to_string(q));
      j["coeffs"] = std::move(coeffs);
      if (!scaled.empty()) {
        Json sc = Json::array();
        for (const auto& z : scaled) sc.push_back(to_string(z));
        j["scaled_coeffs"] = std::move(sc);
      }
      out << j.dump() << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const PolytopeSpec spec = spec_from(cfg);
  const bool brute = cfg.counter != "genfun";
  const bool genfun = cfg.counter != "brute";
  const bool empty = is_empty(spec);
  Json rows = Json::array();
  bool agree = true;
  if (!empty) {
    for (long t = 1; t <= cfg.t_max; ++t) {
      Json row{{"t", t}};
      std::optional<BigInt> b, g;
      if (brute) b = count_with(spec, t, Counter::brute);
      if (genfun) g = count_with(spec, t, Counter::genfun);
      if (b) row["brute"] = to_string(*b);
      if (g) row["genfun"] = to_string(*g);
      if (b && g) agree = agree && *b == *g;
      rows.push_back(std::move(row));
    }
  }
  switch (cfg.format) {
    case Format::json: {
      Json j = spec_json(spec);
      if (empty) j["empty"] = true;
      if (brute && genfun) j["agree"] = agree;
      j["rows"] = rows;
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
    case Format::plain: {
      const char* sep = cfg.format == Format::csv ? "," : " ";
      out << "t" << (brute ? std::string(sep) + "brute" : "")
          << (genfun ? std::string(sep) + "genfun" : "") << "\n";
      for (const auto& row : rows) {
        out << row["t"].get<long>();
        if (brute) out << sep << row["brute"].get<std::string>();
        if (genfun) out << sep << row["genfun"].get<std::string>();
        out << "\n";
      }
      break;
    }
  }
  return empty ? kEmpty : kOk;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyRanges ranges;
  ranges.n_max = cfg.n_max;
  ranges.max = cfg.max;
  ranges.c_max = cfg.c_max;
  ranges.c_prime_max = cfg.c_prime_max;
  ranges.enumeration.cap = cfg.cap;
  ranges.enumeration.workers = cfg.workers;
  const SuiteReport rep = run_suite(cfg.suite, ranges);
  switch (cfg.format) {
    case Format::json:
      out << rep.to_json().dump(2) << "\n";
      break;
    case Format::csv:
      out << "instance,pass\n";
      for (const auto& r : rep.instances) {
        out << csv_quote(r.key.dump()) << "," << (r.pass ? "true" : "false") << "\n";
      }
      break;
    case Format::plain: {
      out << rep.suite << ": " << rep.instances.size() << " checked, " << rep.failures()
          << " failed\n";
      for (const auto& r : rep.instances) {
        if (r.pass) continue;
        out << "first failure: " << r.key.dump() << " " << r.detail.dump() << "\n";
        if (r.counterexample) out << "counterexample: " << *r.counterexample << "\n";
        break;
      }
      break;
    }
  }
  return rep.pass() ? kOk : kFailed;
}

}  // namespace

IntTuple parse_tuple(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(parse_int(item, "tuple"));
  if (entries.empty()) throw std::invalid_argument("tuple: empty");
  return IntTuple(std::move(entries));
}

PolytopeSpec spec_from(const RunConfig& cfg) {
  if (!cfg.k) throw std::invalid_argument("--k is required");
  const int k = *cfg.k;
  if (cfg.hypersimplex || cfg.panhandle_r) {
    if (!cfg.n) throw std::invalid_argument("--n is required");
    if (!cfg.a.empty() || !cfg.c.empty()) {
      throw std::invalid_argument("--a/--c cannot be combined with a named family");
    }
    if (cfg.hypersimplex && cfg.panhandle_r) {
      throw std::invalid_argument("--hypersimplex and --panhandle are exclusive");
    }
    return cfg.hypersimplex ? PolytopeSpec::hypersimplex(k, *cfg.n)
                            : PolytopeSpec::panhandle(k, *cfg.panhandle_r, *cfg.n);
  }
  if (cfg.c.empty()) throw std::invalid_argument("--c is required");
  const IntTuple c = parse_tuple(cfg.c);
  PolytopeSpec spec = cfg.a.empty() ? PolytopeSpec::r_kc(k, c)
                                    : PolytopeSpec(k, parse_tuple(cfg.a), c);
  if (cfg.n && *cfg.n != spec.n()) {
    throw std::invalid_argument("--n does not match the sum of --a");
  }
  return spec;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const char* env_cap) {
  RunConfig cfg;
  if (env_cap != nullptr && *env_cap != '\0') {
    try {
      cfg.cap = parse_int(env_cap, "WMH_ENUM_CAP");
    } catch (const std::invalid_argument& e) {
      err << e.what() << "\n";
      return kUsage;
    }
  }

  CLI::App app{"Ehrhart polynomials of weighted multi-hypersimplices", "wmh"};
  app.require_subcommand(1);
  std::string format;
  const std::map<std::string, std::string> formats = {
      {"json", "json"}, {"csv", "csv"}, {"plain", "plain"}};

  auto add_spec_flags = [&](CLI::App* sub) {
    sub->add_flag("--hypersimplex", cfg.hypersimplex, "Delta_{k,n}");
    sub->add_option("--panhandle", cfg.panhandle_r, "Pan_{k,r,n} with the given r")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--n", cfg.n, "dimension")->check(CLI::PositiveNumber);
    sub->add_option("--k", cfg.k, "sum level")->check(CLI::PositiveNumber);
    sub->add_option("--a", cfg.a, "block sizes, comma separated");
    sub->add_option("--c", cfg.c, "block capacities, comma separated");
    sub->add_option("--format", format, "json|csv|plain")->check(CLI::IsMember(formats));
  };

  CLI::App* compute = app.add_subcommand("compute", "Ehrhart polynomial of a spec");
  add_spec_flags(compute);
  compute->add_option("--method", cfg.method, "closed|interp|genfun|auto")
      ->check(CLI::IsMember({"closed", "interp", "genfun", "auto"}));

  CLI::App* count = app.add_subcommand("count", "lattice point counts of dilates");
  add_spec_flags(count);
  count->add_option("--t-max", cfg.t_max, "largest dilation")->check(CLI::PositiveNumber);
  count->add_option("--counter", cfg.counter, "brute|genfun|both")
      ->check(CLI::IsMember({"brute", "genfun", "both"}));

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::PositiveNumber);
  verify->add_option("--max", cfg.max, "largest k and m (worpitzky)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--c-max", cfg.c_max, "largest capacity entry")->check(CLI::PositiveNumber);
  verify->add_option("--c-prime-max", cfg.c_prime_max, "largest c' entry (main)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--workers", cfg.workers, "enumeration threads, 0 = auto");
  verify->add_option("--format", format, "json|csv|plain")->check(CLI::IsMember(formats));

  for (CLI::App* sub : {compute, count, verify}) {
    sub->add_option("--cap", cfg.cap, "enumeration cap on n (env WMH_ENUM_CAP)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  cfg.command = compute->parsed() ? "compute" : count->parsed() ? "count" : "verify";
  if (format.empty()) format = cfg.command == "verify" ? "json" : "plain";
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;

  try {
    if (cfg.command == "compute") return cmd_compute(cfg, out, err);
    if (cfg.command == "count") return cmd_count(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const ResourceError& e) {
    err << Json{{"error", e.what()}, {"cap", cfg.cap}}.dump() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wmh::cli
