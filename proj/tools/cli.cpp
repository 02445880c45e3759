/*
 * Copyright 2026 The rghw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rghw/charsum.hpp"
#include "rghw/error.hpp"
#include "rghw/number_theory.hpp"
#include "rghw/rghw.hpp"
#include "rghw/verify.hpp"

namespace rghw::cli {

namespace {

using nlohmann::json;

struct InstanceArgs {
  std::uint32_t q = 0, k1 = 0, k2 = 0;
  std::uint64_t e1 = 1, e2 = 1;
};

struct OutputArgs {
  std::string format = "json";
  std::string path;
};

struct EnumArgs {
  unsigned workers = 0;
  std::uint64_t cap = 0;
  CLI::Option* cap_opt = nullptr;
};

// A header plus rows of preformatted cells, rendered as CSV or as an
// aligned text table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render_pretty(const Table& t, const std::string& title) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = t.header[c].size();
    for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  if (!title.empty()) os << title << "\n\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    os << '\n';
  };
  line(t.header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& r : t.rows) line(r);
  return os.str();
}

// Doubles are rounded to 10 decimals so that last-bit noise never
// reaches the output; JSON and CSV share this spelling.
double tidy(double x) {
  double r = std::round(x * 1e10) / 1e10;
  return r == 0.0 ? 0.0 : r;
}

std::string num(double x) { return json(tidy(x)).dump(); }

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << *v;
  return os.str();
}

int emit(const std::string& text, const OutputArgs& o, std::ostream& out, std::ostream& err) {
  if (o.path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(o.path, std::ios::binary);
  f << text;
  if (!f) {
    err << "rghw: error: cannot write " << o.path << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

std::uint64_t resolve_cap(const EnumArgs& e) {
  if (e.cap_opt != nullptr && e.cap_opt->count() > 0) {
    if (e.cap == 0) throw Error(ErrorCode::kRangeError, "--cap must be positive");
    return e.cap;
  }
  const char* env = std::getenv("RGHW_CAP");
  if (env == nullptr || *env == '\0') return EnumerationOptions::kDefaultCap;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || ptr != end || v == 0) {
    throw Error(ErrorCode::kRangeError, std::string("RGHW_CAP must be a positive integer, got '") + env + "'");
  }
  return v;
}

EnumerationOptions enumeration(const EnumArgs& e) { return EnumerationOptions{e.workers, resolve_cap(e)}; }

// "3", "1..3" or "1-3"; empty means 1..k1.
std::vector<std::uint32_t> parse_j(const std::string& s, std::uint32_t k1) {
  std::uint32_t lo = 1, hi = k1;
  if (!s.empty()) {
    auto bad = [&] { return Error(ErrorCode::kRangeError, "cannot parse --j '" + s + "'"); };
    auto read = [&](std::string_view part) {
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size()) throw bad();
      return v;
    };
    std::string_view sv = s;
    std::size_t dots = sv.find("..");
    std::size_t dash = sv.find('-');
    if (dots != std::string_view::npos) {
      lo = read(sv.substr(0, dots));
      hi = read(sv.substr(dots + 2));
    } else if (dash != std::string_view::npos) {
      lo = read(sv.substr(0, dash));
      hi = read(sv.substr(dash + 1));
    } else {
      lo = hi = read(sv);
    }
  }
  if (lo < 1 || hi > k1 || lo > hi) {
    throw Error(ErrorCode::kRangeError,
                "j range " + std::to_string(lo) + ".." + std::to_string(hi) + " not within 1.." + std::to_string(k1));
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

RouteSelection parse_routes(const std::vector<std::string>& names) {
  if (names.empty()) return RouteSelection{};
  RouteSelection r{false, false, false};
  for (const auto& n : names) {
    if (n == "all") {
      r = RouteSelection{};
    } else if (n == "bruteforce") {
      r.bruteforce = true;
    } else if (n == "theorem1") {
      r.theorem1 = true;
    } else if (n == "closed_form") {
      r.closed_form = true;
    } else {
      throw Error(ErrorCode::kRangeError, "unknown route '" + n + "'");
    }
  }
  return r;
}

void add_instance_options(CLI::App* app, InstanceArgs& a) {
  app->add_option("--q", a.q, "Base field size (prime power)")->required();
  app->add_option("--k1", a.k1, "Degree of the first extension")->required();
  app->add_option("--k2", a.k2, "Degree of the second extension")->required();
  app->add_option("--e1", a.e1, "Index of alpha1 = gamma1^e1")->capture_default_str();
  app->add_option("--e2", a.e2, "Index of alpha2 = gamma2^e2")->capture_default_str();
}

void add_output_options(CLI::App* app, OutputArgs& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app->add_option("--out", o.path, "Write the report to this file instead of stdout");
}

void add_enum_options(CLI::App* app, EnumArgs& e) {
  app->add_option("--workers", e.workers, "Worker threads (0 = all cores)")->capture_default_str();
  e.cap_opt = app->add_option("--cap", e.cap, "Maximum number of subspaces per enumeration (env RGHW_CAP)");
}

std::string instance_title(const CodeSpec& s) {
  std::ostringstream os;
  os << "q=" << s.q() << " k1=" << s.k1() << " k2=" << s.k2() << " e1=" << s.e1() << " e2=" << s.e2()
     << "  n1=" << s.n1 << " n2=" << s.n2 << " n=" << s.n;
  return os.str();
}

// ---- table -------------------------------------------------------------

struct TableArgs {
  InstanceArgs inst;
  OutputArgs out;
  EnumArgs en;
  std::string j;
  std::vector<std::string> routes;
  bool timings = false;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  CodeSpec spec = build_code({a.inst.q, a.inst.k1, a.inst.k2, a.inst.e1, a.inst.e2});
  const auto js = parse_j(a.j, spec.k1());
  const RouteSelection routes = parse_routes(a.routes);
  const EnumerationOptions opts = enumeration(a.en);

  std::vector<RghwReport> reports;
  bool agree = true;
  for (auto j : js) {
    reports.push_back(compute_report(spec, j, routes, opts));
    agree = agree && reports.back().agree;
  }

  std::string text;
  if (a.out.format == "json") {
    json results = json::array();
    for (const auto& r : reports) results.push_back(report_to_json(r, a.timings));
    text = json{{"spec", spec_to_json(spec)}, {"results", results}}.dump(2) + "\n";
  } else {
    Table t;
    t.header = {"j", "bruteforce", "theorem1", "closed_form", "N", "agree", "closed_form_source"};
    if (a.timings) {
      for (const char* h : {"millis_bruteforce", "millis_theorem1", "millis_closed_form"}) t.header.push_back(h);
    }
    for (const auto& r : reports) {
      std::vector<std::string> row{std::to_string(r.j), opt_str(r.bruteforce), opt_str(r.theorem1),
                                   r.closed_form ? r.closed_form->str() : "", opt_str(r.nj),
                                   r.agree ? "true" : "false", r.closed_form_source.value_or("")};
      if (a.timings) {
        row.push_back(r.bruteforce ? num(r.millis_bruteforce) : "");
        row.push_back(r.theorem1 ? num(r.millis_theorem1) : "");
        row.push_back(r.closed_form ? num(r.millis_closed_form) : "");
      }
      t.rows.push_back(std::move(row));
    }
    if (a.out.format == "csv") {
      // Instance columns repeat on every row so each line stands alone.
      const json s = spec_to_json(spec);
      const std::vector<std::string> keys{"q", "k1", "k2", "e1", "e2", "n1", "n2", "n"};
      t.header.insert(t.header.begin(), keys.begin(), keys.end());
      for (auto& row : t.rows) {
        std::vector<std::string> prefix;
        for (const auto& k : keys) prefix.push_back(s[k].dump());
        row.insert(row.begin(), prefix.begin(), prefix.end());
      }
      text = render_csv(t);
    } else {
      text = render_pretty(t, instance_title(spec));
    }
  }
  int rc = emit(text, a.out, out, err);
  if (rc != kExitOk) return rc;
  if (!agree) {
    err << "rghw: routes disagree\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
  OutputArgs out;
  EnumArgs en;
  std::uint64_t seed = 1;
  std::uint32_t samples = 100;
  std::uint32_t max_dim = 5;
  std::uint32_t max_field = 81;
  std::vector<std::string> suites;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyConfig cfg;
  cfg.seed = a.seed;
  cfg.samples = a.samples;
  cfg.max_dim = a.max_dim;
  cfg.max_field = a.max_field;
  cfg.suites = a.suites;
  cfg.enumeration = enumeration(a.en);
  const auto results = run_verify(cfg);
  const bool passed = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });

  std::string text;
  if (a.out.format == "json") {
    json suites = json::array();
    for (const auto& r : results) {
      suites.push_back(json{{"name", r.name},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"max_residual", r.max_residual},
                            {"passed", r.passed()},
                            {"notes", r.notes}});
    }
    text = json{{"seed", a.seed}, {"samples", a.samples}, {"suites", suites}, {"passed", passed}}.dump(2) + "\n";
  } else {
    Table t;
    t.header = {"suite", "checks", "failures", "max_residual", "passed"};
    for (const auto& r : results) {
      t.rows.push_back({r.name, std::to_string(r.checks), std::to_string(r.failures), json(r.max_residual).dump(),
                        r.passed() ? "true" : "false"});
    }
    if (a.out.format == "csv") {
      text = render_csv(t);
    } else {
      text = render_pretty(t, "seed=" + std::to_string(a.seed) + " samples=" + std::to_string(a.samples));
      for (const auto& r : results) {
        for (const auto& n : r.notes) text += r.name + ": " + n + "\n";
      }
      text += passed ? "all suites passed\n" : "FAILED\n";
    }
  }
  int rc = emit(text, a.out, out, err);
  if (rc != kExitOk) return rc;
  return passed ? kExitOk : kExitDisagreement;
}

// ---- gauss -------------------------------------------------------------

struct GaussArgs {
  OutputArgs out;
  std::uint32_t q = 0;
  std::uint32_t beta = 1;
  CLI::Option* lambda_opt = nullptr;
  std::uint64_t lambda = 0;
  bool dump_field = false;
};

int cmd_gauss(const GaussArgs& a, std::ostream& out, std::ostream& err) {
  auto pp = nt::prime_power(a.q);
  if (!pp) throw Error(ErrorCode::kNonPrime, std::to_string(a.q) + " is not a prime power");
  FieldPtr f = make_field(pp->first, pp->second);
  if (a.beta >= f->size()) {
    throw Error(ErrorCode::kRangeError, "--beta must be a vector index below " + std::to_string(f->size()));
  }
  const Elem beta = f->from_vector(a.beta);
  CharacterHandle gen(f, f->order());
  std::vector<std::uint64_t> lambdas;
  if (a.lambda_opt->count() > 0) {
    if (a.lambda >= f->order()) {
      throw Error(ErrorCode::kRangeError, "--lambda must be below " + std::to_string(f->order()));
    }
    lambdas.push_back(a.lambda);
  } else {
    for (std::uint64_t l = 0; l < f->order(); ++l) lambdas.push_back(l);
  }

  struct Row {
    std::uint64_t lambda;
    double re, im, mod;
  };
  std::vector<Row> rows;
  for (auto l : lambdas) {
    Complex g = gauss_sum(gen.power(l), beta);
    rows.push_back({l, g.real(), g.imag(), std::abs(g)});
  }

  std::string text;
  if (a.out.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back(json{{"lambda", r.lambda}, {"beta", a.beta}, {"re", tidy(r.re)}, {"im", tidy(r.im)},
                         {"modulus", tidy(r.mod)}});
    }
    json doc{{"field", json{{"p", f->p()}, {"m", f->m()}, {"size", f->size()}}}, {"rows", arr}};
    if (a.dump_field) doc["tables"] = field_to_json(*f);
    text = doc.dump(2) + "\n";
  } else {
    Table t;
    t.header = {"lambda", "beta", "re", "im", "modulus"};
    for (const auto& r : rows) {
      t.rows.push_back({std::to_string(r.lambda), std::to_string(a.beta), num(r.re), num(r.im), num(r.mod)});
    }
    text = a.out.format == "csv"
               ? render_csv(t)
               : render_pretty(t, "Gauss sums over GF(" + std::to_string(f->size()) + "), chi(generator) = e^(2 pi i/" +
                                      std::to_string(f->order()) + ")");
  }
  return emit(text, a.out, out, err);
}

// ---- bench -------------------------------------------------------------

struct BenchArgs {
  InstanceArgs inst;
  OutputArgs out;
  EnumArgs en;
  std::string j;
  std::vector<std::string> routes;
  std::uint32_t repeat = 3;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.repeat == 0) throw Error(ErrorCode::kRangeError, "--repeat must be positive");
  CodeSpec spec = build_code({a.inst.q, a.inst.k1, a.inst.k2, a.inst.e1, a.inst.e2});
  const auto js = parse_j(a.j, spec.k1());
  const RouteSelection routes = parse_routes(a.routes);
  const EnumerationOptions opts = enumeration(a.en);

  struct Row {
    std::uint32_t j;
    std::string route;
    std::string value;
    std::vector<double> millis;
  };
  std::vector<Row> rows;
  bool agree = true;
  for (auto j : js) {
    std::vector<RghwReport> runs;
    for (std::uint32_t r = 0; r < a.repeat; ++r) runs.push_back(compute_report(spec, j, routes, opts));
    agree = agree && runs.front().agree;
    auto add = [&](bool on, const std::string& name, std::string value, double RghwReport::*field) {
      if (!on) return;
      Row row{j, name, std::move(value), {}};
      for (const auto& r : runs) row.millis.push_back(r.*field);
      rows.push_back(std::move(row));
    };
    const auto& r0 = runs.front();
    add(routes.bruteforce, "bruteforce", opt_str(r0.bruteforce), &RghwReport::millis_bruteforce);
    add(routes.theorem1, "theorem1", opt_str(r0.theorem1), &RghwReport::millis_theorem1);
    add(routes.closed_form, "closed_form", r0.closed_form ? r0.closed_form->str() : "",
        &RghwReport::millis_closed_form);
  }

  auto stats = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double sum = 0;
    for (double x : v) sum += x;
    return std::pair{v.front(), sum / static_cast<double>(v.size())};
  };

  std::string text;
  if (a.out.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      auto [lo, mean] = stats(r.millis);
      json value = r.value.empty() ? json(nullptr) : json::parse(r.value);
      arr.push_back(json{{"j", r.j}, {"route", r.route}, {"value", value}, {"millis_min", tidy(lo)},
                         {"millis_mean", tidy(mean)}});
    }
    text = json{{"spec", spec_to_json(spec)},
                {"workers", opts.workers},
                {"repeat", a.repeat},
                {"results", arr}}
               .dump(2) +
           "\n";
  } else {
    Table t;
    t.header = {"j", "route", "value", "millis_min", "millis_mean"};
    for (const auto& r : rows) {
      auto [lo, mean] = stats(r.millis);
      t.rows.push_back({std::to_string(r.j), r.route, r.value, num(lo), num(mean)});
    }
    text = a.out.format == "csv" ? render_csv(t) : render_pretty(t, instance_title(spec));
  }
  int rc = emit(text, a.out, out, err);
  if (rc != kExitOk) return rc;
  if (!agree) {
    err << "rghw: routes disagree\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kCapExceeded:
    case ErrorCode::kSizeCapExceeded:
      return kExitCapExceeded;
    case ErrorCode::kInternal:
    case ErrorCode::kPrecisionFailure:
      return kExitDisagreement;
    default:
      return kExitBadInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative generalized Hamming weights of two-nonzero cyclic codes", "rghw"};
  app.require_subcommand(1);

  TableArgs table;
  auto* t = app.add_subcommand("table", "Tabulate M_j for a code through the selected routes");
  add_instance_options(t, table.inst);
  add_output_options(t, table.out);
  add_enum_options(t, table.en);
  t->add_option("--j", table.j, "Single j or range lo..hi (default 1..k1)");
  t->add_option("--routes", table.routes, "all, bruteforce, theorem1, closed_form")->delimiter(',');
  t->add_flag("--timings", table.timings, "Include wall-clock milliseconds per route");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the cross-validation suites");
  add_output_options(v, verify.out);
  add_enum_options(v, verify.en);
  v->add_option("--seed", verify.seed, "Seed for sampled subspaces")->capture_default_str();
  v->add_option("--samples", verify.samples, "Random subspaces per instance")->capture_default_str();
  v->add_option("--max-dim", verify.max_dim, "Skip instances with k1 + k2 above this")->capture_default_str();
  v->add_option("--max-field", verify.max_field, "Largest field for Gauss-sum checks")->capture_default_str();
  v->add_option("--suite", verify.suites, "Restrict to these suites")->delimiter(',');

  GaussArgs gauss;
  auto* g = app.add_subcommand("gauss", "List Gauss sums G(chi^lambda; beta) over GF(q)");
  add_output_options(g, gauss.out);
  g->add_option("--q", gauss.q, "Field size (prime power)")->required();
  g->add_option("--beta", gauss.beta, "beta as a vector index 0..q-1")->capture_default_str();
  gauss.lambda_opt = g->add_option("--lambda", gauss.lambda, "Single character power (default: all)");
  g->add_flag("--dump-field", gauss.dump_field, "Include exp/log/Zech tables in JSON output");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time the routes on one code");
  add_instance_options(b, bench.inst);
  add_output_options(b, bench.out);
  add_enum_options(b, bench.en);
  b->add_option("--j", bench.j, "Single j or range lo..hi (default 1..k1)");
  b->add_option("--routes", bench.routes, "all, bruteforce, theorem1, closed_form")->delimiter(',');
  b->add_option("--repeat", bench.repeat, "Runs per route")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (t->parsed()) return cmd_table(table, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (g->parsed()) return cmd_gauss(gauss, out, err);
    return cmd_bench(bench, out, err);
  } catch (const Error& e) {
    err << "rghw: error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace rghw::cli
