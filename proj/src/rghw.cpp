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

#include "rghw/rghw.hpp"

#include <chrono>
#include <limits>

#include "rghw/error.hpp"

namespace rghw {

namespace {

void check_cap(std::uint32_t k, std::uint32_t dim, std::uint64_t q, std::uint64_t cap) {
  BigInt count = gaussian_binomial(k, dim, q);
  if (count > cap) {
    throw Error(ErrorCode::kCapExceeded, "enumeration of " + count.str() +
                                             " subspaces exceeds the cap of " + std::to_string(cap));
  }
}

void check_j(std::uint32_t j, std::uint32_t hi) {
  if (j < 1 || j > hi) {
    throw Error(ErrorCode::kRangeError, "j = " + std::to_string(j) + " outside 1.." + std::to_string(hi));
  }
}

struct Partial {
  bool has = false;
  std::uint64_t value = 0;
  SubspaceBasis witness;
  std::uint64_t candidates = 0;
};

// Min (or max) of score(H) over j-dimensional H passing `accept`, first
// optimum in enumeration order wins.
template <class Accept, class Score>
SearchResult search(const CodeSpec& spec, std::uint32_t dim, bool minimize, const EnumerationOptions& opts,
                    Accept accept, Score score) {
  SubspaceEnumerator en(spec.dim(), dim, spec.base, Ambient::kProduct);
  auto partials = map_partitions<Partial>(en, opts.workers, [&](std::size_t idx) {
    Partial p;
    en.for_each_in_partition(idx, [&](const SubspaceBasis& h) {
      if (!accept(h)) return;
      ++p.candidates;
      const std::uint64_t s = score(h);
      if (!p.has || (minimize ? s < p.value : s > p.value)) {
        p.has = true;
        p.value = s;
        p.witness = h;
      }
    });
    return p;
  });
  SearchResult out;
  bool has = false;
  for (auto& p : partials) {
    out.candidates += p.candidates;
    if (!p.has) continue;
    if (!has || (minimize ? p.value < out.value : p.value > out.value)) {
      has = true;
      out.value = p.value;
      out.witness = std::move(p.witness);
    }
  }
  if (!has) throw Error(ErrorCode::kInternal, "no admissible subspace");
  return out;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

}  // namespace

std::uint64_t support_size(const CodeSpec& spec, const SubspaceBasis& h) {
  std::vector<char> hit(spec.n, 0);
  for (std::size_t r = 0; r < h.dim(); ++r) {
    Codeword w = codeword_of(spec, h.rows.row(r));
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (!w.coordinates[i].is_zero()) hit[i] = 1;
    }
  }
  std::uint64_t count = 0;
  for (char c : hit) count += c;
  return count;
}

SearchResult rghw_bruteforce(const CodeSpec& spec, std::uint32_t j, const EnumerationOptions& opts) {
  check_j(j, spec.k1());
  check_cap(spec.dim(), j, spec.q(), opts.cap);
  return search(
      spec, j, true, opts, [&](const SubspaceBasis& h) { return meets_subcode_trivially(spec, h); },
      [&](const SubspaceBasis& h) { return support_size(spec, h); });
}

SearchResult ghw_bruteforce(const CodeSpec& spec, std::uint32_t j, const EnumerationOptions& opts) {
  check_j(j, spec.dim());
  check_cap(spec.dim(), j, spec.q(), opts.cap);
  return search(
      spec, j, true, opts, [](const SubspaceBasis&) { return true; },
      [&](const SubspaceBasis& h) { return support_size(spec, h); });
}

std::uint64_t nj_of_subspace(const CodeSpec& spec, const SubspaceBasis& d) {
  const std::uint64_t from_support = spec.n - support_size(spec, d);
  const std::uint64_t from_dual = intersect_with_cyclic_group(spec, dual_subspace(spec, d));
  if (from_support != from_dual) {
    throw Error(ErrorCode::kInternal, "zero count " + std::to_string(from_support) +
                                          " disagrees with dual intersection " + std::to_string(from_dual));
  }
  return from_support;
}

Theorem1Result mj_theorem1(const CodeSpec& spec, std::uint32_t j, const EnumerationOptions& opts) {
  check_j(j, spec.k1());
  const std::uint32_t dim = spec.dim() - j;
  check_cap(spec.dim(), dim, spec.q(), opts.cap);
  SearchResult best = search(
      spec, dim, false, opts, [&](const SubspaceBasis& h) { return projects_onto_second(spec, h); },
      [&](const SubspaceBasis& h) { return intersect_with_cyclic_group(spec, h); });
  Theorem1Result out;
  out.nj = best.value;
  out.mj = spec.n - best.value;
  out.argmax = std::move(best.witness);
  out.candidates = best.candidates;
  return out;
}

RghwReport compute_report(const CodeSpec& spec, std::uint32_t j, const RouteSelection& routes,
                          const EnumerationOptions& opts) {
  check_j(j, spec.k1());
  RghwReport r;
  r.j = j;
  if (routes.bruteforce) {
    auto start = std::chrono::steady_clock::now();
    r.bruteforce = rghw_bruteforce(spec, j, opts).value;
    r.millis_bruteforce = millis_since(start);
  }
  if (routes.theorem1) {
    auto start = std::chrono::steady_clock::now();
    auto t = mj_theorem1(spec, j, opts);
    r.millis_theorem1 = millis_since(start);
    r.theorem1 = t.mj;
    r.nj = t.nj;
    r.argmax = t.argmax.fingerprint(*spec.base);
  }
  if (routes.closed_form) {
    auto start = std::chrono::steady_clock::now();
    if (auto cf = closed_form_for(spec, j)) {
      r.closed_form = cf->mj;
      r.closed_form_source =
          std::string(corollary_name(cf->source.which)) + " " + std::string(branch_name(cf->source.branch));
    }
    r.millis_closed_form = millis_since(start);
  }
  std::optional<BigInt> ref;
  auto fold = [&](const BigInt& v) {
    if (!ref) {
      ref = v;
    } else if (*ref != v) {
      r.agree = false;
    }
  };
  if (r.bruteforce) fold(BigInt(*r.bruteforce));
  if (r.theorem1) fold(BigInt(*r.theorem1));
  if (r.closed_form) fold(*r.closed_form);
  return r;
}

nlohmann::json spec_to_json(const CodeSpec& spec) {
  return nlohmann::json{{"q", spec.q()},   {"k1", spec.k1()}, {"k2", spec.k2()}, {"e1", spec.e1()},
                        {"e2", spec.e2()}, {"n1", spec.n1},   {"n2", spec.n2},   {"n", spec.n}};
}

nlohmann::json report_to_json(const RghwReport& report, bool with_timings) {
  nlohmann::json routes = nlohmann::json::object();
  if (report.bruteforce) routes["bruteforce"] = *report.bruteforce;
  if (report.theorem1) routes["theorem1"] = *report.theorem1;
  if (report.closed_form) routes["closed_form"] = big_to_json(*report.closed_form);
  nlohmann::json out{{"j", report.j}, {"routes", routes}, {"agree", report.agree}};
  if (report.nj) out["N"] = *report.nj;
  if (report.argmax) out["argmax"] = *report.argmax;
  if (report.closed_form_source) out["closed_form_source"] = *report.closed_form_source;
  if (with_timings) {
    nlohmann::json ms = nlohmann::json::object();
    if (report.bruteforce) ms["bruteforce"] = report.millis_bruteforce;
    if (report.theorem1) ms["theorem1"] = report.millis_theorem1;
    if (report.closed_form) ms["closed_form"] = report.millis_closed_form;
    out["millis"] = ms;
  }
  return out;
}

}  // namespace rghw
