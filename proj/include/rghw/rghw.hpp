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

#ifndef RGHW_RGHW_HPP_
#define RGHW_RGHW_HPP_

// Relative generalized Hamming weights M_j(C, C') of the two-nonzero code
// with respect to C', by three routes:
//
//   bruteforce  minimum support of a j-dimensional D in C with D cap C' = 0
//   theorem1    n - max |H cap <(a1, a2)>| over (k1+k2-j)-dimensional H
//               of GF(Q1) x GF(Q2) with pi_2(H) = GF(Q2)
//   closed form the explicit formulas, when applicable

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "rghw/closed_forms.hpp"
#include "rghw/codes.hpp"
#include "rghw/subspaces.hpp"

namespace rghw {

struct EnumerationOptions {
  static constexpr std::uint64_t kDefaultCap = 100'000'000;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::uint64_t cap = kDefaultCap;
};

struct SearchResult {
  std::uint64_t value = 0;     // M_j / d_j for bruteforce, N_j for theorem1
  SubspaceBasis witness;       // first optimum in enumeration order
  std::uint64_t candidates = 0;  // subspaces passing the side condition
};

// |Supp| of the codeword space phi^-1(H), from explicit codewords.
std::uint64_t support_size(const CodeSpec& spec, const SubspaceBasis& h);

SearchResult rghw_bruteforce(const CodeSpec& spec, std::uint32_t j, const EnumerationOptions& opts = {});
SearchResult ghw_bruteforce(const CodeSpec& spec, std::uint32_t j, const EnumerationOptions& opts = {});

// Zero-count of phi^-1(D): n - |Supp|, cross-checked against
// |{ i : (a1^i, a2^i) in D^perp }|. Throws kInternal if they differ.
std::uint64_t nj_of_subspace(const CodeSpec& spec, const SubspaceBasis& d);

struct Theorem1Result {
  std::uint64_t mj = 0;
  std::uint64_t nj = 0;
  SubspaceBasis argmax;
  std::uint64_t candidates = 0;
};

Theorem1Result mj_theorem1(const CodeSpec& spec, std::uint32_t j, const EnumerationOptions& opts = {});

struct RouteSelection {
  bool bruteforce = true;
  bool theorem1 = true;
  bool closed_form = true;
};

struct RghwReport {
  std::uint32_t j = 0;
  std::optional<std::uint64_t> bruteforce;
  std::optional<std::uint64_t> theorem1;
  std::optional<BigInt> closed_form;
  std::optional<std::string> closed_form_source;  // e.g. "cor2 k1<=k2"
  std::optional<std::uint64_t> nj;
  std::optional<std::string> argmax;  // RREF fingerprint
  bool agree = true;
  double millis_bruteforce = 0, millis_theorem1 = 0, millis_closed_form = 0;
};

RghwReport compute_report(const CodeSpec& spec, std::uint32_t j, const RouteSelection& routes,
                          const EnumerationOptions& opts = {});

nlohmann::json spec_to_json(const CodeSpec& spec);
nlohmann::json report_to_json(const RghwReport& report, bool with_timings);

}  // namespace rghw

#endif  // RGHW_RGHW_HPP_
