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

#ifndef RGHW_VERIFY_HPP_
#define RGHW_VERIFY_HPP_

// Property suites run by `rghw verify`. Each suite counts individual
// checks and failures; randomized parts draw from std::mt19937_64 seeded
// with VerifyConfig::seed.

#include <cstdint>
#include <string>
#include <vector>

#include "rghw/codes.hpp"
#include "rghw/rghw.hpp"

namespace rghw {

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::uint32_t samples = 100;
  std::uint32_t max_dim = 5;       // instances with k1 + k2 above this are skipped
  std::uint32_t max_field = 81;    // Gauss-sum suite field sizes
  std::vector<std::string> suites; // empty = all
  EnumerationOptions enumeration;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double max_residual = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool passed() const { return failures == 0; }
  void expect(bool ok, const std::string& what);
};

const std::vector<std::string>& suite_names();

// The default instance grid: q = 2 with (k1, k2) in {(2,3), (3,2), (2,5),
// (3,4)} and q = 3 with (2,3) e = (1,2) and (3,2) e = (2,1).
std::vector<CodeParams> default_grid();

std::vector<SuiteResult> run_verify(const VerifyConfig& config);

}  // namespace rghw

#endif  // RGHW_VERIFY_HPP_
