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

#ifndef RGHW_CLOSED_FORMS_HPP_
#define RGHW_CLOSED_FORMS_HPP_

// Closed-form N_j and M_j for the three explicit families:
//
//   cor1: q = 2, e1 = e2 = 1                    (binary m-sequences)
//   cor2: e1 = 1, e2 = q - 1, k2 odd
//   cor3: e1 = q - 1, e2 = 1, k1 odd
//
// all with gcd(k1, k2) = 1. Arithmetic is exact.

#include <cstdint>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rghw/codes.hpp"

namespace rghw {

using BigInt = boost::multiprecision::cpp_int;

enum class Corollary { kCor1, kCor2, kCor3 };
enum class Branch { kK1LeK2, kJLeK2LtK1, kK2LtJLeK1 };

std::string_view corollary_name(Corollary c);
std::string_view branch_name(Branch b);

struct CorollaryCase {
  Corollary which = Corollary::kCor1;
  std::uint64_t q = 2;
  std::uint32_t k1 = 0, k2 = 0, j = 0;
  Branch branch = Branch::kK1LeK2;
};

struct CorollaryValue {
  CorollaryCase source;
  BigInt length;  // n
  BigInt nj;
  BigInt mj;
};

// Sum of q^t for lo <= t <= hi; 0 when hi < lo.
BigInt geometric_sum(std::uint64_t q, std::int64_t lo, std::int64_t hi);

CorollaryValue corollary1_nj(std::uint32_t k1, std::uint32_t k2, std::uint32_t j);
CorollaryValue corollary2_nj(std::uint64_t q, std::uint32_t k1, std::uint32_t k2, std::uint32_t j);
CorollaryValue corollary3_nj(std::uint64_t q, std::uint32_t k1, std::uint32_t k2, std::uint32_t j);

// The closed form whose hypotheses the code satisfies, evaluated at j; nullopt
// when the code is in none of the families.
std::optional<CorollaryValue> closed_form_for(const CodeSpec& spec, std::uint32_t j);

}  // namespace rghw

#endif  // RGHW_CLOSED_FORMS_HPP_
