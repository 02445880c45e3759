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

#include "rghw/closed_forms.hpp"

#include <numeric>
#include <string>

#include "rghw/error.hpp"
#include "rghw/number_theory.hpp"

namespace rghw {

namespace {

BigInt pow_big(std::uint64_t q, std::int64_t e) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kHypothesisViolated, what);
}

Branch select_branch(std::uint32_t k1, std::uint32_t k2, std::uint32_t j) {
  if (j < 1 || j > k1) {
    throw Error(ErrorCode::kRangeError, "j = " + std::to_string(j) + " outside 1.." + std::to_string(k1));
  }
  if (k1 <= k2) return Branch::kK1LeK2;
  if (j <= k2) return Branch::kJLeK2LtK1;
  return Branch::kK2LtJLeK1;
}

void check_positive(const CorollaryValue& v) {
  if (v.nj <= 0 || v.mj <= 0) {
    throw Error(ErrorCode::kHypothesisViolated, "closed form produced N_j = " + v.nj.str() +
                                                    ", M_j = " + v.mj.str());
  }
}

// Shared by cor2 and cor3: the displayed N_j formulas coincide.
CorollaryValue second_formula(Corollary which, std::uint64_t q, std::uint32_t k1, std::uint32_t k2,
                              std::uint32_t j) {
  const Branch branch = select_branch(k1, k2, j);
  CorollaryValue v;
  v.source = {which, q, k1, k2, j, branch};
  v.length = (pow_big(q, k1) - 1) * (pow_big(q, k2) - 1) / (q - 1);
  const std::int64_t a = k1, b = k2, jj = j;
  switch (branch) {
    case Branch::kK1LeK2:
      v.nj = geometric_sum(q, b - jj, a + b - jj - 1) - geometric_sum(q, 0, a - jj - 1);
      break;
    case Branch::kJLeK2LtK1:
      v.nj = geometric_sum(q, a - jj, a + b - jj - 1) - geometric_sum(q, 0, b - jj - 1);
      break;
    case Branch::kK2LtJLeK1:
      v.nj = pow_big(q, a - jj) * geometric_sum(q, 0, b - 1);
      break;
  }
  v.mj = v.length - v.nj;
  check_positive(v);
  return v;
}

void check_second_family(std::uint64_t q, std::uint32_t k1, std::uint32_t k2, std::uint32_t odd_k,
                         std::string_view odd_name) {
  require(nt::prime_power(q).has_value(), "q must be a prime power");
  require(k1 >= 1 && k2 >= 1, "k1, k2 must be positive");
  require(std::gcd(k1, k2) == 1, "gcd(k1, k2) must be 1");
  require(odd_k % 2 == 1, std::string(odd_name) + " must be odd");
  // gcd(q-1, (q^k-1)/(q-1)) = gcd(q-1, k); the derivation needs it to be 1.
  require(std::gcd<std::uint64_t>(q - 1, odd_k) == 1, "gcd(q - 1, " + std::string(odd_name) + ") must be 1");
}

}  // namespace

std::string_view corollary_name(Corollary c) {
  switch (c) {
    case Corollary::kCor1: return "cor1";
    case Corollary::kCor2: return "cor2";
    case Corollary::kCor3: return "cor3";
  }
  return "?";
}

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::kK1LeK2: return "k1<=k2";
    case Branch::kJLeK2LtK1: return "1<=j<=k2<k1";
    case Branch::kK2LtJLeK1: return "k2<j<=k1";
  }
  return "?";
}

BigInt geometric_sum(std::uint64_t q, std::int64_t lo, std::int64_t hi) {
  BigInt s = 0;
  for (std::int64_t t = std::max<std::int64_t>(lo, 0); t <= hi; ++t) s += pow_big(q, t);
  return s;
}

CorollaryValue corollary1_nj(std::uint32_t k1, std::uint32_t k2, std::uint32_t j) {
  require(k1 >= 2 && k2 >= 2, "k1, k2 >= 2");
  require(std::gcd(k1, k2) == 1, "gcd(k1, k2) must be 1");
  const Branch branch = select_branch(k1, k2, j);
  const std::uint64_t q = 2;
  CorollaryValue v;
  v.source = {Corollary::kCor1, q, k1, k2, j, branch};
  v.length = (pow_big(q, k1) - 1) * (pow_big(q, k2) - 1);
  const std::int64_t a = k1, b = k2, jj = j;
  if (branch == Branch::kK2LtJLeK1) {
    v.nj = pow_big(q, a + b - jj) - pow_big(q, a - jj);
  } else {
    v.nj = pow_big(q, a + b - jj) - pow_big(q, a - jj) - pow_big(q, b - jj) + 1;
  }
  v.mj = v.length - v.nj;
  check_positive(v);
  return v;
}

CorollaryValue corollary2_nj(std::uint64_t q, std::uint32_t k1, std::uint32_t k2, std::uint32_t j) {
  check_second_family(q, k1, k2, k2, "k2");
  if (k2 == 1 || (q == 2 && k1 == 1)) throw Error(ErrorCode::kDegenerateOrder, "n1 or n2 equals 1");
  return second_formula(Corollary::kCor2, q, k1, k2, j);
}

CorollaryValue corollary3_nj(std::uint64_t q, std::uint32_t k1, std::uint32_t k2, std::uint32_t j) {
  check_second_family(q, k1, k2, k1, "k1");
  if (k1 == 1 || (q == 2 && k2 == 1)) throw Error(ErrorCode::kDegenerateOrder, "n1 or n2 equals 1");
  return second_formula(Corollary::kCor3, q, k1, k2, j);
}

std::optional<CorollaryValue> closed_form_for(const CodeSpec& spec, std::uint32_t j) {
  const std::uint64_t q = spec.q();
  const std::uint32_t k1 = spec.k1(), k2 = spec.k2();
  const bool coprime_k = std::gcd(k1, k2) == 1;
  if (!coprime_k) return std::nullopt;
  if (q == 2 && spec.e1() == 1 && spec.e2() == 1 && k1 >= 2 && k2 >= 2) return corollary1_nj(k1, k2, j);
  if (spec.e1() == 1 && spec.e2() == q - 1 && k2 % 2 == 1 && std::gcd<std::uint64_t>(q - 1, k2) == 1) {
    return corollary2_nj(q, k1, k2, j);
  }
  if (spec.e1() == q - 1 && spec.e2() == 1 && k1 % 2 == 1 && std::gcd<std::uint64_t>(q - 1, k1) == 1) {
    return corollary3_nj(q, k1, k2, j);
  }
  return std::nullopt;
}

}  // namespace rghw
