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

#include "doctest.h"
#include "rghw/closed_forms.hpp"
#include "rghw/error.hpp"
#include "rghw/rghw.hpp"

using namespace rghw;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("geometric sums") {
  CHECK(geometric_sum(3, 2, 3) == 36);
  CHECK(geometric_sum(3, 0, -1) == 0);
  CHECK(geometric_sum(2, 0, 4) == 31);
}

TEST_CASE("binary m-sequence family") {
  auto a = corollary1_nj(2, 3, 1);
  CHECK(a.nj == 11);
  CHECK(a.mj == 10);
  CHECK(a.length == 21);
  auto b = corollary1_nj(2, 3, 2);
  CHECK(b.nj == 6);
  CHECK(b.mj == 15);
  auto c = corollary1_nj(3, 2, 3);
  CHECK(c.nj == 3);
  CHECK(c.mj == 18);
  CHECK(c.source.branch == Branch::kK2LtJLeK1);
  CHECK(error_of([] { corollary1_nj(2, 4, 1); }) == ErrorCode::kHypothesisViolated);
  CHECK(error_of([] { corollary1_nj(2, 3, 3); }) == ErrorCode::kRangeError);
}

TEST_CASE("second family with e = (1, q-1)") {
  auto a = corollary2_nj(3, 2, 3, 1);
  CHECK(a.length == 104);
  CHECK(a.nj == 35);
  CHECK(a.mj == 69);
  auto b = corollary2_nj(3, 2, 3, 2);
  CHECK(b.nj == 12);
  CHECK(b.mj == 92);
  // j = k1 with k2 = k1 + 1: the subtracted sum is empty.
  auto c = corollary2_nj(5, 2, 3, 2);
  CHECK(c.nj == geometric_sum(5, 1, 2));
  CHECK(error_of([] { corollary2_nj(3, 3, 2, 1); }) == ErrorCode::kHypothesisViolated);  // k2 even
  CHECK(error_of([] { corollary2_nj(4, 2, 3, 1); }) == ErrorCode::kHypothesisViolated);  // gcd(q-1, k2) = 3
  CHECK(error_of([] { corollary2_nj(6, 2, 3, 1); }) == ErrorCode::kHypothesisViolated);  // q not a prime power
  CHECK(error_of([] { corollary2_nj(3, 3, 3, 1); }) == ErrorCode::kHypothesisViolated);  // gcd(k1, k2) = 3
}

TEST_CASE("second family with e = (q-1, 1)") {
  auto a = corollary3_nj(3, 3, 2, 1);
  CHECK(a.length == 104);
  CHECK(a.nj == 35);
  CHECK(a.mj == 69);
  CHECK(a.source.branch == Branch::kJLeK2LtK1);
  auto b = corollary3_nj(3, 3, 2, 3);
  CHECK(b.nj == 4);
  CHECK(b.mj == 100);
  CHECK(b.source.branch == Branch::kK2LtJLeK1);
  CHECK(error_of([] { corollary3_nj(3, 2, 3, 1); }) == ErrorCode::kHypothesisViolated);  // k1 even
}

TEST_CASE("closed form selection") {
  auto none = closed_form_for(build_code({4, 2, 3, 1, 3}), 1);
  CHECK_FALSE(none.has_value());
  auto c1 = closed_form_for(build_code({2, 3, 2, 1, 1}), 2);
  REQUIRE(c1.has_value());
  CHECK(c1->source.which == Corollary::kCor1);
  auto c3 = closed_form_for(build_code({3, 3, 2, 2, 1}), 2);
  REQUIRE(c3.has_value());
  CHECK(c3->source.which == Corollary::kCor3);
  CHECK(c3->mj == 92);
  // Even k2 at (1, q-1) has no closed form.
  CHECK_FALSE(closed_form_for(build_code({3, 3, 2, 1, 2}), 1).has_value());
}

TEST_CASE("closed forms agree with exhaustive search beyond the fixed examples") {
  struct Case {
    CodeParams p;
    std::uint32_t max_j;
  };
  for (auto [p, max_j] : std::vector<Case>{{{2, 2, 5, 1, 1}, 2}, {{2, 3, 4, 1, 1}, 3}, {{5, 2, 3, 1, 4}, 2},
                                           {{3, 3, 2, 2, 1}, 3}}) {
    CodeSpec s = build_code(p);
    for (std::uint32_t j = 1; j <= max_j; ++j) {
      auto cf = closed_form_for(s, j);
      REQUIRE(cf.has_value());
      CAPTURE(p.q);
      CAPTURE(j);
      CHECK(cf->length == s.n);
      CHECK(cf->mj == mj_theorem1(s, j).mj);
    }
  }
}
