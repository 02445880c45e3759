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

#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracle/naive_codes.hpp"
#include "rghw/codes.hpp"
#include "rghw/error.hpp"

using namespace rghw;

namespace {

ErrorCode code_of(const CodeParams& p) {
  try {
    build_code(p);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

std::map<std::size_t, int> weight_distribution(const CodeSpec& spec) {
  std::map<std::size_t, int> dist;
  for (std::size_t s1 = 0; s1 < spec.Q1(); ++s1) {
    for (std::size_t s2 = 0; s2 < spec.Q2(); ++s2) {
      auto w = codeword(spec, FieldTable::from_slot(s1), FieldTable::from_slot(s2));
      ++dist[hamming_weight(w.coordinates)];
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("lengths of the grid instances") {
  CodeSpec a = build_code({2, 2, 3, 1, 1});
  CHECK(a.n1 == 3);
  CHECK(a.n2 == 7);
  CHECK(a.d == 1);
  CHECK(a.n == 21);

  CodeSpec b = build_code({3, 2, 3, 1, 2});
  CHECK(b.n1 == 8);
  CHECK(b.n2 == 13);
  CHECK(b.n == 104);
  CHECK(element_order(b.field2(), b.alpha2) == 13);

  CodeSpec c = build_code({4, 2, 3, 1, 3});
  CHECK(c.d == 3);
  CHECK_FALSE(c.coprime_orders());
}

TEST_CASE("the two norms of the primitive elements agree") {
  for (auto p : std::vector<CodeParams>{{2, 2, 3, 1, 1}, {3, 2, 3, 1, 2}, {3, 3, 2, 2, 1}, {4, 2, 3, 1, 3}}) {
    CodeSpec s = build_code(p);
    auto n1 = s.field1().pow(s.gamma1, static_cast<std::int64_t>((s.Q1() - 1) / (s.q() - 1)));
    auto n2 = s.field2().pow(s.gamma2, static_cast<std::int64_t>((s.Q2() - 1) / (s.q() - 1)));
    CHECK(s.ext1->preimage(n1) == s.delta);
    CHECK(s.ext2->preimage(n2) == s.delta);
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK(code_of({2, 2, 2, 1, 1}) == ErrorCode::kConjugateNonzeros);
  CHECK(code_of({3, 2, 3, 1, 5}) == ErrorCode::kBadIndex);
  CHECK(code_of({6, 2, 3, 1, 1}) == ErrorCode::kNonPrime);
  // alpha2 of order 1
  CHECK(code_of({2, 2, 3, 1, 7}) == ErrorCode::kDegenerateOrder);
  // alpha1 = gamma^5 in GF(16) lies in GF(4)
  CHECK(code_of({2, 4, 3, 5, 1}) == ErrorCode::kBadIndex);
  // Different orbits at equal degree are fine.
  CHECK_NOTHROW(build_code({2, 4, 4, 1, 3}));
}

TEST_CASE("zero coefficients give the zero word") {
  CodeSpec s = build_code({2, 2, 3, 1, 1});
  CHECK(hamming_weight(codeword(s, Elem::zero(), Elem::zero()).coordinates) == 0);
  CHECK(hamming_weight(subcode_codeword(s, Elem::zero()).coordinates) == 0);
}

TEST_CASE("weights at q=2, (2,3)") {
  CodeSpec s = build_code({2, 2, 3, 1, 1});
  for (std::uint32_t l1 = 0; l1 < 3; ++l1) {
    for (std::uint32_t l2 = 0; l2 < 7; ++l2) {
      auto w = codeword(s, Elem::from_log(l1), Elem::from_log(l2));
      CHECK(hamming_weight(w.coordinates) == 10);
    }
  }
  for (std::uint32_t l2 = 0; l2 < 7; ++l2) {
    auto w = subcode_codeword(s, Elem::from_log(l2));
    CHECK(hamming_weight(w.coordinates) == 12);
    for (std::size_t i = 0; i + 7 < s.n; ++i) CHECK(w.coordinates[i] == w.coordinates[i + 7]);
  }
}

TEST_CASE("first-side words repeat an irreducible codeword") {
  CodeSpec s = build_code({3, 2, 3, 1, 2});
  for (std::uint32_t l1 = 0; l1 < 8; l1 += 3) {
    auto w = codeword(s, Elem::from_log(l1), Elem::zero());
    auto base = irreducible_codeword(s, 1, Elem::from_log(l1));
    REQUIRE(base.size() == s.n1);
    for (std::size_t i = 0; i < s.n; ++i) CHECK(w.coordinates[i] == base[i % s.n1]);
  }
}

TEST_CASE("weight distributions match the independent construction") {
  for (auto p : std::vector<CodeParams>{{2, 2, 3, 1, 1}, {3, 2, 3, 1, 2}, {2, 3, 4, 1, 1}, {3, 3, 2, 2, 1}}) {
    CodeSpec s = build_code(p);
    auto naive = oracle::build_naive_code(p.q, p.k1, p.k2, static_cast<int>(p.e1), static_cast<int>(p.e2));
    REQUIRE(naive.n == static_cast<int>(s.n));
    std::map<std::size_t, int> expected;
    for (const auto& w : naive.words) ++expected[oracle::weight(w)];
    CHECK(weight_distribution(s) == expected);
  }
}

TEST_CASE("frozen weight distribution at q=3, (2,3), e=(1,2)") {
  // Produced by the schoolbook oracle in tests/oracle.
  CodeSpec s = build_code({3, 2, 3, 1, 2});
  auto dist = weight_distribution(s);
  CHECK(dist.size() == 4);
  CHECK(dist.begin()->first == 0);
  std::set<std::size_t> weights;
  for (auto [w, c] : dist) weights.insert(w);
  CHECK(weights == std::set<std::size_t>{0, 69, 72, 78});
}

TEST_CASE("the code is cyclic") {
  CodeSpec s = build_code({2, 3, 2, 1, 1});
  auto w = codeword(s, s.field1().generator(), s.field2().one());
  auto shifted = codeword(s, s.field1().mul(s.field1().generator(), s.alpha1), s.field2().mul(s.field2().one(), s.alpha2));
  for (std::size_t i = 0; i + 1 < s.n; ++i) CHECK(shifted.coordinates[i] == w.coordinates[i + 1]);
  CHECK(shifted.coordinates[s.n - 1] == w.coordinates[0]);
}

TEST_CASE("flatten and unflatten are inverse bijections") {
  CodeSpec s = build_code({3, 2, 3, 1, 2});
  std::set<std::vector<Elem>> seen;
  for (std::size_t s1 = 0; s1 < s.Q1(); ++s1) {
    for (std::size_t s2 = 0; s2 < s.Q2(); ++s2) {
      Elem b1 = FieldTable::from_slot(s1), b2 = FieldTable::from_slot(s2);
      auto v = flatten(s, b1, b2);
      CHECK(unflatten(s, v) == std::make_pair(b1, b2));
      seen.insert(v);
    }
  }
  CHECK(seen.size() == 243);
  std::vector<Elem> bad(4);
  CHECK_THROWS_AS(unflatten(s, bad), Error);
}

TEST_CASE("codeword map is injective") {
  CodeSpec s = build_code({2, 2, 3, 1, 1});
  std::set<std::vector<Elem>> words;
  for (std::size_t s1 = 0; s1 < s.Q1(); ++s1) {
    for (std::size_t s2 = 0; s2 < s.Q2(); ++s2) {
      words.insert(codeword(s, FieldTable::from_slot(s1), FieldTable::from_slot(s2)).coordinates);
    }
  }
  CHECK(words.size() == 32);
}

TEST_CASE("support") {
  CodeSpec s = build_code({2, 2, 3, 1, 1});
  std::vector<Codeword> none{codeword(s, Elem::zero(), Elem::zero())};
  CHECK(support(std::span<const Codeword>(none)).empty());

  auto w = codeword(s, s.field1().one(), s.field2().one());
  std::vector<Codeword> one{w};
  auto supp = support(std::span<const Codeword>(one));
  CHECK(supp.size() == 10);
  for (auto i : supp) CHECK_FALSE(w.coordinates[i].is_zero());

  std::vector<Elem> a(6, Elem::zero()), b(6, Elem::zero());
  a[0] = a[1] = Elem::from_log(0);
  b[3] = b[4] = b[5] = Elem::from_log(0);
  std::vector<std::vector<Elem>> pair{a, b};
  CHECK(support(std::span<const std::vector<Elem>>(pair)) == std::vector<std::size_t>{0, 1, 3, 4, 5});
}

TEST_CASE("parity-check polynomial annihilates every codeword") {
  for (auto p : std::vector<CodeParams>{{2, 2, 3, 1, 1}, {3, 2, 3, 1, 2}}) {
    CodeSpec s = build_code(p);
    Polynomial h = parity_check_polynomial(s);
    CHECK(h.degree() == static_cast<int>(s.dim()));
    CHECK(h.leading() == s.base->one());
    for (std::size_t s1 = 0; s1 < s.Q1(); ++s1) {
      for (std::size_t s2 = 0; s2 < s.Q2(); ++s2) {
        auto w = codeword(s, FieldTable::from_slot(s1), FieldTable::from_slot(s2));
        CHECK(satisfies_recurrence(h, w.coordinates, *s.base));
      }
    }
    // A non-codeword breaks the recurrence.
    std::vector<Elem> e(s.n, Elem::zero());
    e[0] = s.base->one();
    CHECK_FALSE(satisfies_recurrence(h, e, *s.base));
  }
}

TEST_CASE("tagged coefficients must come from the right fields") {
  CodeSpec s = build_code({2, 2, 3, 1, 1});
  CHECK_NOTHROW(codeword(s, FieldElement{&s.field1(), s.field1().one()}, FieldElement{&s.field2(), Elem::zero()}));
  try {
    codeword(s, FieldElement{&s.field2(), s.field2().one()}, FieldElement{&s.field2(), Elem::zero()});
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFieldMismatch);
  }
}

TEST_CASE("codeword listings") {
  CodeSpec s = build_code({2, 2, 3, 1, 1});
  std::vector<Codeword> words{codeword(s, s.field1().one(), Elem::zero())};
  auto j = codewords_to_json(s, words);
  REQUIRE(j.is_array());
  CHECK(j[0].size() == 21);
  std::ostringstream os;
  write_codewords_text(os, s, words);
  // tr(1) = 0, tr(w) = tr(w^2) = 1 in GF(4), repeated seven times
  CHECK(os.str() == "0 1 1 0 1 1 0 1 1 0 1 1 0 1 1 0 1 1 0 1 1\n");
}
