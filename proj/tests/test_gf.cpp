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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle/naive_codes.hpp"
#include "rghw/error.hpp"
#include "rghw/gf.hpp"

using namespace rghw;

namespace {

// Irreducibility by exhaustive root search, valid for degree <= 3.
bool has_no_roots(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0, pw = 1;
    for (auto c : poly) {
      acc = (acc + c * pw) % p;
      pw = pw * x % p;
    }
    if (acc == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("prime field GF(2) has a single exp entry") {
  FieldTable f = build_field(2, 1);
  CHECK(f.size() == 2);
  CHECK(f.exp_table() == std::vector<std::uint32_t>{1});
  CHECK(f.add(f.one(), f.one()).is_zero());
}

TEST_CASE("GF(4) uses x^2 + x + 1") {
  FieldTable f = build_field(2, 2);
  CHECK(f.primitive_polynomial() == std::vector<std::uint32_t>{1, 1, 1});
  // The only quadratic over GF(2) without roots.
  int irreducible = 0;
  for (std::uint32_t c0 = 0; c0 < 2; ++c0) {
    for (std::uint32_t c1 = 0; c1 < 2; ++c1) irreducible += has_no_roots({c0, c1, 1}, 2);
  }
  CHECK(irreducible == 1);
  CHECK(has_no_roots(f.primitive_polynomial(), 2));
}

TEST_CASE("GF(9) generator has order 8") {
  FieldTable f = build_field(3, 2);
  CHECK(element_order(f, f.generator()) == 8);
  CHECK(element_order(f, f.pow(f.generator(), 2)) == 4);
  CHECK(element_order(f, f.one()) == 1);
  CHECK(has_no_roots(f.primitive_polynomial(), 3));
}

TEST_CASE("GF(8) generator has order 7") {
  FieldTable f = build_field(2, 3);
  CHECK(element_order(f, f.generator()) == 7);
}

TEST_CASE("field axioms hold on every small field") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 4}, {7, 2}}) {
    FieldTable f = build_field(p, m);
    for (std::size_t sa = 0; sa < f.size(); ++sa) {
      Elem a = FieldTable::from_slot(sa);
      CHECK(f.add(a, f.neg(a)).is_zero());
      if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (std::size_t sb = 0; sb < f.size(); ++sb) {
        Elem b = FieldTable::from_slot(sb);
        CHECK(f.to_vector(f.add(a, b)) == f.to_vector(f.add(b, a)));
        Elem c = f.generator();
        CHECK(f.mul(c, f.add(a, b)) == f.add(f.mul(c, a), f.mul(c, b)));
      }
    }
  }
}

TEST_CASE("table arithmetic matches schoolbook polynomial arithmetic") {
  // Compare multiplicative orders, which are basis independent.
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
    FieldTable f = build_field(p, m);
    oracle::NaiveField naive(p, m);
    std::multiset<std::uint64_t> ours, theirs;
    for (std::uint32_t l = 0; l < f.order(); ++l) ours.insert(element_order(f, Elem::from_log(l)));
    for (const auto& x : naive.elements()) {
      if (!naive.is_zero(x)) theirs.insert(naive.order(x));
    }
    CHECK(ours == theirs);
  }
}

TEST_CASE("build_field rejects bad input") {
  CHECK_THROWS_AS(build_field(4, 1), Error);
  try {
    build_field(6, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonPrime);
  }
  try {
    build_field(2, 30, 1 << 16);
    FAIL("expected a size cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeCapExceeded);
  }
}

TEST_CASE("embedding fixes the prime field and hits the right orders") {
  auto f2 = make_field(2, 1), f4 = make_field(2, 2), f16 = make_field(2, 4);
  auto f3 = make_field(3, 1), f9 = make_field(3, 2);
  Embedding e24(f2, f4);
  CHECK(e24.map(f2->one()) == f4->one());
  CHECK(e24.map(Elem::zero()).is_zero());

  Embedding e39(f3, f9);
  Elem img = e39.map(f3->generator());
  CHECK(img == f9->pow(f9->generator(), 4));
  CHECK(element_order(*f9, img) == 2);

  Embedding e416(f4, f16);
  CHECK(element_order(*f16, e416.map(f4->generator())) == 3);
  CHECK(e416.generator_image_log() % 5 == 0);

  // A homomorphism on every element.
  for (std::size_t sa = 0; sa < f4->size(); ++sa) {
    Elem a = FieldTable::from_slot(sa);
    CHECK(e416.preimage(e416.map(a)) == a);
    for (std::size_t sb = 0; sb < f4->size(); ++sb) {
      Elem b = FieldTable::from_slot(sb);
      CHECK(e416.map(f4->add(a, b)) == f16->add(e416.map(a), e416.map(b)));
      CHECK(e416.map(f4->mul(a, b)) == f16->mul(e416.map(a), e416.map(b)));
    }
  }
  CHECK_FALSE(e416.preimage(f16->generator()).has_value());
}

TEST_CASE("embedding between non-nested fields fails") {
  CHECK_THROWS_AS(Embedding(make_field(2, 2), make_field(2, 3)), Error);
  CHECK_THROWS_AS(Embedding(make_field(3, 1), make_field(2, 2)), Error);
}

TEST_CASE("trace examples") {
  auto f2 = make_field(2, 1), f4 = make_field(2, 2);
  Elem w = f4->generator();
  CHECK(trace(f4, f2, Elem::zero()).is_zero());
  CHECK(trace(f4, f2, w) == f2->one());
  CHECK(f4->add(w, f4->mul(w, w)) == f4->one());

  // trace(1) = m mod p
  auto f3 = make_field(3, 1), f27 = make_field(3, 3), f81 = make_field(3, 4);
  CHECK(trace(f27, f3, f27->one()).is_zero());
  CHECK(trace(f81, f3, f81->one()) == f3->one());

  // Each value of the base field is hit Q/q times.
  auto f9 = make_field(3, 2);
  Embedding e(f3, f9);
  std::vector<int> hits(3, 0);
  for (std::size_t s = 0; s < f81->size(); ++s) {
    ++hits[FieldTable::slot(trace(f81, f3, FieldTable::from_slot(s)))];
  }
  CHECK(hits == std::vector<int>{27, 27, 27});
  Embedding e981(f9, f81);
  std::vector<int> hits9(9, 0);
  for (std::size_t s = 0; s < f81->size(); ++s) ++hits9[FieldTable::slot(e981.trace(FieldTable::from_slot(s)))];
  CHECK(std::all_of(hits9.begin(), hits9.end(), [](int h) { return h == 9; }));
}

TEST_CASE("trace with tagged elements checks the field") {
  auto f2 = make_field(2, 1), f4 = make_field(2, 2), f8 = make_field(2, 3);
  Embedding e(f2, f4);
  CHECK(trace(e, FieldElement{f4.get(), f4->generator()}).value == f2->one());
  try {
    trace(e, FieldElement{f8.get(), f8->generator()});
    FAIL("expected FieldMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kFieldMismatch);
  }
}

TEST_CASE("minimal polynomials") {
  auto f2 = make_field(2, 1), f4 = make_field(2, 2), f8 = make_field(2, 3);
  Polynomial one = minimal_polynomial(Embedding(f2, f4), f4->one());
  REQUIRE(one.degree() == 1);
  CHECK(one.coefficient(0) == f2->one());  // x - 1 = x + 1 in characteristic 2

  Embedding e4(f2, f4);
  Polynomial mw = minimal_polynomial(e4, f4->generator());
  REQUIRE(mw.degree() == 2);
  for (std::size_t i = 0; i <= 2; ++i) CHECK(mw.coefficient(i) == f2->one());

  Embedding e8(f2, f8);
  Polynomial mg = minimal_polynomial(e8, f8->generator());
  REQUIRE(mg.degree() == 3);
  CHECK(mg.field->size() == 2);
  for (std::size_t s = 0; s < f8->size(); ++s) {
    Elem x = FieldTable::from_slot(s);
    bool root = evaluate(mg, e8, x).is_zero();
    CHECK(root == (!x.is_zero() && frobenius_orbit_size(e8, x) == 3 &&
                   (x == f8->generator() || x == f8->pow(f8->generator(), 2) ||
                    x == f8->pow(f8->generator(), 4))));
  }

  auto f3 = make_field(3, 1), f9 = make_field(3, 2);
  Embedding e9(f3, f9);
  Polynomial m1 = minimal_polynomial(e9, f9->one());
  REQUIRE(m1.degree() == 1);
  CHECK(m1.coefficient(0) == f3->neg(f3->one()));
  CHECK_THROWS_AS(minimal_polynomial(e9, FieldElement{f4.get(), f4->one()}), Error);
}

TEST_CASE("field_to_json dumps the tables") {
  FieldTable f = build_field(2, 2);
  auto j = field_to_json(f);
  CHECK(j["size"] == 4);
  CHECK(j["exp_table"] == nlohmann::json::array({1, 2, 3}));
  CHECK(j["log_table"][0].is_null());
  CHECK(j["zech_table"].size() == 3);
}
