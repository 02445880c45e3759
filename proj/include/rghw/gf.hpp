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

#ifndef RGHW_GF_HPP_
#define RGHW_GF_HPP_

// Table-driven finite fields GF(p^m) in discrete-log representation.
//
// A nonzero element is stored as its discrete log with respect to the
// table generator (the root of the field's primitive polynomial); zero is
// kept out of band. Multiplication, inversion and powers are index
// arithmetic, addition goes through the Zech logarithm table.
//
// Each element also has a "vector" form: the integer sum c_t * p^t of its
// coefficients in the polynomial basis {1, x, ..., x^(m-1)}. For a prime
// field this is the residue itself.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

namespace rghw {

class Elem {
 public:
  static constexpr std::uint32_t kZeroRepr = 0xffffffffu;

  constexpr Elem() = default;
  static constexpr Elem zero() { return Elem(); }
  static constexpr Elem from_log(std::uint32_t log) { return Elem(log); }

  constexpr bool is_zero() const { return repr_ == kZeroRepr; }
  constexpr std::uint32_t log() const { return repr_; }
  constexpr std::uint32_t repr() const { return repr_; }

  constexpr auto operator<=>(const Elem&) const = default;

 private:
  constexpr explicit Elem(std::uint32_t r) : repr_(r) {}
  std::uint32_t repr_ = kZeroRepr;
};

class FieldTable {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t size() const { return size_; }
  // Order of the multiplicative group, size - 1.
  std::uint32_t order() const { return size_ - 1; }

  // Coefficients c_0..c_m of the monic primitive polynomial.
  const std::vector<std::uint32_t>& primitive_polynomial() const { return poly_; }
  // log -> vector form.
  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  // vector form -> log; entry 0 holds Elem::kZeroRepr.
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  // i -> log(1 + g^i), Elem::kZeroRepr where 1 + g^i = 0.
  const std::vector<std::uint32_t>& zech_table() const { return zech_; }

  Elem one() const { return Elem::from_log(0); }
  Elem generator() const { return Elem::from_log(order() == 1 ? 0 : 1); }

  Elem add(Elem a, Elem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint32_t diff = b.log() >= a.log() ? b.log() - a.log() : b.log() + order() - a.log();
    std::uint32_t z = zech_[diff];
    if (z == Elem::kZeroRepr) return Elem::zero();
    return Elem::from_log(reduce(std::uint64_t{a.log()} + z));
  }
  Elem neg(Elem a) const {
    if (a.is_zero() || p_ == 2) return a;
    return Elem::from_log(reduce(std::uint64_t{a.log()} + order() / 2));
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return Elem::zero();
    return Elem::from_log(reduce(std::uint64_t{a.log()} + b.log()));
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // a^e for any integer e; 0^0 = 1, 0^e = 0 for e > 0, 0^e throws for e < 0.
  Elem pow(Elem a, std::int64_t e) const;

  // Element with the given vector form.
  Elem from_vector(std::uint32_t v) const;
  std::uint32_t to_vector(Elem a) const { return a.is_zero() ? 0 : exp_[a.log()]; }
  // Prime-field element c (0 <= c < p).
  Elem from_prime(std::uint32_t c) const { return from_vector(c % p_); }

  // Dense index in [0, size): 0 for zero, log + 1 otherwise.
  static std::size_t slot(Elem a) { return a.is_zero() ? 0 : std::size_t{a.log()} + 1; }
  static Elem from_slot(std::size_t s) {
    return s == 0 ? Elem::zero() : Elem::from_log(static_cast<std::uint32_t>(s - 1));
  }

  // Absolute trace into GF(p), as an integer residue.
  std::uint32_t abs_trace(Elem a) const { return abs_trace_[slot(a)]; }

  bool same_as(const FieldTable& other) const { return p_ == other.p_ && m_ == other.m_; }

 private:
  friend FieldTable build_field(std::uint32_t, std::uint32_t, std::uint64_t);
  FieldTable() = default;

  std::uint32_t reduce(std::uint64_t x) const { return static_cast<std::uint32_t>(x % order()); }

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> poly_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> abs_trace_;
};

using FieldPtr = std::shared_ptr<const FieldTable>;

// Builds GF(p^m). The primitive polynomial is the first monic degree-m
// polynomial, ordered by the integer sum c_t * p^t of its lower
// coefficients, whose root generates the multiplicative group.
FieldTable build_field(std::uint32_t p, std::uint32_t m,
                       std::uint64_t size_cap = FieldTable::kDefaultSizeCap);
FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::uint64_t size_cap = FieldTable::kDefaultSizeCap);

// An element tagged with its field, for API boundaries that must reject
// elements of the wrong field.
struct FieldElement {
  const FieldTable* field = nullptr;
  Elem value;
};

// Smallest n >= 1 with a^n = 1.
std::uint64_t element_order(const FieldTable& field, Elem a);

// Embedding of a subfield GF(q) into GF(Q), Q = q^t.
//
// The canonical generator of the subfield is sent to g^(u (Q-1)/(q-1)),
// g the generator of the larger field and u the smallest exponent coprime
// to q - 1 for which the image is a root of the subfield's primitive
// polynomial. When the two tables are compatible, u = 1.
class Embedding {
 public:
  Embedding(FieldPtr sub, FieldPtr sup);

  const FieldTable& sub() const { return *sub_; }
  const FieldTable& sup() const { return *sup_; }
  const FieldPtr& sub_ptr() const { return sub_; }
  const FieldPtr& sup_ptr() const { return sup_; }
  // [sup : sub]
  std::uint32_t degree() const { return degree_; }
  // Log in sup of the image of the subfield generator.
  std::uint64_t generator_image_log() const { return image_log_; }

  Elem map(Elem a) const;
  // Element of sub mapping to a, or nullopt when a is outside the subfield.
  std::optional<Elem> preimage(Elem a) const;
  // Relative trace a + a^q + ... + a^(q^(t-1)), returned in sub.
  Elem trace(Elem a) const { return trace_[FieldTable::slot(a)]; }
  // a^q in sup.
  Elem frobenius(Elem a, std::uint32_t times = 1) const;

 private:
  FieldPtr sub_;
  FieldPtr sup_;
  std::uint32_t degree_ = 0;
  std::uint64_t cofactor_ = 0;   // (Q-1)/(q-1)
  std::uint64_t image_log_ = 0;  // u * cofactor
  std::uint64_t u_inverse_ = 0;  // u^-1 mod (q-1)
  std::vector<Elem> trace_;
};

// Relative trace with a freshly constructed embedding.
Elem trace(const FieldPtr& sup, const FieldPtr& sub, Elem a);
FieldElement trace(const Embedding& embedding, FieldElement a);

// Size of the orbit {a, a^q, a^(q^2), ...} in the larger field.
std::uint32_t frobenius_orbit_size(const Embedding& embedding, Elem a);

// Polynomial over a field, coefficients low degree first. The zero
// polynomial has no coefficients.
struct Polynomial {
  FieldPtr field;
  std::vector<Elem> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Elem leading() const { return coeffs.empty() ? Elem::zero() : coeffs.back(); }
  Elem coefficient(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Elem::zero(); }
  void normalize();
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator+(const Polynomial& a, const Polynomial& b);

// Evaluates a polynomial over sub at a point of sup.
Elem evaluate(const Polynomial& poly, const Embedding& embedding, Elem x);

// Minimal polynomial over the embedding's subfield of a nonzero a in its
// larger field, as the product of (x - c) over the Frobenius orbit of a.
Polynomial minimal_polynomial(const Embedding& embedding, Elem a);
Polynomial minimal_polynomial(const Embedding& embedding, FieldElement a);

// Debug dump: {p, m, size, primitive_polynomial, exp_table, log_table,
// zech_table}; zero entries in log/zech are written as null.
nlohmann::json field_to_json(const FieldTable& field);

}  // namespace rghw

#endif  // RGHW_GF_HPP_
