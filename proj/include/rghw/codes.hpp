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

#ifndef RGHW_CODES_HPP_
#define RGHW_CODES_HPP_

// Two-nonzero cyclic codes and their irreducible subcodes.
//
//   C  = { c(b1, b2) : b1 in GF(Q1), b2 in GF(Q2) }
//   C' = { c(0, b2) }
//
// with c(b1, b2)_i = Tr_{Q1/q}(b1 a1^i) + Tr_{Q2/q}(b2 a2^i), 0 <= i < n.

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rghw/gf.hpp"
#include "rghw/linalg.hpp"

namespace rghw {

// F_q-coordinates of GF(Q) in the polynomial basis {1, g, ..., g^(k-1)}
// of a chosen primitive element g.
class CoordinateMap {
 public:
  CoordinateMap(std::shared_ptr<const Embedding> embedding, Elem primitive);

  std::uint32_t dim() const { return dim_; }
  const Embedding& embedding() const { return *embedding_; }
  // Basis element g^t in the larger field.
  Elem basis(std::size_t t) const { return basis_[t]; }

  std::span<const Elem> coords(Elem a) const {
    return {coords_.data() + FieldTable::slot(a) * dim_, dim_};
  }
  Elem element(std::span<const Elem> coords) const;

 private:
  std::shared_ptr<const Embedding> embedding_;
  std::uint32_t dim_ = 0;
  std::vector<Elem> basis_;
  std::vector<Elem> coords_;  // slot-major, dim_ entries per element
};

struct CodeParams {
  std::uint32_t q = 2;
  std::uint32_t k1 = 2;
  std::uint32_t k2 = 3;
  std::uint64_t e1 = 1;
  std::uint64_t e2 = 1;
};

struct CodeSpec {
  CodeParams params;
  FieldPtr base;                              // GF(q)
  std::shared_ptr<const Embedding> ext1;      // GF(q) -> GF(Q1)
  std::shared_ptr<const Embedding> ext2;      // GF(q) -> GF(Q2)
  std::shared_ptr<const CoordinateMap> coords1;
  std::shared_ptr<const CoordinateMap> coords2;

  Elem gamma1, gamma2;  // primitive elements of GF(Q1), GF(Q2)
  Elem alpha1, alpha2;  // alpha_i = gamma_i^e_i
  Elem delta;           // gamma_1^((Q1-1)/(q-1)) as an element of GF(q)
  std::uint64_t n1 = 0, n2 = 0, d = 0, n = 0;

  // Trace form <(x1,y1),(x2,y2)> in flattened coordinates, (k1+k2)^2.
  Matrix gram;
  // Flattened (a1^i, a2^i) for 0 <= i < n.
  Matrix cyclic_group;

  std::uint32_t q() const { return params.q; }
  std::uint32_t k1() const { return params.k1; }
  std::uint32_t k2() const { return params.k2; }
  std::uint32_t dim() const { return params.k1 + params.k2; }
  std::uint64_t e1() const { return params.e1; }
  std::uint64_t e2() const { return params.e2; }
  std::uint64_t Q1() const { return ext1->sup().size(); }
  std::uint64_t Q2() const { return ext2->sup().size(); }
  const FieldTable& field1() const { return ext1->sup(); }
  const FieldTable& field2() const { return ext2->sup(); }
  bool coprime_orders() const { return d == 1; }
};

// Validates the parameters and builds C and C'. gamma1 is the table
// generator of GF(Q1); gamma2 is the primitive element of GF(Q2) with the
// smallest discrete log for which both sides induce the same primitive
// element of GF(q).
CodeSpec build_code(const CodeParams& params,
                    std::uint64_t size_cap = FieldTable::kDefaultSizeCap);

struct Codeword {
  std::vector<Elem> coordinates;  // over GF(q)
  Elem beta1, beta2;
};

Codeword codeword(const CodeSpec& spec, Elem beta1, Elem beta2);
Codeword codeword(const CodeSpec& spec, FieldElement beta1, FieldElement beta2);
Codeword subcode_codeword(const CodeSpec& spec, Elem beta2);
Codeword subcode_codeword(const CodeSpec& spec, FieldElement beta2);

// Codeword of the irreducible code C_side: Tr(b a_side^i), 0 <= i < n_side.
std::vector<Elem> irreducible_codeword(const CodeSpec& spec, int side, Elem beta);

// Product-space vectors (b1, b2) <-> F_q^(k1+k2).
std::vector<Elem> flatten(const CodeSpec& spec, Elem beta1, Elem beta2);
std::pair<Elem, Elem> unflatten(const CodeSpec& spec, std::span<const Elem> v);

// Codeword of a flattened product-space vector.
Codeword codeword_of(const CodeSpec& spec, std::span<const Elem> v);

// Union of nonzero positions. Linearity makes the union over a spanning
// set equal to the support of the spanned subspace.
std::vector<std::size_t> support(std::span<const Codeword> words);
std::vector<std::size_t> support(std::span<const std::vector<Elem>> words);

std::size_t hamming_weight(std::span<const Elem> word);

// h1(x) h2(x), h_i the minimal polynomial of a_i^(-1) over GF(q).
Polynomial parity_check_polynomial(const CodeSpec& spec);

// True when sum_t h_(K-t) c_(i+t mod n) = 0 for all i, K = deg h: the
// recurrence whose characteristic polynomial is the reciprocal of h.
bool satisfies_recurrence(const Polynomial& h, std::span<const Elem> word, const FieldTable& f);

// Export helpers. Entries are vector forms of GF(q) elements (residues
// when q is prime).
void write_codewords_text(std::ostream& out, const CodeSpec& spec, std::span<const Codeword> words);
nlohmann::json codewords_to_json(const CodeSpec& spec, std::span<const Codeword> words);

}  // namespace rghw

#endif  // RGHW_CODES_HPP_
