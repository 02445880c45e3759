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

#include "rghw/codes.hpp"

#include <numeric>
#include <set>
#include <string>

#include "rghw/error.hpp"
#include "rghw/number_theory.hpp"

namespace rghw {

CoordinateMap::CoordinateMap(std::shared_ptr<const Embedding> embedding, Elem primitive)
    : embedding_(std::move(embedding)), dim_(embedding_->degree()) {
  const FieldTable& big = embedding_->sup();
  const FieldTable& small = embedding_->sub();
  for (std::uint32_t t = 0; t < dim_; ++t) basis_.push_back(big.pow(primitive, t));

  // Walk every coefficient vector once; the basis is a basis, so each
  // element of the big field is hit exactly once.
  coords_.assign(std::size_t{big.size()} * dim_, Elem::zero());
  std::vector<bool> seen(big.size(), false);
  std::vector<std::size_t> digits(dim_, 0);
  for (std::size_t idx = 0; idx < big.size(); ++idx) {
    std::size_t rest = idx;
    Elem value = Elem::zero();
    for (std::uint32_t t = 0; t < dim_; ++t) {
      digits[t] = rest % small.size();
      rest /= small.size();
      value = big.add(value, big.mul(embedding_->map(FieldTable::from_slot(digits[t])), basis_[t]));
    }
    std::size_t s = FieldTable::slot(value);
    if (seen[s]) throw Error(ErrorCode::kInternal, "coordinate basis is not a basis");
    seen[s] = true;
    for (std::uint32_t t = 0; t < dim_; ++t) coords_[s * dim_ + t] = FieldTable::from_slot(digits[t]);
  }
}

Elem CoordinateMap::element(std::span<const Elem> coords) const {
  if (coords.size() != dim_) throw Error(ErrorCode::kLengthMismatch, "coordinate vector length");
  const FieldTable& big = embedding_->sup();
  Elem value = Elem::zero();
  for (std::uint32_t t = 0; t < dim_; ++t) {
    value = big.add(value, big.mul(embedding_->map(coords[t]), basis_[t]));
  }
  return value;
}

CodeSpec build_code(const CodeParams& params, std::uint64_t size_cap) {
  auto pp = nt::prime_power(params.q);
  if (!pp) throw Error(ErrorCode::kNonPrime, "q = " + std::to_string(params.q) + " is not a prime power");
  if (params.k1 == 0 || params.k2 == 0) throw Error(ErrorCode::kRangeError, "k1, k2 must be positive");
  const auto [p, s] = *pp;

  CodeSpec spec;
  spec.params = params;
  spec.base = make_field(p, s, size_cap);
  FieldPtr f1 = make_field(p, s * params.k1, size_cap);
  FieldPtr f2 = params.k2 == params.k1 ? f1 : make_field(p, s * params.k2, size_cap);
  spec.ext1 = std::make_shared<const Embedding>(spec.base, f1);
  spec.ext2 = std::make_shared<const Embedding>(spec.base, f2);

  const std::uint64_t big1 = f1->order();
  const std::uint64_t big2 = f2->order();
  const std::uint64_t small = spec.base->order();
  if (params.e1 == 0 || big1 % params.e1 != 0) {
    throw Error(ErrorCode::kBadIndex, "e1 = " + std::to_string(params.e1) + " does not divide Q1 - 1 = " +
                                          std::to_string(big1));
  }
  if (params.e2 == 0 || big2 % params.e2 != 0) {
    throw Error(ErrorCode::kBadIndex, "e2 = " + std::to_string(params.e2) + " does not divide Q2 - 1 = " +
                                          std::to_string(big2));
  }

  spec.gamma1 = f1->generator();
  auto delta = spec.ext1->preimage(f1->pow(spec.gamma1, static_cast<std::int64_t>(big1 / small)));
  if (!delta) throw Error(ErrorCode::kInternal, "norm of gamma1 outside GF(q)");
  spec.delta = *delta;

  bool found = false;
  for (std::uint64_t u = 1; u <= big2 && !found; ++u) {
    if (std::gcd(u, big2) != 1) continue;
    Elem cand = f2->pow(f2->generator(), static_cast<std::int64_t>(u));
    auto image = spec.ext2->preimage(f2->pow(cand, static_cast<std::int64_t>(big2 / small)));
    if (image && *image == spec.delta) {
      spec.gamma2 = cand;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::kInternal, "no primitive element of GF(Q2) matches delta");

  spec.alpha1 = f1->pow(spec.gamma1, static_cast<std::int64_t>(params.e1));
  spec.alpha2 = f2->pow(spec.gamma2, static_cast<std::int64_t>(params.e2));
  spec.n1 = element_order(*f1, spec.alpha1);
  spec.n2 = element_order(*f2, spec.alpha2);
  if (spec.n1 == 1 || spec.n2 == 1) {
    throw Error(ErrorCode::kDegenerateOrder, "alpha_i = 1 (n1 = " + std::to_string(spec.n1) +
                                                 ", n2 = " + std::to_string(spec.n2) + ")");
  }
  if (frobenius_orbit_size(*spec.ext1, spec.alpha1) != params.k1) {
    throw Error(ErrorCode::kBadIndex, "alpha1 lies in a proper subfield of GF(Q1)");
  }
  if (frobenius_orbit_size(*spec.ext2, spec.alpha2) != params.k2) {
    throw Error(ErrorCode::kBadIndex, "alpha2 lies in a proper subfield of GF(Q2)");
  }
  if (params.k1 == params.k2) {
    Elem c = spec.alpha1;
    for (std::uint32_t t = 0; t < params.k1; ++t) {
      if (c == spec.alpha2) throw Error(ErrorCode::kConjugateNonzeros, "alpha1 and alpha2 are conjugate");
      c = spec.ext1->frobenius(c);
    }
  }
  spec.d = std::gcd(spec.n1, spec.n2);
  spec.n = spec.n1 / spec.d * spec.n2;

  spec.coords1 = std::make_shared<const CoordinateMap>(spec.ext1, spec.gamma1);
  spec.coords2 = std::make_shared<const CoordinateMap>(spec.ext2, spec.gamma2);

  const std::uint32_t k1 = params.k1;
  const std::uint32_t dim = spec.dim();
  spec.gram = Matrix(dim, dim);
  for (std::uint32_t a = 0; a < k1; ++a) {
    for (std::uint32_t b = 0; b < k1; ++b) {
      spec.gram(a, b) = spec.ext1->trace(f1->mul(spec.coords1->basis(a), spec.coords1->basis(b)));
    }
  }
  for (std::uint32_t a = 0; a < params.k2; ++a) {
    for (std::uint32_t b = 0; b < params.k2; ++b) {
      spec.gram(k1 + a, k1 + b) =
          spec.ext2->trace(f2->mul(spec.coords2->basis(a), spec.coords2->basis(b)));
    }
  }

  spec.cyclic_group = Matrix(0, dim);
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    auto v = flatten(spec, f1->pow(spec.alpha1, static_cast<std::int64_t>(i)),
                     f2->pow(spec.alpha2, static_cast<std::int64_t>(i)));
    spec.cyclic_group.append_row(v);
  }
  return spec;
}

Codeword codeword(const CodeSpec& spec, Elem beta1, Elem beta2) {
  const FieldTable& f1 = spec.field1();
  const FieldTable& f2 = spec.field2();
  const FieldTable& fq = *spec.base;
  Codeword w{std::vector<Elem>(spec.n), beta1, beta2};
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    const auto e = static_cast<std::int64_t>(i);
    Elem t1 = spec.ext1->trace(f1.mul(beta1, f1.pow(spec.alpha1, e)));
    Elem t2 = spec.ext2->trace(f2.mul(beta2, f2.pow(spec.alpha2, e)));
    w.coordinates[i] = fq.add(t1, t2);
  }
  return w;
}

Codeword codeword(const CodeSpec& spec, FieldElement beta1, FieldElement beta2) {
  if (beta1.field == nullptr || !beta1.field->same_as(spec.field1())) {
    throw Error(ErrorCode::kFieldMismatch, "beta1 is not in GF(Q1)");
  }
  if (beta2.field == nullptr || !beta2.field->same_as(spec.field2())) {
    throw Error(ErrorCode::kFieldMismatch, "beta2 is not in GF(Q2)");
  }
  return codeword(spec, beta1.value, beta2.value);
}

Codeword subcode_codeword(const CodeSpec& spec, Elem beta2) {
  return codeword(spec, Elem::zero(), beta2);
}

Codeword subcode_codeword(const CodeSpec& spec, FieldElement beta2) {
  return codeword(spec, FieldElement{&spec.field1(), Elem::zero()}, beta2);
}

std::vector<Elem> irreducible_codeword(const CodeSpec& spec, int side, Elem beta) {
  const Embedding& ext = side == 1 ? *spec.ext1 : *spec.ext2;
  const Elem alpha = side == 1 ? spec.alpha1 : spec.alpha2;
  const std::uint64_t len = side == 1 ? spec.n1 : spec.n2;
  const FieldTable& f = ext.sup();
  std::vector<Elem> out(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    out[i] = ext.trace(f.mul(beta, f.pow(alpha, static_cast<std::int64_t>(i))));
  }
  return out;
}

std::vector<Elem> flatten(const CodeSpec& spec, Elem beta1, Elem beta2) {
  std::vector<Elem> v;
  v.reserve(spec.dim());
  auto c1 = spec.coords1->coords(beta1);
  auto c2 = spec.coords2->coords(beta2);
  v.insert(v.end(), c1.begin(), c1.end());
  v.insert(v.end(), c2.begin(), c2.end());
  return v;
}

std::pair<Elem, Elem> unflatten(const CodeSpec& spec, std::span<const Elem> v) {
  if (v.size() != spec.dim()) throw Error(ErrorCode::kLengthMismatch, "product vector length");
  return {spec.coords1->element(v.first(spec.k1())), spec.coords2->element(v.subspan(spec.k1()))};
}

Codeword codeword_of(const CodeSpec& spec, std::span<const Elem> v) {
  auto [b1, b2] = unflatten(spec, v);
  return codeword(spec, b1, b2);
}

namespace {

template <class Get>
std::vector<std::size_t> support_impl(std::size_t count, Get get) {
  if (count == 0) return {};
  const std::size_t len = get(0).size();
  std::vector<bool> hit(len, false);
  for (std::size_t w = 0; w < count; ++w) {
    const auto& word = get(w);
    if (word.size() != len) throw Error(ErrorCode::kLengthMismatch, "words differ in length");
    for (std::size_t i = 0; i < len; ++i) {
      if (!word[i].is_zero()) hit[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < len; ++i) {
    if (hit[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> support(std::span<const Codeword> words) {
  return support_impl(words.size(), [&](std::size_t i) -> const std::vector<Elem>& {
    return words[i].coordinates;
  });
}

std::vector<std::size_t> support(std::span<const std::vector<Elem>> words) {
  return support_impl(words.size(), [&](std::size_t i) -> const std::vector<Elem>& { return words[i]; });
}

std::size_t hamming_weight(std::span<const Elem> word) {
  std::size_t w = 0;
  for (Elem x : word) w += x.is_zero() ? 0 : 1;
  return w;
}

Polynomial parity_check_polynomial(const CodeSpec& spec) {
  Polynomial h1 = minimal_polynomial(*spec.ext1, spec.field1().inv(spec.alpha1));
  Polynomial h2 = minimal_polynomial(*spec.ext2, spec.field2().inv(spec.alpha2));
  return h1 * h2;
}

bool satisfies_recurrence(const Polynomial& h, std::span<const Elem> word, const FieldTable& f) {
  const std::size_t n = word.size();
  const int deg = h.degree();
  for (std::size_t i = 0; i < n; ++i) {
    Elem acc = Elem::zero();
    for (int t = 0; t <= deg; ++t) {
      acc = f.add(acc, f.mul(h.coefficient(static_cast<std::size_t>(deg - t)), word[(i + t) % n]));
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

void write_codewords_text(std::ostream& out, const CodeSpec& spec, std::span<const Codeword> words) {
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.coordinates.size(); ++i) {
      if (i) out << ' ';
      out << spec.base->to_vector(w.coordinates[i]);
    }
    out << '\n';
  }
}

nlohmann::json codewords_to_json(const CodeSpec& spec, std::span<const Codeword> words) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& w : words) {
    nlohmann::json row = nlohmann::json::array();
    for (Elem x : w.coordinates) row.push_back(spec.base->to_vector(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rghw
