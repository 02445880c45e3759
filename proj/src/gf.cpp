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

#include "rghw/gf.hpp"

#include <numeric>
#include <string>

#include "rghw/error.hpp"
#include "rghw/number_theory.hpp"

namespace rghw {

namespace {

// Multiplies the vector form v by x modulo the monic polynomial `poly`.
std::uint32_t times_x(std::uint32_t v, const std::vector<std::uint32_t>& poly, std::uint32_t p,
                      std::uint32_t m) {
  std::vector<std::uint32_t> digits(m);
  for (std::uint32_t t = 0; t < m; ++t) {
    digits[t] = v % p;
    v /= p;
  }
  std::uint32_t top = digits[m - 1];
  for (std::uint32_t t = m - 1; t > 0; --t) digits[t] = digits[t - 1];
  digits[0] = 0;
  for (std::uint32_t t = 0; t < m; ++t) {
    std::uint32_t sub = (top * poly[t]) % p;
    digits[t] = (digits[t] + p - sub) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t t = m; t-- > 0;) out = out * p + digits[t];
  return out;
}

std::uint32_t add_vectors(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t m) {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t t = 0; t < m; ++t) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

}  // namespace

FieldTable build_field(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::kRangeError, "extension degree must be positive");
  auto size = nt::checked_pow(p, m);
  if (!size || *size > size_cap || *size > UINT32_MAX / 2) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds the size cap");
  }

  FieldTable f;
  f.p_ = p;
  f.m_ = m;
  f.size_ = static_cast<std::uint32_t>(*size);
  const std::uint32_t order = f.size_ - 1;

  std::vector<std::uint32_t> poly(m + 1);
  std::vector<std::uint32_t> exp(order);
  bool found = false;
  for (std::uint32_t lower = 0; lower < f.size_ && !found; ++lower) {
    std::uint32_t rest = lower;
    for (std::uint32_t t = 0; t < m; ++t) {
      poly[t] = rest % p;
      rest /= p;
    }
    poly[m] = 1;
    if (poly[0] == 0) continue;
    // The root of poly is primitive iff the powers of x run through
    // exactly `order` distinct nonzero values before returning to 1.
    std::uint32_t state = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i < order; ++i) {
      if (state == 0 || (i > 0 && state == 1)) {
        ok = false;
        break;
      }
      exp[i] = state;
      state = times_x(state, poly, p, m);
    }
    found = ok && state == 1;
  }
  if (!found) throw Error(ErrorCode::kInternal, "no primitive polynomial found");

  f.poly_ = poly;
  f.exp_ = std::move(exp);
  f.log_.assign(f.size_, Elem::kZeroRepr);
  for (std::uint32_t i = 0; i < order; ++i) f.log_[f.exp_[i]] = i;
  f.zech_.resize(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    std::uint32_t w = add_vectors(f.exp_[i], 1, p, m);
    f.zech_[i] = f.log_[w];
  }

  f.abs_trace_.resize(f.size_);
  for (std::size_t s = 0; s < f.size_; ++s) {
    Elem a = FieldTable::from_slot(s);
    Elem acc = Elem::zero();
    Elem term = a;
    for (std::uint32_t t = 0; t < m; ++t) {
      acc = f.add(acc, term);
      term = f.pow(term, p);
    }
    f.abs_trace_[s] = f.to_vector(acc);
  }
  return f;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap) {
  return std::make_shared<const FieldTable>(build_field(p, m, size_cap));
}

Elem FieldTable::inv(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::kZeroElement, "inverse of zero");
  return Elem::from_log(a.log() == 0 ? 0 : order() - a.log());
}

Elem FieldTable::pow(Elem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(ErrorCode::kZeroElement, "negative power of zero");
    return e == 0 ? one() : Elem::zero();
  }
  const std::int64_t n = order();
  std::int64_t r = e % n;
  if (r < 0) r += n;
  return Elem::from_log(static_cast<std::uint32_t>(nt::mul_mod(a.log(), static_cast<std::uint64_t>(r), n)));
}

Elem FieldTable::from_vector(std::uint32_t v) const {
  if (v >= size_) throw Error(ErrorCode::kFieldMismatch, "vector form out of range");
  return v == 0 ? Elem::zero() : Elem::from_log(log_[v]);
}

std::uint64_t element_order(const FieldTable& field, Elem a) {
  if (a.is_zero()) throw Error(ErrorCode::kZeroElement, "order of zero");
  const std::uint64_t n = field.order();
  return n / std::gcd(n, std::uint64_t{a.log()});
}

Embedding::Embedding(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
  if (sub_->p() != sup_->p() || sup_->m() % sub_->m() != 0) {
    throw Error(ErrorCode::kNotASubfield, "GF(" + std::to_string(sub_->size()) +
                                              ") is not a subfield of GF(" +
                                              std::to_string(sup_->size()) + ")");
  }
  degree_ = sup_->m() / sub_->m();
  const std::uint64_t q1 = sub_->order();
  cofactor_ = sup_->order() / q1;

  // Prime-field coefficients live in every field as constant polynomials.
  const auto& poly = sub_->primitive_polynomial();
  auto is_root = [&](Elem x) {
    Elem acc = Elem::zero();
    for (std::size_t t = poly.size(); t-- > 0;) {
      acc = sup_->add(sup_->mul(acc, x), sup_->from_prime(poly[t]));
    }
    return acc.is_zero();
  };
  std::uint64_t u = 0;
  for (std::uint64_t cand = 1; cand <= q1; ++cand) {
    if (std::gcd(cand, q1) != 1) continue;
    Elem image = sup_->pow(sup_->generator(), static_cast<std::int64_t>(cand * cofactor_));
    if (is_root(image)) {
      u = cand;
      break;
    }
  }
  if (u == 0) throw Error(ErrorCode::kInternal, "no root of the subfield polynomial found");
  image_log_ = (u * cofactor_) % std::max<std::uint64_t>(sup_->order(), 1);
  u_inverse_ = q1 == 1 ? 0 : nt::mod_inverse(u, q1);

  trace_.resize(sup_->size());
  for (std::size_t s = 0; s < sup_->size(); ++s) {
    Elem a = FieldTable::from_slot(s);
    Elem acc = Elem::zero();
    Elem term = a;
    for (std::uint32_t t = 0; t < degree_; ++t) {
      acc = sup_->add(acc, term);
      term = sup_->pow(term, sub_->size());
    }
    auto pre = preimage(acc);
    if (!pre) throw Error(ErrorCode::kInternal, "trace left the subfield");
    trace_[s] = *pre;
  }
}

Elem Embedding::map(Elem a) const {
  if (a.is_zero()) return a;
  return Elem::from_log(static_cast<std::uint32_t>(nt::mul_mod(a.log(), image_log_, sup_->order())));
}

std::optional<Elem> Embedding::preimage(Elem a) const {
  if (a.is_zero()) return Elem::zero();
  if (a.log() % cofactor_ != 0) return std::nullopt;
  const std::uint64_t q1 = sub_->order();
  if (q1 == 1) return sub_->one();
  std::uint64_t k = a.log() / cofactor_;
  return Elem::from_log(static_cast<std::uint32_t>(nt::mul_mod(k, u_inverse_, q1)));
}

Elem Embedding::frobenius(Elem a, std::uint32_t times) const {
  Elem r = a;
  for (std::uint32_t t = 0; t < times; ++t) r = sup_->pow(r, sub_->size());
  return r;
}

Elem trace(const FieldPtr& sup, const FieldPtr& sub, Elem a) {
  return Embedding(sub, sup).trace(a);
}

FieldElement trace(const Embedding& embedding, FieldElement a) {
  if (a.field == nullptr || !a.field->same_as(embedding.sup())) {
    throw Error(ErrorCode::kFieldMismatch, "trace argument is not in the extension field");
  }
  return FieldElement{&embedding.sub(), embedding.trace(a.value)};
}

std::uint32_t frobenius_orbit_size(const Embedding& embedding, Elem a) {
  std::uint32_t count = 1;
  Elem x = embedding.frobenius(a);
  while (x != a) {
    x = embedding.frobenius(x);
    ++count;
  }
  return count;
}

void Polynomial::normalize() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!a.field->same_as(*b.field)) throw Error(ErrorCode::kFieldMismatch, "polynomial fields differ");
  Polynomial out{a.field, {}};
  if (a.is_zero() || b.is_zero()) return out;
  const FieldTable& f = *a.field;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Elem::zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] = f.add(out.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  out.normalize();
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!a.field->same_as(*b.field)) throw Error(ErrorCode::kFieldMismatch, "polynomial fields differ");
  Polynomial out{a.field, {}};
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = a.field->add(a.coefficient(i), b.coefficient(i));
  }
  out.normalize();
  return out;
}

Elem evaluate(const Polynomial& poly, const Embedding& embedding, Elem x) {
  const FieldTable& f = embedding.sup();
  Elem acc = Elem::zero();
  for (std::size_t t = poly.coeffs.size(); t-- > 0;) {
    acc = f.add(f.mul(acc, x), embedding.map(poly.coeffs[t]));
  }
  return acc;
}

Polynomial minimal_polynomial(const Embedding& embedding, Elem a) {
  if (a.is_zero()) throw Error(ErrorCode::kZeroElement, "minimal polynomial of zero");
  const FieldTable& f = embedding.sup();
  // Expand prod (x - c) in the larger field, then pull coefficients down.
  std::vector<Elem> big{f.one()};
  Elem c = a;
  do {
    std::vector<Elem> next(big.size() + 1, Elem::zero());
    Elem minus_c = f.neg(c);
    for (std::size_t i = 0; i < big.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], big[i]);
      next[i] = f.add(next[i], f.mul(big[i], minus_c));
    }
    big = std::move(next);
    c = embedding.frobenius(c);
  } while (c != a);

  Polynomial out{embedding.sub_ptr(), {}};
  out.coeffs.reserve(big.size());
  for (Elem coeff : big) {
    auto pre = embedding.preimage(coeff);
    if (!pre) throw Error(ErrorCode::kInternal, "minimal polynomial coefficient outside subfield");
    out.coeffs.push_back(*pre);
  }
  return out;
}

Polynomial minimal_polynomial(const Embedding& embedding, FieldElement a) {
  if (a.field == nullptr || !a.field->same_as(embedding.sup())) {
    throw Error(ErrorCode::kFieldMismatch, "element is not in the extension field");
  }
  return minimal_polynomial(embedding, a.value);
}

nlohmann::json field_to_json(const FieldTable& field) {
  auto nullable = [](const std::vector<std::uint32_t>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::uint32_t x : v) {
      if (x == Elem::kZeroRepr) {
        arr.push_back(nullptr);
      } else {
        arr.push_back(x);
      }
    }
    return arr;
  };
  return nlohmann::json{{"p", field.p()},
                        {"m", field.m()},
                        {"size", field.size()},
                        {"primitive_polynomial", field.primitive_polynomial()},
                        {"exp_table", field.exp_table()},
                        {"log_table", nullable(field.log_table())},
                        {"zech_table", nullable(field.zech_table())}};
}

}  // namespace rghw
