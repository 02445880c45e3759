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

#include "rghw/subspaces.hpp"

#include <sstream>

#include "rghw/error.hpp"

namespace rghw {

std::string SubspaceBasis::fingerprint(const FieldTable& f) const {
  std::ostringstream os;
  os << dim() << '/' << ambient_dim() << ':';
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (r) os << '|';
    for (std::size_t c = 0; c < rows.cols(); ++c) {
      if (c && f.size() > 10) os << ',';
      os << f.to_vector(rows(r, c));
    }
  }
  return os.str();
}

SubspaceBasis span_of(Matrix generators, const FieldTable& f, Ambient ambient) {
  SubspaceBasis b;
  b.ambient = ambient;
  b.pivots = rref(generators, f);
  b.rows = std::move(generators);
  return b;
}

SubspaceBasis zero_subspace(std::size_t ambient_dim, Ambient ambient) {
  SubspaceBasis b;
  b.ambient = ambient;
  b.rows = Matrix(0, ambient_dim);
  return b;
}

SubspaceBasis full_space(std::size_t ambient_dim, const FieldTable& f, Ambient ambient) {
  Matrix id(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) id(i, i) = f.one();
  return span_of(std::move(id), f, ambient);
}

BigInt gaussian_binomial(std::uint32_t k, std::uint32_t j, std::uint64_t q) {
  if (j > k) throw Error(ErrorCode::kRangeError, "gaussian_binomial needs 0 <= j <= k");
  BigInt num = 1, den = 1;
  const BigInt bq = q;
  for (std::uint32_t i = 0; i < j; ++i) {
    num *= boost::multiprecision::pow(bq, k - i) - 1;
    den *= boost::multiprecision::pow(bq, j - i) - 1;
  }
  return num / den;
}

SubspaceEnumerator::SubspaceEnumerator(std::uint32_t k, std::uint32_t j, FieldPtr field, Ambient ambient)
    : k_(k), j_(j), field_(std::move(field)), ambient_(ambient) {
  if (j > k) throw Error(ErrorCode::kRangeError, "subspace dimension exceeds ambient dimension");
  std::vector<std::size_t> comb(j);
  for (std::size_t i = 0; i < j; ++i) comb[i] = i;
  while (true) {
    pivot_sets_.push_back(comb);
    std::size_t i = j;
    while (i > 0 && comb[i - 1] == k - j + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t t = i; t < j; ++t) comb[t] = comb[t - 1] + 1;
  }
}

Projection project(const CodeSpec& spec, const SubspaceBasis& h, int side) {
  const FieldTable& f = *spec.base;
  const std::size_t first = side == 1 ? 0 : spec.k1();
  const std::size_t width = side == 1 ? spec.k1() : spec.k2();
  Matrix block(h.dim(), width);
  for (std::size_t r = 0; r < h.dim(); ++r) {
    for (std::size_t c = 0; c < width; ++c) block(r, c) = h.rows(r, first + c);
  }
  Projection out;
  out.image = span_of(block, f);
  Matrix coeffs = left_nullspace(block, f);
  Matrix kernel = coeffs.rows() == 0 ? Matrix(0, h.ambient_dim()) : multiply(coeffs, h.rows, f);
  out.kernel = span_of(std::move(kernel), f, h.ambient);
  return out;
}

SubspaceBasis dual_subspace(const CodeSpec& spec, const SubspaceBasis& h) {
  const FieldTable& f = *spec.base;
  if (h.dim() == 0) return full_space(spec.dim(), f, Ambient::kProduct);
  Matrix form = multiply(h.rows, spec.gram, f);
  return span_of(right_nullspace(form, f), f, Ambient::kProduct);
}

std::uint64_t intersect_with_cyclic_group(const CodeSpec& spec, const SubspaceBasis& h) {
  const FieldTable& f = *spec.base;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < spec.cyclic_group.rows(); ++i) {
    if (h.contains(spec.cyclic_group.row(i), f)) ++count;
  }
  return count;
}

bool meets_subcode_trivially(const CodeSpec& spec, const SubspaceBasis& h) {
  return column_block_rank(h.rows, 0, spec.k1(), *spec.base) == h.dim();
}

bool projects_onto_second(const CodeSpec& spec, const SubspaceBasis& h) {
  return column_block_rank(h.rows, spec.k1(), spec.k2(), *spec.base) == spec.k2();
}

}  // namespace rghw
