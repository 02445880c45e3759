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

#include "rghw/linalg.hpp"

#include <algorithm>

#include "rghw/error.hpp"

namespace rghw {

void Matrix::append_row(std::span<const Elem> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(ErrorCode::kLengthMismatch, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void axpy(std::span<Elem> v, Elem c, std::span<const Elem> w, const FieldTable& f) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] = f.add(v[i], f.mul(c, w[i]));
  }
}

Elem dot(std::span<const Elem> a, std::span<const Elem> b, const FieldTable& f) {
  Elem acc = Elem::zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

bool is_zero_vector(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x.is_zero(); });
}

std::vector<std::size_t> rref(Matrix& m, const FieldTable& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(sel, k));
    }
    Elem scale = f.inv(m(r, c));
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      axpy(m.row(i), f.neg(m(i, c)), m.row(r), f);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize_rows(r);
  return pivots;
}

std::size_t rank(Matrix m, const FieldTable& f) { return rref(m, f).size(); }

std::size_t column_block_rank(const Matrix& m, std::size_t first, std::size_t count,
                              const FieldTable& f) {
  Matrix block(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < count; ++c) block(r, c) = m(r, first + c);
  }
  return rank(std::move(block), f);
}

Matrix right_nullspace(const Matrix& m, const FieldTable& f) {
  Matrix red = m;
  auto pivots = rref(red, f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Elem::zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(red(r, free));
    out.append_row(v);
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

Matrix left_nullspace(const Matrix& m, const FieldTable& f) {
  return right_nullspace(transpose(m), f);
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldTable& f) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kLengthMismatch, "matrix shapes differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(r, k).is_zero()) axpy(out.row(r), a(r, k), b.row(k), f);
    }
  }
  return out;
}

bool in_row_space(const Matrix& rref_rows, std::span<const std::size_t> pivots,
                  std::span<const Elem> v, const FieldTable& f) {
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Elem c = w[pivots[r]];
    if (!c.is_zero()) axpy(w, f.neg(c), rref_rows.row(r), f);
  }
  return is_zero_vector(w);
}

}  // namespace rghw
