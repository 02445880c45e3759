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

#ifndef RGHW_LINALG_HPP_
#define RGHW_LINALG_HPP_

// Dense row-major matrices over a table field, with the handful of
// elimination routines the subspace engine needs.

#include <cstddef>
#include <span>
#include <vector>

#include "rghw/gf.hpp"

namespace rghw {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> v);
  void resize_rows(std::size_t rows) {
    rows_ = rows;
    data_.resize(rows_ * cols_);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot columns, one per remaining row.
std::vector<std::size_t> rref(Matrix& m, const FieldTable& f);

std::size_t rank(Matrix m, const FieldTable& f);

// Rank of the submatrix made of columns [first, first + count).
std::size_t column_block_rank(const Matrix& m, std::size_t first, std::size_t count,
                              const FieldTable& f);

// Basis (as rows) of {x : m x^T = 0}.
Matrix right_nullspace(const Matrix& m, const FieldTable& f);

// Basis (as rows) of {y : y m = 0}.
Matrix left_nullspace(const Matrix& m, const FieldTable& f);

Matrix multiply(const Matrix& a, const Matrix& b, const FieldTable& f);
Matrix transpose(const Matrix& a);

// v <- v + c * w
void axpy(std::span<Elem> v, Elem c, std::span<const Elem> w, const FieldTable& f);

Elem dot(std::span<const Elem> a, std::span<const Elem> b, const FieldTable& f);

bool is_zero_vector(std::span<const Elem> v);

// True when v lies in the row space of an RREF matrix with the given pivots.
bool in_row_space(const Matrix& rref_rows, std::span<const std::size_t> pivots,
                  std::span<const Elem> v, const FieldTable& f);

// Calls fn(coeffs, vector) for every F-linear combination of the rows, in
// base-|F| odometer order (coefficient slots, last row fastest).
template <class Fn>
void for_each_in_span(const Matrix& rows, const FieldTable& f, Fn&& fn) {
  const std::size_t j = rows.rows();
  std::vector<std::size_t> digits(j, 0);
  std::vector<Elem> coeffs(j, Elem::zero());
  std::vector<Elem> v(rows.cols(), Elem::zero());
  while (true) {
    std::fill(v.begin(), v.end(), Elem::zero());
    for (std::size_t r = 0; r < j; ++r) {
      if (!coeffs[r].is_zero()) axpy(v, coeffs[r], rows.row(r), f);
    }
    fn(std::span<const Elem>(coeffs), std::span<const Elem>(v));
    std::size_t pos = j;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < f.size()) {
        coeffs[pos] = FieldTable::from_slot(digits[pos]);
        break;
      }
      digits[pos] = 0;
      coeffs[pos] = Elem::zero();
      if (pos == 0) return;
    }
    if (j == 0) return;
  }
}

}  // namespace rghw

#endif  // RGHW_LINALG_HPP_
