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

#ifndef RGHW_SUBSPACES_HPP_
#define RGHW_SUBSPACES_HPP_

// Enumeration of j-dimensional subspaces of F_q^k through their unique
// reduced row echelon bases, plus the projections, duals and
// cyclic-group intersections used on GF(Q1) x GF(Q2).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rghw/codes.hpp"
#include "rghw/linalg.hpp"

namespace rghw {

using BigInt = boost::multiprecision::cpp_int;

enum class Ambient { kGeneric, kProduct, kCodeword };

struct SubspaceBasis {
  Ambient ambient = Ambient::kGeneric;
  Matrix rows;                      // RREF, rank == rows.rows()
  std::vector<std::size_t> pivots;  // strictly increasing

  std::size_t dim() const { return rows.rows(); }
  std::size_t ambient_dim() const { return rows.cols(); }

  bool contains(std::span<const Elem> v, const FieldTable& f) const {
    return in_row_space(rows, pivots, v, f);
  }
  // Stable text key of the subspace: vector forms of the RREF entries.
  std::string fingerprint(const FieldTable& f) const;

  bool operator==(const SubspaceBasis& other) const {
    return rows == other.rows && pivots == other.pivots;
  }
};

// Row space of an arbitrary generating set, in canonical form.
SubspaceBasis span_of(Matrix generators, const FieldTable& f, Ambient ambient = Ambient::kGeneric);
SubspaceBasis zero_subspace(std::size_t ambient_dim, Ambient ambient = Ambient::kGeneric);
SubspaceBasis full_space(std::size_t ambient_dim, const FieldTable& f, Ambient ambient = Ambient::kGeneric);

// Number of j-dimensional subspaces of F_q^k.
BigInt gaussian_binomial(std::uint32_t k, std::uint32_t j, std::uint64_t q);

// All j-dimensional subspaces of F_q^k, each once. Order: pivot sets in
// lexicographic order, then free entries as a base-q odometer (last free
// entry fastest, digit d meaning the element with slot d).
//
// Pivot sets are the unit of parallel work: enumeration of one pivot set
// touches no shared state.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(std::uint32_t k, std::uint32_t j, FieldPtr field,
                     Ambient ambient = Ambient::kGeneric);

  std::size_t partition_count() const { return pivot_sets_.size(); }
  const std::vector<std::size_t>& pivot_set(std::size_t i) const { return pivot_sets_[i]; }
  BigInt count() const { return gaussian_binomial(k_, j_, field_->size()); }

  template <class Fn>
  void for_each_in_partition(std::size_t index, Fn&& fn) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < partition_count(); ++i) for_each_in_partition(i, fn);
  }

 private:
  std::uint32_t k_;
  std::uint32_t j_;
  FieldPtr field_;
  Ambient ambient_;
  std::vector<std::vector<std::size_t>> pivot_sets_;
};

template <class Fn>
void SubspaceEnumerator::for_each_in_partition(std::size_t index, Fn&& fn) const {
  const auto& piv = pivot_sets_[index];
  SubspaceBasis basis;
  basis.ambient = ambient_;
  basis.pivots = piv;
  basis.rows = Matrix(j_, k_);
  std::vector<bool> is_pivot(k_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t r = 0; r < j_; ++r) {
    basis.rows(r, piv[r]) = field_->one();
    for (std::size_t c = piv[r] + 1; c < k_; ++c) {
      if (!is_pivot[c]) free.emplace_back(r, c);
    }
  }
  std::vector<std::size_t> digits(free.size(), 0);
  const std::size_t q = field_->size();
  while (true) {
    fn(static_cast<const SubspaceBasis&>(basis));
    std::size_t pos = free.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      auto [r, c] = free[pos];
      if (++digits[pos] < q) {
        basis.rows(r, c) = FieldTable::from_slot(digits[pos]);
        done = false;
        break;
      }
      digits[pos] = 0;
      basis.rows(r, c) = Elem::zero();
    }
    if (done) return;
  }
}

// Runs fn(partition_index) -> R over all partitions on `workers` threads
// (0 = hardware concurrency) and returns the results in partition order.
template <class R, class Fn>
std::vector<R> map_partitions(const SubspaceEnumerator& en, unsigned workers, Fn&& fn) {
  std::vector<R> out(en.partition_count());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, out.size())));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < out.size(); i = next.fetch_add(1)) out[i] = fn(i);
  };
  if (workers <= 1) {
    run();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  pool.clear();
  return out;
}

struct Projection {
  SubspaceBasis image;   // in F_q^(k_side)
  SubspaceBasis kernel;  // in the product space
};

// pi_side restricted to H, side 1 or 2.
Projection project(const CodeSpec& spec, const SubspaceBasis& h, int side);

// Orthogonal complement under Tr_{Q1/q}(x1 x2) + Tr_{Q2/q}(y1 y2).
SubspaceBasis dual_subspace(const CodeSpec& spec, const SubspaceBasis& h);

// |{ i in [0, n) : (a1^i, a2^i) in H }|
std::uint64_t intersect_with_cyclic_group(const CodeSpec& spec, const SubspaceBasis& h);

// H meets {0} x GF(Q2) trivially (rank of the GF(Q1) block equals dim H).
bool meets_subcode_trivially(const CodeSpec& spec, const SubspaceBasis& h);
// pi_2(H) = GF(Q2).
bool projects_onto_second(const CodeSpec& spec, const SubspaceBasis& h);

// Uniformly random j-dimensional subspace of F_q^k (rejection on rank).
template <class Rng>
SubspaceBasis random_subspace(std::uint32_t k, std::uint32_t j, const FieldTable& f, Rng& rng,
                              Ambient ambient = Ambient::kGeneric) {
  while (true) {
    Matrix m(j, k);
    for (std::size_t r = 0; r < j; ++r) {
      for (std::size_t c = 0; c < k; ++c) m(r, c) = FieldTable::from_slot(rng() % f.size());
    }
    SubspaceBasis b = span_of(m, f, ambient);
    if (b.dim() == j) return b;
  }
}

}  // namespace rghw

#endif  // RGHW_SUBSPACES_HPP_
