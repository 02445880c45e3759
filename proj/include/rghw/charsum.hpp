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

#ifndef RGHW_CHARSUM_HPP_
#define RGHW_CHARSUM_HPP_

// Multiplicative characters, Gauss sums and the character-sum expansion
// of N_j(D) used as an independent oracle for the zero-count of a
// subspace of codewords.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rghw/codes.hpp"
#include "rghw/gf.hpp"
#include "rghw/subspaces.hpp"

namespace rghw {

using Complex = std::complex<double>;

// zeta_l^t = exp(2 pi i t / l), served from a per-order table.
Complex root_of_unity(std::uint64_t l, std::uint64_t t);

// chi with chi(theta) = zeta_e^exponent, theta the chosen primitive element.
class CharacterHandle {
 public:
  CharacterHandle(FieldPtr field, std::uint64_t order, std::uint64_t exponent,
                  Elem theta);
  // Character of the given order sending the table generator to zeta_e.
  CharacterHandle(FieldPtr field, std::uint64_t order);

  const FieldTable& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }
  Elem theta() const { return theta_; }

  CharacterHandle power(std::uint64_t t) const;
  bool is_trivial() const { return exponent_ % order_ == 0; }
  // k with chi(x) = zeta_e^k; x must be nonzero.
  std::uint64_t exponent_at(Elem x) const;

 private:
  FieldPtr field_;
  std::uint64_t order_;
  std::uint64_t exponent_;
  Elem theta_;
  std::uint64_t theta_log_inverse_;  // (log theta)^-1 mod (size - 1)
};

Complex char_eval(const CharacterHandle& chi, Elem x);

// G(chi; beta) = sum_{x != 0} chi(x) zeta_p^{Tr(beta x)}, Tr the absolute trace.
Complex gauss_sum(const CharacterHandle& chi, Elem beta);

// sum_{lambda < e} chi^lambda(x) for chi(g) = zeta_e, g the table generator.
Complex orthogonality_sum(const FieldPtr& field, Elem x, std::uint64_t e);

// sum over nonzero x in the F_q-span of `basis` of psi(x); psi(0) counts as 0.
Complex incomplete_sum(const CharacterHandle& psi, const Embedding& base,
                       std::span<const Elem> basis);

struct CharsumOptions {
  // Keep only character pairs trivial on GF(q)^*; the dropped terms vanish.
  bool drop_nontrivial_on_base = true;
};

struct CharsumBreakdown {
  Complex a;           // pairs (b1, 0), b1 != 0
  Complex a_subcode;   // pairs (0, b2), b2 != 0; empty when D meets C' trivially
  Complex b;           // pairs with b1 b2 != 0
  Complex total;       // n + a + a_subcode + b
  double nj = 0;       // Re(total) / q^j
  double imag_residual = 0;
};

// N_j(D) = (n + A + A' + B) / q^j with every piece expanded into Gauss
// sums. Requires gcd(n1, n2) = 1 for the B expansion.
CharsumBreakdown nj_via_charsum(const CodeSpec& spec, const SubspaceBasis& d,
                                const CharsumOptions& options = {});

// (q^(k1+k2) - q^k1 + q^j - q^k2 |(GF(Q1),0) cap H|) / (q^j (q-1)): the
// zero-count of D in the e1 = 1, e2 = q - 1 family when D meets C'
// trivially.
double nj_closed_second_family(const CodeSpec& spec, const SubspaceBasis& d);

}  // namespace rghw

#endif  // RGHW_CHARSUM_HPP_
