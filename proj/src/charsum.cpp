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

#include "rghw/charsum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "rghw/error.hpp"
#include "rghw/number_theory.hpp"

namespace rghw {

namespace {

const std::vector<Complex>& roots_table(std::uint64_t l) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<Complex>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(l);
  if (it == cache.end()) {
    std::vector<Complex> t(l);
    for (std::uint64_t k = 0; k < l; ++k) {
      t[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(l));
    }
    it = cache.emplace(l, std::move(t)).first;
  }
  return it->second;
}

// Gauss sums G(chi^lambda; 1) for lambda < e, chi(theta) = zeta_e.
std::vector<Complex> gauss_sums(const CharacterHandle& chi) {
  std::vector<Complex> out(chi.order());
  for (std::uint64_t lambda = 0; lambda < chi.order(); ++lambda) {
    out[lambda] = gauss_sum(chi.power(lambda), chi.field().one());
  }
  return out;
}

// Lambdas kept in the single-side sum: all of them, or those with
// chi^lambda trivial on GF(q)^*.
std::vector<std::uint64_t> kept_exponents(std::uint64_t e, std::uint64_t cofactor, bool drop) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t lambda = 0; lambda < e; ++lambda) {
    if (!drop || nt::mul_mod(lambda, cofactor, e) == 0) out.push_back(lambda);
  }
  return out;
}

// n/(e n_side) sum_lambda G(chi^lambda) sum_{b in S} conj(chi^lambda(b)).
Complex single_side_sum(const CharacterHandle& chi, std::span<const Elem> nonzero, std::uint64_t cofactor,
                        double scale, bool drop) {
  if (nonzero.empty()) return {0.0, 0.0};
  const auto g = gauss_sums(chi);
  Complex acc{0.0, 0.0};
  for (std::uint64_t lambda : kept_exponents(chi.order(), cofactor, drop)) {
    Complex inner{0.0, 0.0};
    CharacterHandle c = chi.power(lambda);
    for (Elem b : nonzero) inner += std::conj(char_eval(c, b));
    acc += g[lambda] * inner;
  }
  return scale * acc;
}

}  // namespace

Complex root_of_unity(std::uint64_t l, std::uint64_t t) { return roots_table(l)[t % l]; }

CharacterHandle::CharacterHandle(FieldPtr field, std::uint64_t order, std::uint64_t exponent, Elem theta)
    : field_(std::move(field)), order_(order), exponent_(exponent), theta_(theta) {
  const std::uint64_t n = field_->order();
  if (order_ == 0 || n % order_ != 0) {
    throw Error(ErrorCode::kBadIndex, "character order " + std::to_string(order_) + " does not divide " +
                                          std::to_string(n));
  }
  if (theta_.is_zero() || element_order(*field_, theta_) != n) {
    throw Error(ErrorCode::kBadIndex, "theta is not a primitive element");
  }
  theta_log_inverse_ = n == 1 ? 0 : nt::mod_inverse(theta_.log(), n);
}

CharacterHandle::CharacterHandle(FieldPtr field, std::uint64_t order)
    : CharacterHandle(field, order, 1, field->generator()) {}

CharacterHandle CharacterHandle::power(std::uint64_t t) const {
  return CharacterHandle(field_, order_, nt::mul_mod(exponent_, t, order_), theta_);
}

std::uint64_t CharacterHandle::exponent_at(Elem x) const {
  if (x.is_zero()) throw Error(ErrorCode::kZeroArgument, "character at zero");
  const std::uint64_t n = field_->order();
  const std::uint64_t log_theta = n == 1 ? 0 : nt::mul_mod(x.log(), theta_log_inverse_, n);
  return nt::mul_mod(exponent_ % order_, log_theta % order_, order_);
}

Complex char_eval(const CharacterHandle& chi, Elem x) {
  return root_of_unity(chi.order(), chi.exponent_at(x));
}

Complex gauss_sum(const CharacterHandle& chi, Elem beta) {
  const FieldTable& f = chi.field();
  const auto& additive = roots_table(f.p());
  const auto& multiplicative = roots_table(chi.order());
  Complex acc{0.0, 0.0};
  for (std::uint32_t l = 0; l < f.order(); ++l) {
    Elem x = Elem::from_log(l);
    acc += multiplicative[chi.exponent_at(x)] * additive[f.abs_trace(f.mul(beta, x))];
  }
  return acc;
}

Complex orthogonality_sum(const FieldPtr& field, Elem x, std::uint64_t e) {
  CharacterHandle chi(field, e);
  Complex acc{0.0, 0.0};
  for (std::uint64_t lambda = 0; lambda < e; ++lambda) acc += char_eval(chi.power(lambda), x);
  return acc;
}

Complex incomplete_sum(const CharacterHandle& psi, const Embedding& base, std::span<const Elem> basis) {
  if (!psi.field().same_as(base.sup())) throw Error(ErrorCode::kFieldMismatch, "character field");
  const FieldTable& big = base.sup();
  const FieldTable& small = base.sub();
  const std::size_t dim = basis.size();
  std::vector<std::size_t> digits(dim, 0);
  Complex acc{0.0, 0.0};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= small.size();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    Elem x = Elem::zero();
    for (std::size_t t = 0; t < dim; ++t) {
      Elem c = FieldTable::from_slot(rest % small.size());
      rest /= small.size();
      x = big.add(x, big.mul(base.map(c), basis[t]));
    }
    if (!x.is_zero()) acc += char_eval(psi, x);
  }
  return acc;
}

CharsumBreakdown nj_via_charsum(const CodeSpec& spec, const SubspaceBasis& d, const CharsumOptions& options) {
  if (!spec.coprime_orders()) {
    throw Error(ErrorCode::kNonCoprimeOrders, "gcd(n1, n2) = " + std::to_string(spec.d));
  }
  if (d.ambient_dim() != spec.dim()) throw Error(ErrorCode::kLengthMismatch, "subspace ambient dimension");

  std::vector<Elem> only1, only2;
  std::vector<std::pair<Elem, Elem>> both;
  for_each_in_span(d.rows, *spec.base, [&](std::span<const Elem>, std::span<const Elem> v) {
    auto [b1, b2] = unflatten(spec, v);
    if (!b1.is_zero() && b2.is_zero()) only1.push_back(b1);
    if (b1.is_zero() && !b2.is_zero()) only2.push_back(b2);
    if (!b1.is_zero() && !b2.is_zero()) both.emplace_back(b1, b2);
  });

  const std::uint64_t q = spec.q();
  const std::uint64_t e1 = spec.e1(), e2 = spec.e2();
  const std::uint64_t cof1 = (spec.Q1() - 1) / (q - 1);
  const std::uint64_t cof2 = (spec.Q2() - 1) / (q - 1);
  const double n = static_cast<double>(spec.n);
  const bool drop = options.drop_nontrivial_on_base;

  CharacterHandle chi1(spec.ext1->sup_ptr(), e1, 1, spec.gamma1);
  CharacterHandle chi2(spec.ext2->sup_ptr(), e2, 1, spec.gamma2);

  CharsumBreakdown out;
  // Keeping lambda with chi^lambda trivial on GF(q)^* is e/e' | lambda,
  // i.e. psi = chi^(e/e') and its powers.
  out.a = single_side_sum(chi1, only1, cof1, n / static_cast<double>(e1 * spec.n1), drop);
  out.a_subcode = single_side_sum(chi2, only2, cof2, n / static_cast<double>(e2 * spec.n2), drop);

  if (!both.empty()) {
    const auto g1 = gauss_sums(chi1);
    const auto g2 = gauss_sums(chi2);
    const std::uint64_t mod = e1 * e2;
    Complex acc{0.0, 0.0};
    for (std::uint64_t l1 = 0; l1 < e1; ++l1) {
      for (std::uint64_t l2 = 0; l2 < e2; ++l2) {
        // chi1^l1 chi2^l2 trivial on GF(q)^* as an integer congruence.
        const std::uint64_t lhs = (nt::mul_mod(l1 * e2 % mod, cof1 % mod, mod) +
                                   nt::mul_mod(l2 * e1 % mod, cof2 % mod, mod)) % mod;
        if (drop && lhs != 0) continue;
        CharacterHandle c1 = chi1.power(l1);
        CharacterHandle c2 = chi2.power(l2);
        Complex inner{0.0, 0.0};
        for (auto [b1, b2] : both) inner += std::conj(char_eval(c1, b1) * char_eval(c2, b2));
        acc += g1[l1] * g2[l2] * inner;
      }
    }
    out.b = acc / static_cast<double>(mod);
  }

  out.total = n + out.a + out.a_subcode + out.b;
  const double qj = std::pow(static_cast<double>(q), static_cast<double>(d.dim()));
  out.nj = out.total.real() / qj;
  out.imag_residual = std::abs(out.total.imag()) / qj;
  if (out.imag_residual > 1e-6) {
    throw Error(ErrorCode::kPrecisionFailure, "imaginary residue " + std::to_string(out.imag_residual));
  }
  return out;
}

double nj_closed_second_family(const CodeSpec& spec, const SubspaceBasis& d) {
  const std::uint64_t q = spec.q();
  const bool family = (spec.e1() == 1 && spec.e2() == q - 1) || (spec.e1() == q - 1 && spec.e2() == 1);
  if (!family || q < 2) throw Error(ErrorCode::kHypothesisViolated, "not an (e1, e2) = (1, q-1) or (q-1, 1) code");
  if (!meets_subcode_trivially(spec, d)) {
    throw Error(ErrorCode::kHypothesisViolated, "D must meet the subcode trivially");
  }
  const auto proj = project(spec, d, 2);
  const double qd = static_cast<double>(q);
  const double first_side = std::pow(qd, static_cast<double>(proj.kernel.dim()));
  const double j = static_cast<double>(d.dim());
  const double num = std::pow(qd, spec.dim()) - std::pow(qd, spec.k1()) + std::pow(qd, j) -
                     std::pow(qd, spec.k2()) * first_side;
  return num / (std::pow(qd, j) * (qd - 1));
}

}  // namespace rghw
