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

#include "rghw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "rghw/charsum.hpp"
#include "rghw/closed_forms.hpp"
#include "rghw/error.hpp"
#include "rghw/number_theory.hpp"
#include "rghw/subspaces.hpp"

namespace rghw {

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (notes.size() < 8) notes.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gf",      "codes",   "subspaces",   "rghw",
                                              "charsum", "gauss",   "closed_forms"};
  return names;
}

std::vector<CodeParams> default_grid() {
  return {{2, 2, 3, 1, 1}, {2, 3, 2, 1, 1}, {2, 2, 5, 1, 1},
          {2, 3, 4, 1, 1}, {3, 2, 3, 1, 2}, {3, 3, 2, 2, 1}};
}

namespace {

std::string describe(const CodeParams& p) {
  std::ostringstream os;
  os << "q=" << p.q << " (k1,k2)=(" << p.k1 << ',' << p.k2 << ") e=(" << p.e1 << ',' << p.e2 << ')';
  return os.str();
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields(std::uint32_t max_size) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t size = 2; size <= max_size; ++size) {
    if (auto pp = nt::prime_power(size)) out.push_back(*pp);
  }
  return out;
}

std::vector<CodeSpec> grid_specs(const VerifyConfig& cfg) {
  std::vector<CodeSpec> out;
  for (const auto& p : default_grid()) {
    if (p.k1 + p.k2 <= cfg.max_dim) out.push_back(build_code(p));
  }
  return out;
}

SuiteResult suite_gf(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "gf";
  for (auto [p, m] : small_fields(cfg.max_field)) {
    FieldPtr f = make_field(p, m);
    const std::uint32_t n = f->order();
    for (std::uint32_t i = 0; i < n; ++i) {
      r.expect(f->log_table()[f->exp_table()[i]] == i, "log(exp(i)) != i");
      for (std::uint32_t j = 0; j < n; ++j) {
        Elem prod = f->mul(Elem::from_log(i), Elem::from_log(j));
        r.expect(f->to_vector(prod) == f->exp_table()[(i + j) % n], "exp table not multiplicative");
      }
    }
    for (std::uint32_t s = 1; s < m; ++s) {
      if (m % s != 0) continue;
      FieldPtr sub = make_field(p, s);
      Embedding emb(sub, f);
      const std::uint32_t t = m / s;
      std::uint64_t zeros = 0;
      for (std::size_t a = 0; a < f->size(); ++a) {
        Elem x = FieldTable::from_slot(a);
        zeros += emb.trace(x).is_zero() ? 1 : 0;
        r.expect(emb.trace(emb.frobenius(x)) == emb.trace(x), "trace not Frobenius invariant");
        for (std::size_t b = 0; b < f->size(); ++b) {
          Elem y = FieldTable::from_slot(b);
          r.expect(emb.trace(f->add(x, y)) == sub->add(emb.trace(x), emb.trace(y)), "trace not additive");
        }
        for (std::size_t c = 0; c < sub->size(); ++c) {
          Elem cs = FieldTable::from_slot(c);
          r.expect(emb.trace(f->mul(emb.map(cs), x)) == sub->mul(cs, emb.trace(x)), "trace not linear");
        }
        if (!x.is_zero()) {
          Polynomial mp = minimal_polynomial(emb, x);
          r.expect(evaluate(mp, emb, x).is_zero(), "minimal polynomial does not vanish");
          r.expect(static_cast<std::uint32_t>(mp.degree()) == frobenius_orbit_size(emb, x),
                   "minimal polynomial degree != orbit size");
          r.expect(mp.leading() == sub->one(), "minimal polynomial not monic");
        }
      }
      std::uint64_t expected = 1;
      for (std::uint32_t i = 0; i + 1 < t; ++i) expected *= sub->size();
      r.expect(zeros == expected, "trace-zero count");
    }
  }
  return r;
}

SuiteResult suite_codes(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "codes";
  for (const auto& spec : grid_specs(cfg)) {
    const std::string tag = describe(spec.params);
    const Polynomial h = parity_check_polynomial(spec);
    r.expect(static_cast<std::uint32_t>(h.degree()) == spec.dim(), tag + ": deg h != k1 + k2");
    std::set<std::vector<Elem>> words;
    std::set<std::vector<Elem>> subcode;
    std::vector<std::vector<Elem>> all;
    for (std::size_t a = 0; a < spec.Q1(); ++a) {
      for (std::size_t b = 0; b < spec.Q2(); ++b) {
        Codeword w = codeword(spec, FieldTable::from_slot(a), FieldTable::from_slot(b));
        r.expect(satisfies_recurrence(h, w.coordinates, *spec.base), tag + ": recurrence violated");
        words.insert(w.coordinates);
        all.push_back(w.coordinates);
        if (a == 0) subcode.insert(w.coordinates);
      }
    }
    r.expect(words.size() == spec.Q1() * spec.Q2(), tag + ": encoding not injective");
    for (const auto& w : subcode) r.expect(words.count(w) == 1, tag + ": C' not inside C");
    for (const auto& w : all) {
      std::vector<Elem> shifted(w.begin() + 1, w.end());
      shifted.push_back(w.front());
      r.expect(words.count(shifted) == 1, tag + ": not closed under cyclic shift");
    }
  }
  return r;
}

SuiteResult suite_subspaces(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "subspaces";
  for (std::uint32_t q : {2u, 3u}) {
    FieldPtr f = make_field(q, 1);
    for (std::uint32_t k = 0; k <= cfg.max_dim + 1; ++k) {
      for (std::uint32_t j = 0; j <= k; ++j) {
        SubspaceEnumerator en(k, j, f);
        std::set<std::string> seen;
        std::uint64_t emitted = 0;
        en.for_each([&](const SubspaceBasis& h) {
          ++emitted;
          seen.insert(h.fingerprint(*f));
        });
        r.expect(BigInt(emitted) == gaussian_binomial(k, j, q) && seen.size() == emitted,
                 "enumeration count k=" + std::to_string(k) + " j=" + std::to_string(j));
      }
    }
  }
  std::mt19937_64 rng(cfg.seed);
  for (const auto& spec : grid_specs(cfg)) {
    const std::string tag = describe(spec.params);
    const FieldTable& f = *spec.base;
    r.expect(rank(spec.gram, f) == spec.dim(), tag + ": trace form degenerate");
    for (std::uint32_t s = 0; s < cfg.samples; ++s) {
      const auto j = static_cast<std::uint32_t>(rng() % (spec.dim() + 1));
      SubspaceBasis h = random_subspace(spec.dim(), j, f, rng, Ambient::kProduct);
      SubspaceBasis dual = dual_subspace(spec, h);
      r.expect(dual.dim() + h.dim() == spec.dim(), tag + ": dim H + dim H^perp");
      r.expect(dual_subspace(spec, dual) == h, tag + ": (H^perp)^perp != H");
    }
    for (std::uint32_t j = 0; j <= spec.dim(); ++j) {
      SubspaceEnumerator en(spec.dim(), j, spec.base, Ambient::kProduct);
      en.for_each([&](const SubspaceBasis& h) {
        const bool trivial = meets_subcode_trivially(spec, h);
        const bool injective = project(spec, h, 1).kernel.dim() == 0;
        const bool onto = projects_onto_second(spec, dual_subspace(spec, h));
        r.expect(trivial == injective && injective == onto, tag + ": characterizations disagree");
        const auto p2 = project(spec, h, 2);
        r.expect(p2.image.dim() + p2.kernel.dim() == h.dim(), tag + ": rank-nullity for pi_2");
      });
    }
  }
  return r;
}

SuiteResult suite_rghw(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "rghw";
  std::mt19937_64 rng(cfg.seed);
  for (const auto& spec : grid_specs(cfg)) {
    const std::string tag = describe(spec.params);
    std::vector<std::uint64_t> m;
    for (std::uint32_t j = 1; j <= spec.k1(); ++j) {
      RghwReport rep = compute_report(spec, j, {}, cfg.enumeration);
      r.expect(rep.agree, tag + ": routes disagree at j=" + std::to_string(j));
      m.push_back(*rep.bruteforce);
      r.expect(ghw_bruteforce(spec, j, cfg.enumeration).value <= *rep.bruteforce, tag + ": d_j > M_j");
    }
    r.expect(std::adjacent_find(m.begin(), m.end(), std::greater_equal<>()) == m.end(),
             tag + ": M_j not strictly increasing");
    for (std::uint32_t s = 0; s < cfg.samples; ++s) {
      const auto j = static_cast<std::uint32_t>(rng() % (spec.dim() + 1));
      SubspaceBasis d = random_subspace(spec.dim(), j, *spec.base, rng, Ambient::kProduct);
      try {
        const std::uint64_t nj = nj_of_subspace(spec, d);
        r.expect(nj == spec.n - support_size(spec, d), tag + ": n - N_j(D) != |Supp D|");
      } catch (const Error& e) {
        r.expect(false, tag + ": " + e.what());
      }
    }
  }
  return r;
}

SuiteResult suite_charsum(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "charsum";
  std::mt19937_64 rng(cfg.seed);
  for (const auto& spec : grid_specs(cfg)) {
    if (!spec.coprime_orders()) continue;
    const std::string tag = describe(spec.params);
    const FieldTable& f = *spec.base;
    const bool second_family = closed_form_for(spec, 1).has_value() && spec.q() > 2;
    std::uint32_t done = 0;
    while (done < cfg.samples) {
      const auto j = static_cast<std::uint32_t>(1 + rng() % spec.k1());
      SubspaceBasis d = random_subspace(spec.dim(), j, f, rng, Ambient::kProduct);
      if (!meets_subcode_trivially(spec, d)) continue;
      ++done;
      const double count = static_cast<double>(nj_of_subspace(spec, d));
      const auto br = nj_via_charsum(spec, d);
      const double res = std::abs(br.nj - count);
      r.max_residual = std::max(r.max_residual, res);
      r.expect(res < 1e-6, tag + ": character-sum N_j(D) residual " + std::to_string(res));
      r.expect(std::abs(br.a_subcode) < 1e-9, tag + ": subcode term nonzero although D meets C' trivially");
      if (second_family) {
        r.expect(std::abs(nj_closed_second_family(spec, d) - count) < 1e-6, tag + ": closed N_j(D)");
      }
    }
  }
  return r;
}

SuiteResult suite_gauss(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "gauss";
  for (auto [p, m] : small_fields(cfg.max_field)) {
    FieldPtr f = make_field(p, m);
    const std::uint64_t n = f->order();
    const double q = f->size();
    CharacterHandle base(f, n);
    for (std::uint64_t lambda = 0; lambda < n; ++lambda) {
      CharacterHandle chi = base.power(lambda);
      const Complex g1 = gauss_sum(chi, f->one());
      const Complex g0 = gauss_sum(chi, Elem::zero());
      if (chi.is_trivial()) {
        r.expect(g0 == Complex(q - 1, 0) || std::abs(g0 - Complex(q - 1, 0)) < 1e-9, "G(1;0) != q-1");
        continue;
      }
      r.expect(std::abs(g0) < 1e-9, "G(chi;0) != 0");
      const double mod_err = std::abs(std::abs(g1) - std::sqrt(q));
      r.max_residual = std::max(r.max_residual, mod_err);
      r.expect(mod_err < 1e-9, "|G(chi)| != sqrt(q)");
      for (std::uint32_t l = 0; l < n; ++l) {
        Elem beta = Elem::from_log(l);
        const double err = std::abs(gauss_sum(chi, beta) - std::conj(char_eval(chi, beta)) * g1);
        r.max_residual = std::max(r.max_residual, err);
        r.expect(err < 1e-9, "G(chi;beta) != conj(chi(beta)) G(chi)");
      }
    }
    for (std::uint64_t e = 1; e <= n; ++e) {
      if (n % e != 0) continue;
      for (std::uint32_t l = 0; l < n; ++l) {
        const Complex s = orthogonality_sum(f, Elem::from_log(l), e);
        const double expected = l % e == 0 ? static_cast<double>(e) : 0.0;
        r.expect(std::abs(s - Complex(expected, 0)) < 1e-9, "orthogonality sum");
      }
    }
  }
  return r;
}

SuiteResult suite_closed_forms(const VerifyConfig&) {
  SuiteResult r;
  r.name = "closed_forms";
  for (std::uint32_t k1 = 2; k1 <= 7; ++k1) {
    for (std::uint32_t k2 = 2; k2 <= 7; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      for (std::uint32_t j = 1; j <= k1; ++j) {
        auto c1 = corollary1_nj(k1, k2, j);
        r.expect(c1.nj > 0 && c1.mj > 0, "cor1 positivity");
        if (k2 % 2 == 1) r.expect(corollary2_nj(2, k1, k2, j).mj == c1.mj, "cor1 != cor2 at q = 2");
      }
    }
  }
  for (std::uint64_t q : {3u, 4u, 5u, 7u, 9u}) {
    for (std::uint32_t a = 3; a <= 7; a += 2) {
      for (std::uint32_t b = 3; b <= 7; b += 2) {
        if (std::gcd(a, b) != 1 || std::gcd<std::uint64_t>(q - 1, a) != 1 ||
            std::gcd<std::uint64_t>(q - 1, b) != 1) {
          continue;
        }
        for (std::uint32_t j = 1; j <= a; ++j) {
          r.expect(corollary2_nj(q, a, b, j).mj == corollary3_nj(q, a, b, j).mj, "cor2 != cor3");
        }
      }
    }
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyConfig& config) {
  std::vector<SuiteResult> out;
  auto wanted = [&](const std::string& name) {
    return config.suites.empty() ||
           std::find(config.suites.begin(), config.suites.end(), name) != config.suites.end();
  };
  for (const auto& s : config.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw Error(ErrorCode::kRangeError, "unknown suite " + s);
    }
  }
  if (wanted("gf")) out.push_back(suite_gf(config));
  if (wanted("codes")) out.push_back(suite_codes(config));
  if (wanted("subspaces")) out.push_back(suite_subspaces(config));
  if (wanted("rghw")) out.push_back(suite_rghw(config));
  if (wanted("charsum")) out.push_back(suite_charsum(config));
  if (wanted("gauss")) out.push_back(suite_gauss(config));
  if (wanted("closed_forms")) out.push_back(suite_closed_forms(config));
  return out;
}

}  // namespace rghw
