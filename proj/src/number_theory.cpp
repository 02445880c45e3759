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

#include "rghw/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace rghw::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), s);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    __int128 tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace rghw::nt
