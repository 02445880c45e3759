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

#ifndef RGHW_NUMBER_THEORY_HPP_
#define RGHW_NUMBER_THEORY_HPP_

#include <cstdint>
#include <optional>
#include <utility>

namespace rghw::nt {

bool is_prime(std::uint64_t n);

// (p, s) with q = p^s, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

// Exact power; nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

// Inverse of a modulo m; requires gcd(a, m) = 1 and m > 0.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace rghw::nt

#endif  // RGHW_NUMBER_THEORY_HPP_
