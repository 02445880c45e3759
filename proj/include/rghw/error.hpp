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

#ifndef RGHW_ERROR_HPP_
#define RGHW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rghw {

enum class ErrorCode {
  kNonPrime,
  kSizeCapExceeded,
  kNotASubfield,
  kFieldMismatch,
  kZeroElement,
  kZeroArgument,
  kConjugateNonzeros,
  kDegenerateOrder,
  kBadIndex,
  kLengthMismatch,
  kRangeError,
  kCapExceeded,
  kNonCoprimeOrders,
  kPrecisionFailure,
  kHypothesisViolated,
  kInternal,
};

// Stable machine-readable name, used in CLI output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rghw

#endif  // RGHW_ERROR_HPP_
