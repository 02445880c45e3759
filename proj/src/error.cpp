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

#include "rghw/error.hpp"

namespace rghw {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kNotASubfield: return "NotASubfield";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kZeroArgument: return "ZeroArgument";
    case ErrorCode::kConjugateNonzeros: return "ConjugateNonzeros";
    case ErrorCode::kDegenerateOrder: return "DegenerateOrder";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kRangeError: return "RangeError";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNonCoprimeOrders: return "NonCoprimeOrders";
    case ErrorCode::kPrecisionFailure: return "PrecisionFailure";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace rghw
