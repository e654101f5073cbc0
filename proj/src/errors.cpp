/*
 * Copyright 2026 The demjanenko authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "errors.hpp"

namespace demj {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::HOutOfRange: return "HOutOfRange";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NonIntegerRank: return "NonIntegerRank";
    case ErrorCode::BetaZero: return "BetaZero";
    case ErrorCode::NoPrimitiveRoot: return "NoPrimitiveRoot";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::Io: return "Io";
    case ErrorCode::CallbackAborted: return "CallbackAborted";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace demj
