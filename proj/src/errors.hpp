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
#pragma once

#include <stdexcept>
#include <string>

namespace demj {

// Values match demj_status in the C header.
enum class ErrorCode : int {
  InvalidArgument = 1,
  NotPrime = 2,
  NotUnit = 3,
  KOutOfRange = 4,
  HOutOfRange = 5,
  RangeExceeded = 6,
  DimensionTooLarge = 7,
  NonIntegerRank = 8,
  BetaZero = 9,
  NoPrimitiveRoot = 10,
  CapExceeded = 11,
  ZeroPolynomial = 12,
  DegenerateParameters = 13,
  FactorizationIncomplete = 14,
  BoundViolated = 15,
  Io = 16,
  CallbackAborted = 17,
  Internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace demj
