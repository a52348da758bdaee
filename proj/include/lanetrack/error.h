/*
 * Copyright 2026 The Lanetrack Authors
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

#ifndef LANETRACK_ERROR_H_
#define LANETRACK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lanetrack {

enum class ErrorCode {
  kInvalidArgument,
  kZeroAngularVelocity,
  kNonPositiveDt,
  kDegenerateRho,
  kCoincidentPoints,
  kNearSingularAlpha,
  kAboveHorizon,
  kPixelOutOfBounds,
  kEmptyPolyline,
  kDegeneratePolyline,
  kTooFewPoints,
  kDisjointRanges,
  kNonPositiveDuration,
  kPathExhausted,
  kInvalidScenario,
  kDegeneratePath,
  kEmptyLog,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the failure kind for callers that branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lanetrack

#endif  // LANETRACK_ERROR_H_
