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

#include "lanetrack/error.h"

namespace lanetrack {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kZeroAngularVelocity: return "ZeroAngularVelocity";
    case ErrorCode::kNonPositiveDt: return "NonPositiveDt";
    case ErrorCode::kDegenerateRho: return "DegenerateRho";
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kNearSingularAlpha: return "NearSingularAlpha";
    case ErrorCode::kAboveHorizon: return "AboveHorizon";
    case ErrorCode::kPixelOutOfBounds: return "PixelOutOfBounds";
    case ErrorCode::kEmptyPolyline: return "EmptyPolyline";
    case ErrorCode::kDegeneratePolyline: return "DegeneratePolyline";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kDisjointRanges: return "DisjointRanges";
    case ErrorCode::kNonPositiveDuration: return "NonPositiveDuration";
    case ErrorCode::kPathExhausted: return "PathExhausted";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kDegeneratePath: return "DegeneratePath";
    case ErrorCode::kEmptyLog: return "EmptyLog";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace lanetrack
