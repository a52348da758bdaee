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

// Path-tracking metrics for a logged run against its reference path.
//
// Definitions (version 1):
//   completion_time             final log timestamp
//   avg_linear_speed            distance driven / completion_time
//   avg_angular_speed           mean |omega_applied|
//   mae_lateral                 mean |cross-track error|
//   mae_orientation             mean |wrap(phi - path tangent at foot point)|
//   rmse_linear_speed           sqrt(mean (v_applied - v_t)^2) over the window
//   linear_speed_deviation_pct  100 * max |v_applied - v_t| / v_t over the
//                               window (or the mean, see SpeedDeviationMode)
//   accumulated_orientation     sum |wrap(phi_k+1 - phi_k)|
//
// The speed window starts at `window_start` seconds to skip the launch from
// rest. If the log ends before that, the whole log is used and the report
// says so through `speed_window_start`.

#ifndef LANETRACK_METRICS_H_
#define LANETRACK_METRICS_H_

#include <span>
#include <string_view>

#include "lanetrack/geometry.h"
#include "lanetrack/simulator.h"

namespace lanetrack {

inline constexpr int kMetricsDefinitionVersion = 1;

enum class SpeedDeviationMode { kMax, kMeanRelative };

std::string_view SpeedDeviationModeName(SpeedDeviationMode mode);

struct MetricsOptions {
  double window_start = 10.0;
  SpeedDeviationMode deviation = SpeedDeviationMode::kMax;
};

struct MetricsReport {
  double completion_time = 0.0;
  double avg_linear_speed = 0.0;
  double avg_angular_speed = 0.0;
  double mae_lateral = 0.0;
  double mae_orientation = 0.0;
  double rmse_linear_speed = 0.0;
  double linear_speed_deviation_pct = 0.0;
  double accumulated_orientation = 0.0;

  double speed_window_start = 0.0;
  SpeedDeviationMode deviation_mode = SpeedDeviationMode::kMax;
  int definition_version = kMetricsDefinitionVersion;
};

// Signed distance to the nearest segment, positive to the left of the path.
// Throws kDegeneratePath.
double CrossTrack(Point2 point, std::span<const Point2> path);

// Throws kEmptyLog for an empty log and kDegeneratePath for a bad path.
MetricsReport ComputeMetrics(std::span<const StepRecord> records,
                             std::span<const Point2> path, double v_t,
                             const MetricsOptions& options = {});

}  // namespace lanetrack

#endif  // LANETRACK_METRICS_H_
