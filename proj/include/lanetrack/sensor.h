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

// Synthetic lane-point sensor standing in for a learned lane detector. It
// reports painted boundary points inside the region of interest, in the
// vehicle frame, with optional Gaussian noise and clutter near zebra zones.

#ifndef LANETRACK_SENSOR_H_
#define LANETRACK_SENSOR_H_

#include <random>

#include "lanetrack/lanefit.h"
#include "lanetrack/model.h"
#include "lanetrack/track.h"

namespace lanetrack {

struct SensorConfig {
  double point_noise_sigma = 0.0;  // metres, isotropic
  double clutter_rate = 0.0;       // points per frame while a zebra zone is visible
  double frame_period = 0.1;       // seconds
  double sample_spacing = 0.25;    // along-track spacing of boundary points
  Roi roi;

  void Validate(double dt) const;
};

struct LaneObservation {
  Polyline left;
  Polyline right;
};

using SensorRng = std::mt19937_64;

// Boundary points are taken on a fixed arc-length grid (multiples of
// `sample_spacing`) around `s_hint`, the robot's projection onto the track,
// so a stationary robot always sees the same points. Identical inputs and
// RNG state give identical output.
LaneObservation SenseLanes(const TrackGeometry& track, const Pose& pose,
                           const SensorConfig& config, double s_hint,
                           SensorRng& rng);

// Global -> vehicle frame.
Point2 ToVehicleFrame(const Pose& pose, Point2 global);
// Vehicle -> global frame.
Point2 ToGlobalFrame(const Pose& pose, Point2 local);

}  // namespace lanetrack

#endif  // LANETRACK_SENSOR_H_
