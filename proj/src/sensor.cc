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

#include "lanetrack/sensor.h"

#include <cmath>

#include "lanetrack/error.h"

namespace lanetrack {
namespace {

// Arc-length window scanned behind and ahead of the robot. The forward
// margin covers the region of interest on the tightest fixture curves.
constexpr double kBehind = 5.0;
constexpr double kAheadMargin = 15.0;

// Uniform draws are built from raw engine output so the sequence does not
// depend on the standard library's distribution implementations.
double Uniform01(SensorRng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller, consuming exactly two draws.
double Gaussian(SensorRng& rng) {
  const double u1 = 1.0 - Uniform01(rng);  // (0, 1]
  const double u2 = Uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace

void SensorConfig::Validate(double dt) const {
  if (!(point_noise_sigma >= 0.0) || !(clutter_rate >= 0.0)) {
    throw Error(ErrorCode::kInvalidScenario,
                "sensor noise and clutter rate must be non-negative");
  }
  if (!(frame_period >= dt)) {
    throw Error(ErrorCode::kInvalidScenario,
                "sensor frame period must be at least the control step");
  }
  if (!(sample_spacing > 0.0)) {
    throw Error(ErrorCode::kInvalidScenario, "sample spacing must be positive");
  }
  if (!(roi.x_min < roi.x_max) || !(roi.y_min < roi.y_max)) {
    throw Error(ErrorCode::kInvalidScenario, "sensor region of interest is empty");
  }
}

Point2 ToVehicleFrame(const Pose& pose, Point2 global) {
  const double c = std::cos(pose.phi);
  const double s = std::sin(pose.phi);
  const Point2 d = global - pose.position();
  return {c * d.x + s * d.y, -s * d.x + c * d.y};
}

Point2 ToGlobalFrame(const Pose& pose, Point2 local) {
  const double c = std::cos(pose.phi);
  const double s = std::sin(pose.phi);
  return {pose.x + c * local.x - s * local.y, pose.y + s * local.x + c * local.y};
}

LaneObservation SenseLanes(const TrackGeometry& track, const Pose& pose,
                           const SensorConfig& config, double s_hint,
                           SensorRng& rng) {
  LaneObservation obs;
  const double spacing = config.sample_spacing;
  const double s_lo = s_hint - kBehind;
  const double s_hi = s_hint + config.roi.x_max + kAheadMargin;
  const auto k_lo = static_cast<long long>(std::ceil(s_lo / spacing));
  const auto k_hi = static_cast<long long>(std::floor(s_hi / spacing));
  bool zebra_visible = false;

  for (long long k = k_lo; k <= k_hi; ++k) {
    const double s = static_cast<double>(k) * spacing;
    if (!track.closed() && (s < 0.0 || s > track.length())) continue;
    const PathSample sample = track.At(s);
    const TrackSegment& seg = track.track().segments[sample.segment];
    const auto observe = [&](const Boundary& boundary, Point2 global,
                             Polyline& out) {
      if (!boundary.Painted(sample.local_s)) return;
      const Point2 local = ToVehicleFrame(pose, global);
      if (!config.roi.Contains(local)) return;
      if (boundary.style == BoundaryStyle::kZebraClutter) zebra_visible = true;
      out.push_back(local);
    };
    observe(seg.left, track.LeftBoundary(sample), obs.left);
    observe(seg.right, track.RightBoundary(sample), obs.right);
  }

  if (config.point_noise_sigma > 0.0) {
    for (Polyline* lane : {&obs.left, &obs.right}) {
      for (Point2& p : *lane) {
        p.x += config.point_noise_sigma * Gaussian(rng);
        p.y += config.point_noise_sigma * Gaussian(rng);
      }
    }
  }

  if (zebra_visible && config.clutter_rate > 0.0) {
    auto count = static_cast<long long>(std::floor(config.clutter_rate));
    if (Uniform01(rng) < config.clutter_rate - static_cast<double>(count)) {
      ++count;
    }
    const Roi& roi = config.roi;
    for (long long i = 0; i < count; ++i) {
      const Point2 p{roi.x_min + (roi.x_max - roi.x_min) * Uniform01(rng),
                     roi.y_min + (roi.y_max - roi.y_min) * Uniform01(rng)};
      Polyline& lane = Uniform01(rng) < 0.5 ? obs.left : obs.right;
      const auto at = static_cast<size_t>(Uniform01(rng) * (lane.size() + 1));
      lane.insert(lane.begin() + std::min(at, lane.size()), p);
    }
  }
  return obs;
}

}  // namespace lanetrack
