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

// Deterministic closed-loop engine. Each control period:
//
//   preset mode: sample the moving target from the reference path
//   vision mode: sense -> resample -> fit -> centerline -> look-ahead target
//                (refreshed once per sensor frame, held in between)
//   then polar error -> control law -> saturation -> integration -> log
//
// A run is a pure function of its Scenario: one seeded RNG stream, integer
// step counting and no wall-clock reads.

#ifndef LANETRACK_SIMULATOR_H_
#define LANETRACK_SIMULATOR_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lanetrack/controllers.h"
#include "lanetrack/lanefit.h"
#include "lanetrack/model.h"
#include "lanetrack/sensor.h"
#include "lanetrack/track.h"

namespace lanetrack {

enum class SimMode { kPresetPath, kVision };

struct Scenario {
  Track track;
  SimMode mode = SimMode::kPresetPath;
  double v_t = 1.5;
  ControllerGains gains;
  SaturationLimits limits;
  bool v_max_auto = true;  // v_max = v_t + 0.25 when set
  bool saturation_enabled = true;
  double dt = 0.01;
  double duration_max = 300.0;
  Pose initial_pose;
  ControllerKind controller = ControllerKind::kProposed;
  SensorConfig sensor;
  std::uint64_t rng_seed = 1;

  AngularLawForm angular_law = AngularLawForm::kConsistent;
  Integrator integrator = Integrator::kEuler;
  double lookahead_lead = 2.0;
  double lookahead_spacing = 0.5;
  double delta_s = kDefaultResampleSpacing;
  int min_lane_points = 4;
  // Preset mode: initial target arc length ahead of the robot's projection.
  double target_lead = 0.0;

  // Limits with the v_max profile resolved.
  SaturationLimits EffectiveLimits() const;
  // Throws kInvalidScenario.
  void Validate() const;
};

// Record flags.
inline constexpr std::uint32_t kFlagMagnitudeClamp = 1u << 0;
inline constexpr std::uint32_t kFlagSlewLimit = 1u << 1;
inline constexpr std::uint32_t kFlagSingularGuard = 1u << 2;
inline constexpr std::uint32_t kFlagRhoHold = 1u << 3;
inline constexpr std::uint32_t kFlagFallback = 1u << 4;
inline constexpr std::uint32_t kFlagExtrapolated = 1u << 5;

// Centerline source of the record; kPreset for preset-path runs.
enum class RecordMode { kPreset, kBothLanes, kLeftOnly, kRightOnly, kNone };

std::string_view RecordModeName(RecordMode mode);

struct StepRecord {
  std::int64_t step = 0;
  double t = 0.0;
  Pose pose;
  Twist cmd;
  Twist applied;
  TargetState target;
  PolarError error;
  LyapunovReport lyapunov;
  std::uint32_t flags = 0;
  RecordMode mode = RecordMode::kPreset;
};

enum class Termination { kRunning, kLapComplete, kPathExhausted, kTimeout };

std::string_view TerminationName(Termination reason);

struct SimLog {
  std::vector<StepRecord> records;
  Termination termination = Termination::kRunning;
  double dt = 0.0;

  bool completed() const {
    return termination == Termination::kLapComplete ||
           termination == Termination::kPathExhausted;
  }
};

struct SimState {
  std::int64_t step = 0;
  Pose pose;
  Twist prev_applied;
  Twist prev_cmd;
  double target_s = 0.0;       // preset mode
  TargetState target;          // current (preset) or held (vision) target
  RecordMode held_mode = RecordMode::kNone;
  bool held_extrapolated = false;
  double robot_s = 0.0;
  double progress = 0.0;
  Point2 start_point;
  Termination termination = Termination::kRunning;
  SensorRng rng;
};

// Samples the reference path at s' = s + v_t * dt. The heading rate comes
// from the three-point estimate over look-ahead spacing `spacing`, with the
// interval between points taken as the time the target needs to cover it.
// Throws kPathExhausted when an open track ends before s'.
struct TargetAdvance {
  TargetState target;
  double s = 0.0;
};
TargetAdvance AdvanceTarget(const TrackGeometry& track, double s, double v_t,
                            double dt, double spacing = 0.5);

// Target state at arc length s without advancing.
TargetState SampleTarget(const TrackGeometry& track, double s, double v_t,
                         double spacing = 0.5);

struct VisionResult {
  RecordMode mode = RecordMode::kNone;
  std::optional<TargetState> target;  // global frame
  bool extrapolated = false;
};

// Fits both observed lanes, builds the centerline and converts the three
// look-ahead points into a global target.
VisionResult TargetFromObservation(const LaneObservation& obs, const Pose& pose,
                                   const Scenario& scenario);

class Simulator {
 public:
  // Throws kInvalidScenario.
  explicit Simulator(Scenario scenario);

  // Runs one control period and returns its record. The state reflects the
  // pose after integration.
  StepRecord Step();

  bool finished() const { return state_.termination != Termination::kRunning; }
  const SimState& state() const { return state_; }
  const Scenario& scenario() const { return scenario_; }
  const TrackGeometry& track() const { return track_; }
  std::int64_t max_steps() const { return max_steps_; }

 private:
  void RefreshVisionTarget();
  void UpdateProgress();

  Scenario scenario_;
  TrackGeometry track_;
  SaturationLimits limits_;
  std::int64_t max_steps_ = 0;
  std::int64_t frame_steps_ = 1;
  SimState state_;
};

// Steps until lap completion, path exhaustion or duration_max.
SimLog Run(const Scenario& scenario);

std::string_view SimModeName(SimMode mode);

}  // namespace lanetrack

#endif  // LANETRACK_SIMULATOR_H_
