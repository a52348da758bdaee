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

#include "lanetrack/simulator.h"

#include <cmath>
#include <string>
#include <utility>

#include "lanetrack/error.h"

namespace lanetrack {
namespace {

// Arc-length window for the per-step progress projection.
constexpr double kProgressWindow = 5.0;
constexpr double kLapProximity = 1.0;

bool Finite(const Pose& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.phi);
}

}  // namespace

std::string_view SimModeName(SimMode mode) {
  return mode == SimMode::kPresetPath ? "preset_path" : "vision";
}

std::string_view RecordModeName(RecordMode mode) {
  switch (mode) {
    case RecordMode::kPreset: return "preset";
    case RecordMode::kBothLanes: return "both_lanes";
    case RecordMode::kLeftOnly: return "left_only";
    case RecordMode::kRightOnly: return "right_only";
    case RecordMode::kNone: return "none";
  }
  return "none";
}

std::string_view TerminationName(Termination reason) {
  switch (reason) {
    case Termination::kRunning: return "running";
    case Termination::kLapComplete: return "lap_complete";
    case Termination::kPathExhausted: return "path_exhausted";
    case Termination::kTimeout: return "timeout";
  }
  return "running";
}

SaturationLimits Scenario::EffectiveLimits() const {
  SaturationLimits out = limits;
  if (v_max_auto) out.v_max = SaturationLimits::ForTargetSpeed(v_t).v_max;
  return out;
}

void Scenario::Validate() const {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidScenario, what);
  };
  if (!(dt > 0.0)) fail("dt must be positive");
  if (!(duration_max > 0.0)) fail("duration_max must be positive");
  if (!(v_t > 0.0)) fail("v_t must be positive");
  if (!Finite(initial_pose)) fail("initial_pose must be finite");
  if (!(lookahead_lead > 0.0) || !(lookahead_spacing > 0.0)) {
    fail("look-ahead lead and spacing must be positive");
  }
  if (!(delta_s > 0.0)) fail("delta_s must be positive");
  if (min_lane_points < 2) fail("min_lane_points must be at least 2");
  if (!(target_lead >= 0.0) || !std::isfinite(target_lead)) {
    fail("target_lead must be non-negative");
  }
  try {
    gains.Validate();
    EffectiveLimits().Validate();
  } catch (const Error& e) {
    fail(e.what());
  }
  sensor.Validate(dt);
}

TargetState SampleTarget(const TrackGeometry& track, double s, double v_t,
                         double spacing) {
  const PathSample a = track.At(s);
  const PathSample b = track.At(s + spacing);
  const PathSample c = track.At(s + 2.0 * spacing);
  TargetState target;
  target.x = a.point.x;
  target.y = a.point.y;
  target.phi = a.heading;
  target.v = v_t;
  target.phi_dot = TargetHeadingRate(a.point, b.point, c.point, spacing / v_t);
  return target;
}

TargetAdvance AdvanceTarget(const TrackGeometry& track, double s, double v_t,
                            double dt, double spacing) {
  const double next = s + v_t * dt;
  if (!track.closed() && next > track.length()) {
    throw Error(ErrorCode::kPathExhausted, "target reached the end of the track");
  }
  TargetAdvance out;
  out.s = track.WrapS(next);
  out.target = SampleTarget(track, out.s, v_t, spacing);
  return out;
}

namespace {

std::optional<CubicPoly> FitLane(const Polyline& points, const Scenario& scenario) {
  return FitLanePoints(points, scenario.sensor.roi, scenario.delta_s,
                       scenario.min_lane_points);
}

RecordMode ToRecordMode(CenterlineMode mode) {
  switch (mode) {
    case CenterlineMode::kBothLanes: return RecordMode::kBothLanes;
    case CenterlineMode::kLeftOnly: return RecordMode::kLeftOnly;
    case CenterlineMode::kRightOnly: return RecordMode::kRightOnly;
    case CenterlineMode::kNone: return RecordMode::kNone;
  }
  return RecordMode::kNone;
}

}  // namespace

VisionResult TargetFromObservation(const LaneObservation& obs, const Pose& pose,
                                   const Scenario& scenario) {
  VisionResult out;
  CenterlineResult center;
  try {
    center = Centerline(FitLane(obs.left, scenario), FitLane(obs.right, scenario),
                        scenario.track.lane_width);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDisjointRanges) throw;
    return out;
  }
  out.mode = ToRecordMode(center.mode);
  if (!center.centerline) return out;

  const LookaheadPoints la = ExtractLookahead(
      *center.centerline, scenario.lookahead_lead, scenario.lookahead_spacing);
  const Point2 a = ToGlobalFrame(pose, la.points[0]);
  const Point2 b = ToGlobalFrame(pose, la.points[1]);
  const Point2 c = ToGlobalFrame(pose, la.points[2]);
  TargetState target;
  target.x = a.x;
  target.y = a.y;
  target.phi = std::atan2(b.y - a.y, b.x - a.x);
  target.v = scenario.v_t;
  target.phi_dot = TargetHeadingRate(a, b, c, scenario.sensor.frame_period);
  out.target = target;
  out.extrapolated = la.extrapolated;
  return out;
}

Simulator::Simulator(Scenario scenario)
    : scenario_((scenario.Validate(), std::move(scenario))),
      track_(scenario_.track),
      limits_(scenario_.EffectiveLimits()) {
  max_steps_ = std::max<std::int64_t>(
      1, std::llround(scenario_.duration_max / scenario_.dt));
  frame_steps_ = std::max<std::int64_t>(
      1, std::llround(scenario_.sensor.frame_period / scenario_.dt));

  state_.pose = scenario_.initial_pose;
  state_.pose.phi = WrapAngle(state_.pose.phi);
  state_.rng.seed(scenario_.rng_seed);
  state_.robot_s = track_.Project(state_.pose.position());
  state_.start_point = track_.At(state_.robot_s).point;
  if (scenario_.mode == SimMode::kPresetPath) {
    const double s = state_.robot_s + scenario_.target_lead;
    if (!track_.closed() && s > track_.length()) {
      throw Error(ErrorCode::kInvalidScenario,
                  "initial target lies beyond the end of the track");
    }
    state_.target_s = track_.WrapS(s);
    state_.target = SampleTarget(track_, state_.target_s, scenario_.v_t,
                                 scenario_.lookahead_spacing);
    state_.held_mode = RecordMode::kPreset;
  }
}

void Simulator::RefreshVisionTarget() {
  const LaneObservation obs = SenseLanes(track_, state_.pose, scenario_.sensor,
                                         state_.robot_s, state_.rng);
  const VisionResult result = TargetFromObservation(obs, state_.pose, scenario_);
  state_.held_mode = result.mode;
  state_.held_extrapolated = result.extrapolated;
  if (result.target) state_.target = *result.target;
}

StepRecord Simulator::Step() {
  if (finished()) {
    throw Error(ErrorCode::kInvalidArgument, "simulation already finished");
  }
  const bool vision = scenario_.mode == SimMode::kVision;
  if (vision && state_.step % frame_steps_ == 0) RefreshVisionTarget();

  StepRecord rec;
  rec.step = state_.step;
  rec.t = static_cast<double>(state_.step) * scenario_.dt;
  rec.pose = state_.pose;
  rec.target = state_.target;
  rec.mode = state_.held_mode;
  rec.error = ComputePolarError(state_.pose, state_.target);
  if (vision && state_.held_extrapolated) rec.flags |= kFlagExtrapolated;

  if (vision && state_.held_mode == RecordMode::kNone) {
    // No lane in view: creep forward at the minimum speed.
    rec.cmd = {limits_.v_min, 0.0};
    rec.applied = rec.cmd;
    rec.flags |= kFlagFallback;
  } else {
    rec.cmd.v = ProposedLinear(rec.error, state_.target, scenario_.gains);
    AngularOptions options;
    options.form = scenario_.angular_law;
    if (!(rec.error.rho > options.rho_epsilon)) {
      rec.cmd.omega = state_.prev_cmd.omega;
      rec.flags |= kFlagRhoHold;
    } else if (scenario_.controller == ControllerKind::kProposed) {
      const AngularCommand w =
          ProposedAngular(rec.error, state_.target, scenario_.gains, options);
      rec.cmd.omega = w.omega;
      if (w.near_singular) rec.flags |= kFlagSingularGuard;
    } else {
      const ComparativeCommand c =
          ComparativeCmd(rec.error, state_.target, scenario_.gains, options);
      rec.cmd.omega = c.twist.omega;
      if (c.near_singular) rec.flags |= kFlagSingularGuard;
    }
    rec.applied = rec.cmd;
    if (scenario_.saturation_enabled) {
      const SaturationResult sat =
          Saturate(rec.cmd, state_.prev_applied, limits_, scenario_.dt);
      rec.applied = sat.twist;
      if (sat.magnitude_clamped) rec.flags |= kFlagMagnitudeClamp;
      if (sat.slew_limited) rec.flags |= kFlagSlewLimit;
    }
  }
  rec.lyapunov = ComputeLyapunov(rec.error, rec.applied, state_.target,
                                 scenario_.gains, scenario_.controller);

  state_.pose = Integrate(state_.pose, rec.applied, scenario_.dt,
                          scenario_.integrator);
  state_.prev_applied = rec.applied;
  state_.prev_cmd = rec.cmd;
  ++state_.step;

  if (!vision) {
    try {
      const TargetAdvance next =
          AdvanceTarget(track_, state_.target_s, scenario_.v_t, scenario_.dt,
                        scenario_.lookahead_spacing);
      state_.target_s = next.s;
      state_.target = next.target;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPathExhausted) throw;
      state_.termination = Termination::kPathExhausted;
    }
  }
  UpdateProgress();
  if (!finished() && state_.step >= max_steps_) {
    state_.termination = Termination::kTimeout;
  }
  return rec;
}

void Simulator::UpdateProgress() {
  const double s =
      track_.Project(state_.pose.position(), state_.robot_s, kProgressWindow);
  double ds = s - state_.robot_s;
  if (track_.closed()) ds = std::remainder(ds, track_.length());
  state_.progress += ds;
  state_.robot_s = s;
  if (finished()) return;
  if (track_.closed()) {
    if (state_.progress >= track_.length() &&
        Distance(state_.pose.position(), state_.start_point) <= kLapProximity) {
      state_.termination = Termination::kLapComplete;
    }
  } else if (scenario_.mode == SimMode::kVision &&
             state_.robot_s + scenario_.lookahead_lead +
                     2.0 * scenario_.lookahead_spacing >
                 track_.length()) {
    state_.termination = Termination::kPathExhausted;
  }
}

SimLog Run(const Scenario& scenario) {
  Simulator sim(scenario);
  SimLog log;
  log.dt = scenario.dt;
  while (!sim.finished()) log.records.push_back(sim.Step());
  log.termination = sim.state().termination;
  return log;
}

}  // namespace lanetrack
