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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "lanetrack/error.h"
#include "lanetrack/simulator.h"

namespace lanetrack {
namespace {

Scenario Straight(SimMode mode = SimMode::kPresetPath) {
  Scenario s;
  s.track = MakeFixtureTrack("straight");
  s.mode = mode;
  return s;
}

TEST(AdvanceTarget, StraightOneSecond) {
  const TrackGeometry g(MakeFixtureTrack("straight"));
  const TargetAdvance next = AdvanceTarget(g, 0.0, 1.5, 1.0);
  EXPECT_DOUBLE_EQ(next.s, 1.5);
  EXPECT_NEAR(next.target.x, 1.5, 1e-12);
  EXPECT_NEAR(next.target.y, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(next.target.phi, 0.0);
  EXPECT_DOUBLE_EQ(next.target.phi_dot, 0.0);
}

TEST(AdvanceTarget, CircleHeadingRate) {
  const TrackGeometry g(MakeFixtureTrack("circle"));
  for (double s : {0.0, 20.0, 70.0}) {
    EXPECT_NEAR(AdvanceTarget(g, s, 1.5, 0.01).target.phi_dot, 1.5 / 15.0, 1e-3);
  }
}

TEST(AdvanceTarget, WrapsAndExhausts) {
  const TrackGeometry oval(MakeFixtureTrack("oval"));
  const TargetAdvance w = AdvanceTarget(oval, oval.length() - 0.005, 1.5, 0.01);
  EXPECT_NEAR(w.s, 0.01, 1e-9);
  const TrackGeometry line(MakeFixtureTrack("straight"));
  try {
    AdvanceTarget(line, 49.99, 1.5, 0.01);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPathExhausted);
  }
}

TEST(Step, EquilibriumOnStraight) {
  Simulator sim(Straight());
  sim.Step();
  EXPECT_LT(std::abs(sim.state().pose.y), 1e-6);
  EXPECT_LT(std::abs(sim.state().pose.phi), 1e-6);
}

// One preset step reproduced by calling the module operations in order.
TEST(Step, MatchesManualComposition) {
  Scenario s;
  s.track = MakeFixtureTrack("oval");
  s.initial_pose = {0.0, 0.4, 0.1};
  s.target_lead = 1.0;
  Simulator sim(s);
  // Run a few steps so that previous commands are non-trivial.
  for (int i = 0; i < 5; ++i) sim.Step();
  const SimState before = sim.state();

  const PolarError e = ComputePolarError(before.pose, before.target);
  Twist cmd{ProposedLinear(e, before.target, s.gains),
            ProposedAngular(e, before.target, s.gains).omega};
  const Twist applied =
      Saturate(cmd, before.prev_applied, s.EffectiveLimits(), s.dt).twist;
  const Pose pose = Integrate(before.pose, applied, s.dt);
  const TargetAdvance next = AdvanceTarget(sim.track(), before.target_s, s.v_t, s.dt);

  const StepRecord rec = sim.Step();
  EXPECT_EQ(rec.cmd, cmd);
  EXPECT_EQ(rec.applied, applied);
  EXPECT_EQ(sim.state().pose, pose);
  EXPECT_EQ(sim.state().target.x, next.target.x);
  EXPECT_EQ(sim.state().target.phi_dot, next.target.phi_dot);
}

TEST(Step, VisionFallbackWhenBlind) {
  Scenario s;
  s.track = MakeFixtureTrack("blind_straight");
  s.mode = SimMode::kVision;
  const SimLog log = lanetrack::Run(s);
  int fallback = 0;
  for (const StepRecord& r : log.records) {
    if (r.mode != RecordMode::kNone) continue;
    ++fallback;
    EXPECT_EQ(r.applied.v, 0.6);
    EXPECT_EQ(r.applied.omega, 0.0);
    EXPECT_TRUE(r.flags & kFlagFallback);
  }
  EXPECT_GT(fallback, 100);
  EXPECT_EQ(log.termination, Termination::kPathExhausted);
}

TEST(Step, RhoHoldAtTarget) {
  Scenario s = Straight();
  Simulator sim(s);
  const StepRecord r = sim.Step();
  EXPECT_TRUE(r.flags & kFlagRhoHold);
  EXPECT_EQ(r.cmd.omega, 0.0);
}

TEST(Run, OneStepTimesOut) {
  Scenario s = Straight();
  s.duration_max = s.dt;
  const SimLog log = lanetrack::Run(s);
  EXPECT_EQ(log.records.size(), 1u);
  EXPECT_EQ(log.termination, Termination::kTimeout);
}

TEST(Run, InvalidScenario) {
  Scenario s = Straight();
  s.dt = 0.0;
  try {
    lanetrack::Run(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidScenario);
  }
  s = Straight();
  s.v_t = -1.0;
  EXPECT_THROW(lanetrack::Run(s), Error);
}

TEST(Run, OvalCompletesLap) {
  Scenario s;
  s.track = MakeFixtureTrack("oval");
  const SimLog log = lanetrack::Run(s);
  EXPECT_EQ(log.termination, Termination::kLapComplete);
  EXPECT_LT(log.records.back().t, s.duration_max);
  for (size_t k = 0; k < log.records.size(); ++k) {
    ASSERT_EQ(log.records[k].t, static_cast<double>(k) * s.dt);
  }
}

// After the first 20 s the target stays within half a metre on tracks whose
// radius is at least 10 m.
TEST(Run, RhoTrappedAfterTransient) {
  for (const char* name : {"oval", "circle"}) {
    Scenario s;
    s.track = MakeFixtureTrack(name);
    double worst = 0.0;
    for (const StepRecord& r : lanetrack::Run(s).records) {
      if (r.t >= 20.0) worst = std::max(worst, r.error.rho);
    }
    EXPECT_LT(worst, 0.5) << name;
  }
}

TEST(Run, VisionMatchesPresetOnCleanStraight) {
  Scenario preset = Straight();
  preset.initial_pose = {0.0, 0.3, 0.0};
  // Same look-ahead in both modes so the targets coincide.
  preset.target_lead = preset.lookahead_lead;
  Scenario vision = preset;
  vision.mode = SimMode::kVision;
  const SimLog a = lanetrack::Run(preset);
  const SimLog b = lanetrack::Run(vision);
  const size_t n = std::min(a.records.size(), b.records.size());
  ASSERT_GT(n, 1000u);
  for (size_t i = 0; i < n; ++i) {
    ASSERT_LT(std::abs(a.records[i].pose.y - b.records[i].pose.y), 0.01) << i;
  }
}

TEST(Run, Deterministic) {
  Scenario s;
  s.track = MakeFixtureTrack("figure_course");
  s.mode = SimMode::kVision;
  s.sensor.point_noise_sigma = 0.05;
  s.sensor.clutter_rate = 1.0;
  s.duration_max = 20.0;
  const SimLog a = lanetrack::Run(s);
  const SimLog b = lanetrack::Run(s);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    ASSERT_EQ(a.records[i].pose, b.records[i].pose);
    ASSERT_EQ(a.records[i].applied, b.records[i].applied);
  }
}

TEST(Run, AppliedCommandsRespectBounds) {
  for (double vt : {1.5, 2.0}) {
    Scenario s;
    s.track = MakeFixtureTrack("figure_course");
    s.mode = SimMode::kVision;
    s.v_t = vt;
    const SaturationLimits lim = s.EffectiveLimits();
    for (const StepRecord& r : lanetrack::Run(s).records) {
      ASSERT_GE(r.applied.v, lim.v_min);
      ASSERT_LE(r.applied.v, lim.v_max);
      ASSERT_LE(std::abs(r.applied.omega), lim.omega_abs_max);
    }
  }
}

}  // namespace
}  // namespace lanetrack
