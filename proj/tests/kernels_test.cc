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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lanetrack/error.h"
#include "lanetrack/kernels.h"

namespace lanetrack {
namespace {

TEST(ProjectOntoPath, ParallelMatchesSerial) {
  const TrackGeometry g(MakeFixtureTrack("figure_course"));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-40.0, 80.0);
  std::vector<Point2> pts(5000);
  for (Point2& p : pts) p = {u(rng), u(rng)};
  const auto par = ProjectOntoPath(pts, g.reference());
  const auto ser = ProjectOntoPathSerial(pts, g.reference());
  ASSERT_EQ(par.size(), ser.size());
  for (size_t i = 0; i < par.size(); ++i) {
    ASSERT_EQ(par[i].cross_track, ser[i].cross_track);
    ASSERT_EQ(par[i].heading, ser[i].heading);
    ASSERT_EQ(par[i].segment, ser[i].segment);
  }
}

// Brute force: the smallest distance to any densely sampled path point.
TEST(ProjectOntoPath, DistanceMatchesDenseSampling) {
  const Polyline path = {{0, 0}, {4, 0}, {4, 3}, {0, 5}};
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 7.0);
  for (int i = 0; i < 200; ++i) {
    const Point2 p{u(rng), u(rng)};
    double best = 1e300;
    for (size_t j = 0; j + 1 < path.size(); ++j) {
      for (int k = 0; k <= 20000; ++k) {
        const double t = k / 20000.0;
        best = std::min(best, Distance(p, (1 - t) * path[j] + t * path[j + 1]));
      }
    }
    const double got = std::abs(ProjectOntoPathSerial(std::span(&p, 1), path)[0].cross_track);
    EXPECT_NEAR(got, best, 1e-3);
  }
}

TEST(ProjectOntoPath, HeadingInterpolatesAtCorner) {
  const Polyline path = {{0, 0}, {1, 0}, {1, 1}};
  const Point2 corner{1.2, -0.2};
  const auto p = ProjectOntoPathSerial(std::span(&corner, 1), path);
  EXPECT_NEAR(p[0].heading, kPi / 4, 1e-12);
}

TEST(ProjectOntoPath, Degenerate) {
  const Point2 p{0, 0};
  EXPECT_THROW(ProjectOntoPath(std::span(&p, 1), Polyline{{1, 1}}), Error);
  EXPECT_THROW(ProjectOntoPath(std::span(&p, 1), Polyline{{1, 1}, {1, 1}}), Error);
}

TEST(RunBatch, ParallelMatchesSerial) {
  std::vector<Scenario> scenarios;
  for (const char* name : {"oval", "circle", "figure_course"}) {
    for (SimMode mode : {SimMode::kPresetPath, SimMode::kVision}) {
      Scenario s;
      s.track = MakeFixtureTrack(name);
      s.mode = mode;
      s.duration_max = 15.0;
      s.sensor.point_noise_sigma = 0.03;
      scenarios.push_back(s);
    }
  }
  const auto par = RunBatch(scenarios);
  const auto ser = RunBatchSerial(scenarios);
  ASSERT_EQ(par.size(), ser.size());
  for (size_t i = 0; i < par.size(); ++i) {
    ASSERT_EQ(par[i].records.size(), ser[i].records.size());
    EXPECT_EQ(par[i].termination, ser[i].termination);
    for (size_t k = 0; k < par[i].records.size(); ++k) {
      ASSERT_EQ(par[i].records[k].pose, ser[i].records[k].pose);
    }
  }
}

TEST(RunBatch, PropagatesErrors) {
  Scenario bad;
  bad.track = MakeFixtureTrack("oval");
  bad.dt = -1.0;
  std::vector<Scenario> scenarios = {bad};
  EXPECT_THROW(RunBatch(scenarios), Error);
  EXPECT_GE(KernelThreads(), 1);
}

}  // namespace
}  // namespace lanetrack
