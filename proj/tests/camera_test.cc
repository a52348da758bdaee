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

#include <Eigen/LU>

#include "lanetrack/camera.h"
#include "lanetrack/error.h"

namespace lanetrack {
namespace {

CameraModel TestCamera(double pitch = 0.3, double yaw = 0.0) {
  return CameraModel::Mounted(600.0, 600.0, 320.0, 240.0, 640, 480, 1.2, pitch, yaw, 0.4);
}

// March along the pixel ray in small steps until it crosses the ground.
// Independent of the closed-form intersection under test.
Point2 MarchToGround(double u, double v, const CameraModel& cam) {
  const Eigen::Vector3d dir =
      (cam.rotation * cam.intrinsics.inverse() * Eigen::Vector3d(u, v, 1.0)).normalized();
  Eigen::Vector3d p = cam.translation;
  double step = 1.0;
  while (step > 1e-12) {
    const Eigen::Vector3d next = p + step * dir;
    if (next.z() > 0.0) {
      p = next;
    } else {
      step *= 0.5;
    }
  }
  return {p.x(), p.y()};
}

TEST(Camera, PrincipalPointHitsAlongPitch) {
  const CameraModel cam = TestCamera(0.3);
  const Point2 g = PixelToVehicle(320.0, 240.0, cam);
  EXPECT_NEAR(g.x, 0.4 + 1.2 / std::tan(0.3), 1e-12);
  EXPECT_NEAR(g.y, 0.0, 1e-12);
}

TEST(Camera, RightOfImageIsRightOfVehicle) {
  const Point2 g = PixelToVehicle(600.0, 400.0, TestCamera());
  EXPECT_LT(g.y, 0.0);
}

TEST(Camera, MatchesRayMarch) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 640.0);
  std::uniform_real_distribution<double> v(260.0, 480.0);
  std::uniform_real_distribution<double> yaw(-0.2, 0.2);
  for (int i = 0; i < 200; ++i) {
    const CameraModel cam = TestCamera(0.3, yaw(rng));
    const double uu = u(rng), vv = v(rng);
    const Point2 got = PixelToVehicle(uu, vv, cam);
    const Point2 want = MarchToGround(uu, vv, cam);
    EXPECT_NEAR(got.x, want.x, 1e-9);
    EXPECT_NEAR(got.y, want.y, 1e-9);
  }
}

TEST(Camera, Errors) {
  const CameraModel cam = TestCamera(0.05);
  try {
    PixelToVehicle(320.0, 0.0, cam);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAboveHorizon);
  }
  try {
    PixelToVehicle(-1.0, 300.0, cam);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPixelOutOfBounds);
  }
  CameraModel bad = cam;
  bad.translation.z() = 0.0;
  EXPECT_THROW(bad.Validate(), Error);
  EXPECT_NO_THROW(cam.Validate());
}

}  // namespace
}  // namespace lanetrack
