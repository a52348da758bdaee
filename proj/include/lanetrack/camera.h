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

#ifndef LANETRACK_CAMERA_H_
#define LANETRACK_CAMERA_H_

#include <Eigen/Core>

#include "lanetrack/geometry.h"

namespace lanetrack {

// Pinhole camera rigidly mounted on the vehicle.
//
// Camera frame: x right, y down, z along the optical axis. Vehicle frame:
// x forward, y left, z up, origin on the ground plane.
struct CameraModel {
  Eigen::Matrix3d intrinsics = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();  // vehicle <- camera
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();   // camera centre
  int image_width = 0;
  int image_height = 0;

  // Camera `height` metres above the vehicle origin, `forward` metres ahead
  // of it, pitched down by `pitch` and yawed left by `yaw` (radians).
  static CameraModel Mounted(double fx, double fy, double cx, double cy,
                             int width, int height_px, double height,
                             double pitch, double yaw = 0.0,
                             double forward = 0.0);

  double height() const { return translation.z(); }

  // Throws kInvalidArgument unless fx, fy > 0, the rotation is orthonormal
  // and the camera sits above the ground.
  void Validate() const;
};

// Back-projects a pixel through the intrinsics, rotates the ray into the
// vehicle frame and intersects it with the ground plane z = 0. Throws
// kPixelOutOfBounds for pixels outside the image and kAboveHorizon when the
// ray does not meet the ground in front of the camera.
Point2 PixelToVehicle(double u, double v, const CameraModel& camera);

}  // namespace lanetrack

#endif  // LANETRACK_CAMERA_H_
