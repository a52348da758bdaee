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

#include "lanetrack/camera.h"

#include <cmath>

#include <Eigen/Geometry>

#include "lanetrack/error.h"

namespace lanetrack {

CameraModel CameraModel::Mounted(double fx, double fy, double cx, double cy,
                                 int width, int height_px, double height,
                                 double pitch, double yaw, double forward) {
  CameraModel cam;
  cam.intrinsics << fx, 0.0, cx, 0.0, fy, cy, 0.0, 0.0, 1.0;
  // Columns: camera x, y, z axes of a level camera looking along vehicle x.
  Eigen::Matrix3d level;
  level << 0.0, 0.0, 1.0,
          -1.0, 0.0, 0.0,
           0.0, -1.0, 0.0;
  // A positive rotation about vehicle y tips the optical axis downward.
  cam.rotation = Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()).matrix() *
                 Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()).matrix() *
                 level;
  cam.translation = Eigen::Vector3d(forward, 0.0, height);
  cam.image_width = width;
  cam.image_height = height_px;
  return cam;
}

void CameraModel::Validate() const {
  if (!(intrinsics(0, 0) > 0.0) || !(intrinsics(1, 1) > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "focal lengths must be positive");
  }
  const double ortho =
      (rotation.transpose() * rotation - Eigen::Matrix3d::Identity()).norm();
  if (!(ortho < 1e-9)) {
    throw Error(ErrorCode::kInvalidArgument, "extrinsic rotation is not orthonormal");
  }
  if (!(translation.z() > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "camera must sit above the ground");
  }
}

Point2 PixelToVehicle(double u, double v, const CameraModel& camera) {
  if (u < 0.0 || v < 0.0 || u > camera.image_width ||
      v > camera.image_height) {
    throw Error(ErrorCode::kPixelOutOfBounds, "pixel lies outside the image");
  }
  const Eigen::Vector3d ray_cam =
      camera.intrinsics.inverse() * Eigen::Vector3d(u, v, 1.0);
  const Eigen::Vector3d ray = camera.rotation * ray_cam;
  // origin + lambda * ray meets z = 0 at lambda = -origin.z / ray.z.
  if (!(ray.z() < 0.0)) {
    throw Error(ErrorCode::kAboveHorizon, "ray does not reach the ground plane");
  }
  const double lambda = -camera.translation.z() / ray.z();
  const Eigen::Vector3d hit = camera.translation + lambda * ray;
  return {hit.x(), hit.y()};
}

}  // namespace lanetrack
