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

#include "lanetrack/model.h"

#include <cmath>

#include "lanetrack/error.h"

namespace lanetrack {

void RobotParams::Validate() const {
  if (!(wheel_radius > 0.0) || !(half_track > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "wheel_radius and half_track must be positive");
  }
}

Twist DriveToBody(double v_right, double v_left, const RobotParams& params) {
  return {0.5 * (v_right + v_left),
          (v_right - v_left) / (2.0 * params.half_track)};
}

Twist DriveToBody(const WheelSpeeds& wheels, const RobotParams& params) {
  return DriveToBody(wheels.v_right, wheels.v_left, params);
}

WheelSpeeds BodyToDrive(const Twist& twist, const RobotParams& params) {
  WheelSpeeds w;
  w.v_right = twist.v + twist.omega * params.half_track;
  w.v_left = twist.v - twist.omega * params.half_track;
  w.omega_right = w.v_right / params.wheel_radius;
  w.omega_left = w.v_left / params.wheel_radius;
  return w;
}

double MotionRadius(const Twist& twist, double omega_epsilon) {
  if (std::abs(twist.omega) <= omega_epsilon) {
    throw Error(ErrorCode::kZeroAngularVelocity,
                "motion radius is undefined for straight-line motion");
  }
  return twist.v / twist.omega;
}

Pose Integrate(const Pose& pose, const Twist& cmd, double dt,
               Integrator integrator) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDt, "integration step must be positive");
  }
  Pose next = pose;
  if (integrator == Integrator::kExactArc && std::abs(cmd.omega) > 1e-12) {
    const double phi1 = pose.phi + cmd.omega * dt;
    const double r = cmd.v / cmd.omega;
    next.x += r * (std::sin(phi1) - std::sin(pose.phi));
    next.y -= r * (std::cos(phi1) - std::cos(pose.phi));
    next.phi = WrapAngle(phi1);
    return next;
  }
  next.x += cmd.v * std::cos(pose.phi) * dt;
  next.y += cmd.v * std::sin(pose.phi) * dt;
  next.phi = WrapAngle(pose.phi + cmd.omega * dt);
  return next;
}

PolarError ComputePolarError(const Pose& pose, const TargetState& target) {
  const double dx = target.x - pose.x;
  const double dy = target.y - pose.y;
  PolarError e;
  e.rho = std::hypot(dx, dy);
  e.theta = e.rho > 0.0 ? std::atan2(dy, dx) : WrapAngle(pose.phi);
  e.alpha = WrapAngle(e.theta - pose.phi);
  e.beta = WrapAngle(e.theta - target.phi);
  return e;
}

PolarRates ComputePolarRates(const PolarError& error, const Twist& cmd,
                             const TargetState& target, double rho_epsilon) {
  if (!(error.rho > rho_epsilon)) {
    throw Error(ErrorCode::kDegenerateRho,
                "polar rates are undefined at rho <= " +
                    std::to_string(rho_epsilon));
  }
  const double sin_a = std::sin(error.alpha);
  const double sin_b = std::sin(error.beta);
  // Rotation rate of the line of sight.
  const double los_rate = (cmd.v * sin_a - target.v * sin_b) / error.rho;
  PolarRates r;
  r.rho_dot = target.v * std::cos(error.beta) - cmd.v * std::cos(error.alpha);
  r.alpha_dot = los_rate - cmd.omega;
  r.beta_dot = los_rate - target.phi_dot;
  return r;
}

double TargetHeadingRate(Point2 a, Point2 b, Point2 c, double dt) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDt, "heading-rate interval must be positive");
  }
  if (a == b || b == c) {
    throw Error(ErrorCode::kCoincidentPoints,
                "look-ahead points must be pairwise distinct");
  }
  const double phi_ab = std::atan2(b.y - a.y, b.x - a.x);
  const double phi_bc = std::atan2(c.y - b.y, c.x - b.x);
  return WrapAngle(phi_bc - phi_ab) / dt;
}

}  // namespace lanetrack
