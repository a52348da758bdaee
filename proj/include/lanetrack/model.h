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

// Differential-drive kinematics and the polar tracking-error geometry used
// by the controllers.
//
// Frames: the global frame is planar with heading `phi` measured from the
// global x axis. Every angle produced here is wrapped to (-pi, pi].

#ifndef LANETRACK_MODEL_H_
#define LANETRACK_MODEL_H_

#include "lanetrack/geometry.h"

namespace lanetrack {

// Below this distance the line-of-sight angle is undefined and the polar
// rates refuse to evaluate.
inline constexpr double kDefaultRhoEpsilon = 1e-3;
inline constexpr double kDefaultOmegaEpsilon = 1e-9;

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;

  Point2 position() const { return {x, y}; }
  friend bool operator==(const Pose&, const Pose&) = default;
};

struct Twist {
  double v = 0.0;      // m/s along the body x axis
  double omega = 0.0;  // rad/s

  friend bool operator==(const Twist&, const Twist&) = default;
};

struct RobotParams {
  double wheel_radius = 0.1;  // r
  double half_track = 0.25;   // d, half the wheel spacing

  // Throws kInvalidArgument unless r > 0 and d > 0.
  void Validate() const;
};

struct WheelSpeeds {
  double v_right = 0.0;
  double v_left = 0.0;
  double omega_right = 0.0;
  double omega_left = 0.0;
};

// Moving target: position, heading, speed along the heading and heading rate.
struct TargetState {
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;
  double v = 0.0;
  double phi_dot = 0.0;

  Point2 position() const { return {x, y}; }
};

struct PolarError {
  double rho = 0.0;    // distance to the target
  double theta = 0.0;  // line-of-sight angle
  double alpha = 0.0;  // theta - robot heading
  double beta = 0.0;   // theta - target heading
};

struct PolarRates {
  double rho_dot = 0.0;
  double alpha_dot = 0.0;
  double beta_dot = 0.0;
};

enum class Integrator { kEuler, kExactArc };

Twist DriveToBody(double v_right, double v_left, const RobotParams& params);
Twist DriveToBody(const WheelSpeeds& wheels, const RobotParams& params);

// Inverse of DriveToBody; fills the wheel angular speeds from `wheel_radius`.
WheelSpeeds BodyToDrive(const Twist& twist, const RobotParams& params);

// Turning radius v / omega. Throws kZeroAngularVelocity for straight motion.
double MotionRadius(const Twist& twist,
                    double omega_epsilon = kDefaultOmegaEpsilon);

// Advances the pose by one step of length `dt` under a constant command.
// kEuler is the explicit Euler update; kExactArc integrates the unicycle
// in closed form along the circular arc. Throws kNonPositiveDt.
Pose Integrate(const Pose& pose, const Twist& cmd, double dt,
               Integrator integrator = Integrator::kEuler);

// Polar error between the robot and the target. When the two coincide the
// line-of-sight angle is taken to be the robot heading.
PolarError ComputePolarError(const Pose& pose, const TargetState& target);

// Analytic time derivatives of (rho, alpha, beta) under the robot command
// and the target motion. Throws kDegenerateRho when rho <= rho_epsilon.
PolarRates ComputePolarRates(const PolarError& error, const Twist& cmd,
                             const TargetState& target,
                             double rho_epsilon = kDefaultRhoEpsilon);

// Heading rate of a target that passes through a, b, c and spends `dt`
// between consecutive points. The heading change is wrapped before the
// division. Throws kCoincidentPoints or kNonPositiveDt.
double TargetHeadingRate(Point2 a, Point2 b, Point2 c, double dt);

}  // namespace lanetrack

#endif  // LANETRACK_MODEL_H_
