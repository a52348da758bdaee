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

// Moving-target tracking laws for a unicycle robot expressed in polar error
// coordinates (rho, alpha, beta).
//
// Two Lyapunov candidates are supported:
//
//   proposed:     V = rho^2/2 + (1 - cos alpha)/k1 + (1 - cos beta)/k2
//   comparative:  V = rho^2/2 + (alpha^2 + beta^2)/2
//
// Both share the linear law v = (v_t cos beta + lambda_v rho) cos alpha.
// The angular laws are chosen so that, unsaturated,
//
//   proposed:     dV2/dt = -lambda_a sin^2(alpha) / k1
//   comparative:  dV2/dt = -lambda_a alpha^2
//
// The angular laws contain sin(beta)/sin(alpha) (proposed) and beta/alpha
// (comparative) terms. Near alpha = 0 the denominator magnitude is clamped to
// `denominator_floor` with its sign preserved and the result is flagged.

#ifndef LANETRACK_CONTROLLERS_H_
#define LANETRACK_CONTROLLERS_H_

#include <string_view>

#include "lanetrack/model.h"

namespace lanetrack {

struct ControllerGains {
  double lambda_v = 0.075;  // distance gain, 1/s
  double lambda_a = 0.15;   // heading gain, 1/s
  double k1 = 0.8;          // weight on alpha in V2
  double k2 = 50.0;         // weight on beta in V2

  // Throws kInvalidArgument unless every gain is strictly positive.
  void Validate() const;
};

struct SaturationLimits {
  double v_min = 0.6;
  double v_max = 1.75;
  double omega_abs_max = 0.4;
  double accel_max = 1.0;        // m/s^2
  double alpha_accel_max = 1.0;  // rad/s^2

  // v_max tracks the target speed with a fixed 0.25 m/s headroom.
  static SaturationLimits ForTargetSpeed(double v_t);
  void Validate() const;
};

enum class ControllerKind { kProposed, kComparative };

// Which transcription of the proposed angular law to evaluate. kConsistent
// applies the 1/rho prefactor only to the target-speed term, which is the
// form that makes dV2/dt = -lambda_a sin^2(alpha)/k1 hold. kAsPrinted
// distributes the prefactor over the whole bracket; it is kept only so the
// discrepancy can be measured.
enum class AngularLawForm { kConsistent, kAsPrinted };

inline constexpr double kDefaultDenominatorFloor = 1e-6;
inline constexpr double kDefaultCosEpsilon = 1e-3;
inline constexpr double kSeriesThreshold = 1e-4;

struct AngularOptions {
  AngularLawForm form = AngularLawForm::kConsistent;
  double denominator_floor = kDefaultDenominatorFloor;
  double rho_epsilon = kDefaultRhoEpsilon;
};

struct AngularCommand {
  double omega = 0.0;
  // The alpha denominator was clamped while the beta-coupled terms were
  // non-negligible.
  bool near_singular = false;
};

struct LyapunovReport {
  double v = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double v1_dot = 0.0;
  double v2_dot = 0.0;
  bool rates_valid = false;
  ControllerKind variant = ControllerKind::kProposed;
};

// v = (v_t cos beta + lambda_v rho) cos alpha.
double ProposedLinear(const PolarError& e, const TargetState& target,
                      const ControllerGains& g);

// v = v_t cos beta / cos alpha + lambda_v rho cos alpha. Diverges as
// cos alpha -> 0; throws kNearSingularAlpha when |cos alpha| <= cos_epsilon.
double NaiveLinear(const PolarError& e, const TargetState& target,
                   const ControllerGains& g,
                   double cos_epsilon = kDefaultCosEpsilon);

// Throws kDegenerateRho when rho <= options.rho_epsilon.
AngularCommand ProposedAngular(const PolarError& e, const TargetState& target,
                               const ControllerGains& g,
                               const AngularOptions& options = {});

struct ComparativeCommand {
  Twist twist;
  bool near_singular = false;
};

// Throws kDegenerateRho when rho <= options.rho_epsilon.
ComparativeCommand ComparativeCmd(const PolarError& e, const TargetState& target,
                                  const ControllerGains& g,
                                  const AngularOptions& options = {});

// Lyapunov values for the chosen candidate and their time derivatives along
// the motion produced by `cmd` (not the law's ideal command). Rates are zero
// and `rates_valid` false when rho <= rho_epsilon.
LyapunovReport ComputeLyapunov(const PolarError& e, const Twist& cmd,
                               const TargetState& target,
                               const ControllerGains& g, ControllerKind variant,
                               double rho_epsilon = kDefaultRhoEpsilon);

// Rates the laws guarantee when applied unsaturated.
double ExpectedV1Rate(const PolarError& e, const TargetState& target,
                      const ControllerGains& g);
double ExpectedV2Rate(const PolarError& e, const ControllerGains& g,
                      ControllerKind variant);

struct SaturationResult {
  Twist twist;
  bool magnitude_clamped = false;
  bool slew_limited = false;
};

// Clamps each channel to its magnitude bounds, limits the change from `prev`
// to accel*dt, then re-applies the magnitude bounds so the output is always
// inside them even when `prev` was not. Throws kNonPositiveDt.
SaturationResult Saturate(const Twist& raw, const Twist& prev,
                          const SaturationLimits& limits, double dt);

std::string_view ControllerKindName(ControllerKind kind);

// sin(2x) / (2x), continuous at 0.
double Sinc2(double x);

}  // namespace lanetrack

#endif  // LANETRACK_CONTROLLERS_H_
