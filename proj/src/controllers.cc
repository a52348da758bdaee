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

#include "lanetrack/controllers.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lanetrack/error.h"

namespace lanetrack {
namespace {

// Magnitude clamp that keeps the sign; zero is treated as positive.
double ClampAwayFromZero(double x, double floor) {
  if (std::abs(x) >= floor) return x;
  return std::signbit(x) ? -floor : floor;
}

void RequireRho(const PolarError& e, double rho_epsilon) {
  if (!(e.rho > rho_epsilon)) {
    throw Error(ErrorCode::kDegenerateRho,
                "angular law undefined at rho = " + std::to_string(e.rho));
  }
}

}  // namespace

void ControllerGains::Validate() const {
  if (!(lambda_v > 0.0 && lambda_a > 0.0 && k1 > 0.0 && k2 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "controller gains must be positive");
  }
}

SaturationLimits SaturationLimits::ForTargetSpeed(double v_t) {
  SaturationLimits limits;
  limits.v_max = v_t + 0.25;
  return limits;
}

void SaturationLimits::Validate() const {
  if (!(v_min <= v_max) || !(omega_abs_max > 0.0) || !(accel_max > 0.0) ||
      !(alpha_accel_max > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "saturation limits need v_min <= v_max and positive omega/accel bounds");
  }
}

double Sinc2(double x) {
  if (std::abs(x) < kSeriesThreshold) return 1.0 - 2.0 * x * x / 3.0;
  return std::sin(2.0 * x) / (2.0 * x);
}

double ProposedLinear(const PolarError& e, const TargetState& target,
                      const ControllerGains& g) {
  return (target.v * std::cos(e.beta) + g.lambda_v * e.rho) * std::cos(e.alpha);
}

double NaiveLinear(const PolarError& e, const TargetState& target,
                   const ControllerGains& g, double cos_epsilon) {
  const double cos_a = std::cos(e.alpha);
  if (std::abs(cos_a) <= cos_epsilon) {
    throw Error(ErrorCode::kNearSingularAlpha,
                "naive linear law diverges at |cos alpha| = " +
                    std::to_string(std::abs(cos_a)));
  }
  return target.v * std::cos(e.beta) / cos_a + g.lambda_v * e.rho * cos_a;
}

AngularCommand ProposedAngular(const PolarError& e, const TargetState& target,
                               const ControllerGains& g,
                               const AngularOptions& options) {
  RequireRho(e, options.rho_epsilon);
  const double sin_a = std::sin(e.alpha);
  const double cos_a = std::cos(e.alpha);
  const double sin_b = std::sin(e.beta);
  const double cos_b = std::cos(e.beta);
  const double sin_a_den = ClampAwayFromZero(sin_a, options.denominator_floor);

  // sin(2a) / (2 sin a) reduces to cos a exactly, including at a = 0 and pi.
  const double half_sin2a_over_sin_a = cos_a;
  const double weighted = sin_a / g.k1 + sin_b / g.k2;
  const double prefactor = weighted / e.rho;

  const double speed_term =
      (g.k1 * half_sin2a_over_sin_a * cos_b - g.k1 * sin_b / sin_a_den) *
      target.v;
  const double turn_term = -target.phi_dot * g.k1 * sin_b / (g.k2 * sin_a_den);
  const double gain_term =
      g.k1 * half_sin2a_over_sin_a * g.lambda_v * weighted;

  AngularCommand out;
  if (options.form == AngularLawForm::kAsPrinted) {
    out.omega = g.lambda_a * sin_a +
                prefactor * (speed_term + turn_term + gain_term);
  } else {
    out.omega = g.lambda_a * sin_a + prefactor * speed_term + turn_term +
                gain_term;
  }
  out.near_singular = std::abs(sin_a) < options.denominator_floor &&
                      sin_b != 0.0 &&
                      (target.v != 0.0 || target.phi_dot != 0.0);
  return out;
}

ComparativeCommand ComparativeCmd(const PolarError& e, const TargetState& target,
                                  const ControllerGains& g,
                                  const AngularOptions& options) {
  RequireRho(e, options.rho_epsilon);
  const double a = e.alpha;
  const double b = e.beta;
  const double a_den = ClampAwayFromZero(a, options.denominator_floor);
  const double sinc = Sinc2(a);

  ComparativeCommand out;
  out.twist.v = ProposedLinear(e, target, g);
  out.twist.omega =
      g.lambda_a * a +
      (a + b) / e.rho * (sinc * std::cos(b) - std::sin(b) / a_den) * target.v -
      b / a_den * target.phi_dot + sinc * g.lambda_v * (a + b);
  out.near_singular = std::abs(a) < options.denominator_floor && b != 0.0 &&
                      (target.v != 0.0 || target.phi_dot != 0.0);
  return out;
}

LyapunovReport ComputeLyapunov(const PolarError& e, const Twist& cmd,
                               const TargetState& target,
                               const ControllerGains& g, ControllerKind variant,
                               double rho_epsilon) {
  LyapunovReport r;
  r.variant = variant;
  r.v1 = 0.5 * e.rho * e.rho;
  if (variant == ControllerKind::kProposed) {
    r.v2 = (1.0 - std::cos(e.alpha)) / g.k1 + (1.0 - std::cos(e.beta)) / g.k2;
  } else {
    r.v2 = 0.5 * (e.alpha * e.alpha + e.beta * e.beta);
  }
  r.v = r.v1 + r.v2;
  if (e.rho > rho_epsilon) {
    const PolarRates rates = ComputePolarRates(e, cmd, target, rho_epsilon);
    r.v1_dot = e.rho * rates.rho_dot;
    if (variant == ControllerKind::kProposed) {
      r.v2_dot = std::sin(e.alpha) * rates.alpha_dot / g.k1 +
                 std::sin(e.beta) * rates.beta_dot / g.k2;
    } else {
      r.v2_dot = e.alpha * rates.alpha_dot + e.beta * rates.beta_dot;
    }
    r.rates_valid = true;
  }
  return r;
}

double ExpectedV1Rate(const PolarError& e, const TargetState& target,
                      const ControllerGains& g) {
  const double cos_a = std::cos(e.alpha);
  const double sin_a = std::sin(e.alpha);
  return -g.lambda_v * e.rho * e.rho * cos_a * cos_a +
         target.v * e.rho * sin_a * sin_a * std::cos(e.beta);
}

double ExpectedV2Rate(const PolarError& e, const ControllerGains& g,
                      ControllerKind variant) {
  if (variant == ControllerKind::kProposed) {
    const double sin_a = std::sin(e.alpha);
    return -g.lambda_a * sin_a * sin_a / g.k1;
  }
  return -g.lambda_a * e.alpha * e.alpha;
}

SaturationResult Saturate(const Twist& raw, const Twist& prev,
                          const SaturationLimits& limits, double dt) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDt, "saturation step must be positive");
  }
  SaturationResult out;
  double v = std::clamp(raw.v, limits.v_min, limits.v_max);
  double w = std::clamp(raw.omega, -limits.omega_abs_max, limits.omega_abs_max);
  out.magnitude_clamped = v != raw.v || w != raw.omega;

  const double dv = limits.accel_max * dt;
  const double dw = limits.alpha_accel_max * dt;
  const double v_slewed = std::clamp(v, prev.v - dv, prev.v + dv);
  const double w_slewed = std::clamp(w, prev.omega - dw, prev.omega + dw);
  out.slew_limited = v_slewed != v || w_slewed != w;

  out.twist.v = std::clamp(v_slewed, limits.v_min, limits.v_max);
  out.twist.omega =
      std::clamp(w_slewed, -limits.omega_abs_max, limits.omega_abs_max);
  return out;
}

std::string_view ControllerKindName(ControllerKind kind) {
  return kind == ControllerKind::kProposed ? "proposed" : "comparative";
}

}  // namespace lanetrack
