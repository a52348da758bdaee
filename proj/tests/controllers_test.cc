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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "lanetrack/controllers.h"
#include "lanetrack/error.h"

namespace lanetrack {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

struct State {
  PolarError e;
  TargetState target;
};

// Random polar state away from the guarded singularities.
State RandomState(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  std::uniform_real_distribution<double> rho(0.1, 5.0);
  std::uniform_real_distribution<double> speed(0.5, 2.5);
  std::uniform_real_distribution<double> turn(-0.5, 0.5);
  State s;
  do {
    s.e.alpha = ang(rng);
  } while (std::abs(std::sin(s.e.alpha)) < 1e-2);
  s.e.beta = ang(rng);
  s.e.rho = rho(rng);
  s.target.v = speed(rng);
  s.target.phi_dot = turn(rng);
  return s;
}

// V2 rate evaluated from its definition in 50-digit arithmetic:
//   los = (v sin a - v_t sin b) / rho,  a' = los - w,  b' = los - phi_t'.
Big ProposedV2RateOracle(const State& s, double v, double w, const ControllerGains& g) {
  using boost::multiprecision::sin;
  const Big a(s.e.alpha), b(s.e.beta), rho(s.e.rho);
  const Big los = (Big(v) * sin(a) - Big(s.target.v) * sin(b)) / rho;
  return sin(a) * (los - Big(w)) / Big(g.k1) +
         sin(b) * (los - Big(s.target.phi_dot)) / Big(g.k2);
}

Big ComparativeV2RateOracle(const State& s, double v, double w) {
  using boost::multiprecision::sin;
  const Big a(s.e.alpha), b(s.e.beta), rho(s.e.rho);
  const Big los = (Big(v) * sin(a) - Big(s.target.v) * sin(b)) / rho;
  return a * (los - Big(w)) + b * (los - Big(s.target.phi_dot));
}

double RelErr(const Big& got, const Big& want) {
  using boost::multiprecision::abs;
  const Big scale = abs(want) > Big(1e-12) ? abs(want) : Big(1e-12);
  return static_cast<double>(abs(got - want) / scale);
}

TEST(Linear, Law) {
  const ControllerGains g;
  PolarError e;
  e.rho = 2.0;
  e.alpha = 0.3;
  e.beta = -0.2;
  TargetState t;
  t.v = 1.5;
  EXPECT_DOUBLE_EQ(ProposedLinear(e, t, g),
                   (1.5 * std::cos(-0.2) + 0.075 * 2.0) * std::cos(0.3));
}

TEST(Linear, NaiveLawDivergesNearQuarterTurn) {
  PolarError e;
  e.rho = 1.0;
  e.alpha = kPi / 2;
  TargetState t;
  t.v = 1.0;
  try {
    NaiveLinear(e, t, ControllerGains{});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNearSingularAlpha);
  }
  e.alpha = 0.1;
  EXPECT_GT(NaiveLinear(e, t, ControllerGains{}), 1.0);
}

// The linear law alone fixes the V1 rate.
TEST(Lyapunov, V1RateIdentity) {
  std::mt19937_64 rng(11);
  const ControllerGains g;
  for (int i = 0; i < 1000; ++i) {
    const State s = RandomState(rng);
    const double v = ProposedLinear(s.e, s.target, g);
    const double rho_dot = s.target.v * std::cos(s.e.beta) - v * std::cos(s.e.alpha);
    EXPECT_NEAR(s.e.rho * rho_dot, ExpectedV1Rate(s.e, s.target, g),
                1e-12 * (1.0 + s.e.rho * s.e.rho));
  }
}

TEST(Lyapunov, ProposedAngularMakesV2RateNegativeDefinite) {
  std::mt19937_64 rng(12);
  const ControllerGains g;
  for (int i = 0; i < 1000; ++i) {
    const State s = RandomState(rng);
    const double v = ProposedLinear(s.e, s.target, g);
    const double w = ProposedAngular(s.e, s.target, g).omega;
    const Big want = -Big(g.lambda_a) * boost::multiprecision::pow(
                                            boost::multiprecision::sin(Big(s.e.alpha)), 2) /
                     Big(g.k1);
    EXPECT_LT(RelErr(ProposedV2RateOracle(s, v, w, g), want), 1e-9)
        << "alpha=" << s.e.alpha << " beta=" << s.e.beta << " rho=" << s.e.rho;
  }
}

// The printed grouping scales every bracket term by P/rho; it does not
// satisfy the rate identity in general.
TEST(Lyapunov, AsPrintedFormBreaksIdentity) {
  std::mt19937_64 rng(13);
  const ControllerGains g;
  AngularOptions printed;
  printed.form = AngularLawForm::kAsPrinted;
  int mismatched = 0;
  for (int i = 0; i < 200; ++i) {
    const State s = RandomState(rng);
    const double v = ProposedLinear(s.e, s.target, g);
    const double w = ProposedAngular(s.e, s.target, g, printed).omega;
    const double want = ExpectedV2Rate(s.e, g, ControllerKind::kProposed);
    if (RelErr(ProposedV2RateOracle(s, v, w, g), Big(want)) > 1e-3) ++mismatched;
  }
  EXPECT_GT(mismatched, 150);
}

TEST(Lyapunov, ComparativeMakesV2RateNegativeDefinite) {
  std::mt19937_64 rng(14);
  const ControllerGains g;
  for (int i = 0; i < 1000; ++i) {
    const State s = RandomState(rng);
    const ComparativeCommand c = ComparativeCmd(s.e, s.target, g);
    const Big want = -Big(g.lambda_a) * Big(s.e.alpha) * Big(s.e.alpha);
    EXPECT_LT(RelErr(ComparativeV2RateOracle(s, c.twist.v, c.twist.omega), want), 1e-9);
  }
}

// Hand transcription of the comparative law with sin(2a)/(2a) spelled out.
TEST(Comparative, MatchesDirectTranscription) {
  std::mt19937_64 rng(15);
  const ControllerGains g;
  for (int i = 0; i < 500; ++i) {
    const State s = RandomState(rng);
    const long double a = s.e.alpha, b = s.e.beta, rho = s.e.rho;
    const long double vt = s.target.v, pd = s.target.phi_dot;
    const long double sinc = std::sin(2 * a) / (2 * a);
    const long double want = g.lambda_a * a +
                             (a + b) / rho * (sinc * std::cos(b) - std::sin(b) / a) * vt -
                             b / a * pd + sinc * g.lambda_v * (a + b);
    EXPECT_NEAR(ComparativeCmd(s.e, s.target, g).twist.omega, static_cast<double>(want),
                1e-9 * (1.0 + std::abs(static_cast<double>(want))));
  }
}

TEST(Comparative, Sinc2SeriesIsContinuous) {
  const double x = kSeriesThreshold;
  EXPECT_NEAR(Sinc2(x * (1 - 1e-12)), Sinc2(x * (1 + 1e-12)), 1e-15);
  EXPECT_DOUBLE_EQ(Sinc2(0.0), 1.0);
  EXPECT_NEAR(Sinc2(0.3), std::sin(0.6) / 0.6, 1e-15);
}

TEST(Angular, GuardsSmallAlpha) {
  PolarError e;
  e.rho = 1.0;
  e.alpha = 0.0;
  e.beta = 0.1;
  TargetState t;
  t.v = 1.5;
  const AngularCommand w = ProposedAngular(e, t, ControllerGains{});
  EXPECT_TRUE(w.near_singular);
  EXPECT_TRUE(std::isfinite(w.omega));
  EXPECT_TRUE(ComparativeCmd(e, t, ControllerGains{}).near_singular);

  e.beta = 0.0;
  EXPECT_FALSE(ProposedAngular(e, t, ControllerGains{}).near_singular);
  EXPECT_DOUBLE_EQ(ProposedAngular(e, t, ControllerGains{}).omega, 0.0);
}

TEST(Angular, RejectsDegenerateRho) {
  PolarError e;
  e.rho = 1e-4;
  e.alpha = 0.5;
  try {
    ProposedAngular(e, TargetState{}, ControllerGains{});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kDegenerateRho);
  }
}

TEST(Lyapunov, ReportMatchesExpectedRates) {
  std::mt19937_64 rng(16);
  const ControllerGains g;
  for (int i = 0; i < 100; ++i) {
    const State s = RandomState(rng);
    const Twist cmd{ProposedLinear(s.e, s.target, g),
                    ProposedAngular(s.e, s.target, g).omega};
    const LyapunovReport r = ComputeLyapunov(s.e, cmd, s.target, g, ControllerKind::kProposed);
    ASSERT_TRUE(r.rates_valid);
    EXPECT_NEAR(r.v1_dot, ExpectedV1Rate(s.e, s.target, g), 1e-9);
    EXPECT_NEAR(r.v2_dot, ExpectedV2Rate(s.e, g, ControllerKind::kProposed), 1e-9);
    EXPECT_DOUBLE_EQ(r.v, r.v1 + r.v2);
  }
}

TEST(Saturation, DefaultsFollowTargetSpeed) {
  EXPECT_DOUBLE_EQ(SaturationLimits::ForTargetSpeed(1.5).v_max, 1.75);
  EXPECT_DOUBLE_EQ(SaturationLimits::ForTargetSpeed(2.0).v_max, 2.25);
  EXPECT_DOUBLE_EQ(SaturationLimits{}.v_min, 0.6);
  EXPECT_DOUBLE_EQ(SaturationLimits{}.omega_abs_max, 0.4);
}

TEST(Saturation, ClampsAndSlews) {
  const SaturationLimits lim = SaturationLimits::ForTargetSpeed(1.5);
  const Twist prev{1.0, 0.0};
  SaturationResult r = Saturate({5.0, 2.0}, prev, lim, 0.01);
  EXPECT_TRUE(r.magnitude_clamped);
  EXPECT_TRUE(r.slew_limited);
  EXPECT_DOUBLE_EQ(r.twist.v, 1.01);
  EXPECT_DOUBLE_EQ(r.twist.omega, 0.01);

  r = Saturate({1.005, 0.005}, prev, lim, 0.01);
  EXPECT_FALSE(r.magnitude_clamped);
  EXPECT_FALSE(r.slew_limited);
  EXPECT_EQ(r.twist, (Twist{1.005, 0.005}));
}

// Bounds win over slew: from rest the first command lands on v_min.
TEST(Saturation, BoundsHoldFromRest) {
  const SaturationLimits lim;
  const SaturationResult r = Saturate({1.0, 0.0}, Twist{}, lim, 0.01);
  EXPECT_DOUBLE_EQ(r.twist.v, lim.v_min);
}

TEST(Saturation, RandomCommandsStayInBounds) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const SaturationLimits lim = SaturationLimits::ForTargetSpeed(2.0);
  Twist prev{0.6, 0.0};
  for (int i = 0; i < 10000; ++i) {
    const Twist out = Saturate({u(rng), u(rng)}, prev, lim, 0.01).twist;
    ASSERT_GE(out.v, lim.v_min);
    ASSERT_LE(out.v, lim.v_max);
    ASSERT_LE(std::abs(out.omega), lim.omega_abs_max);
    ASSERT_LE(std::abs(out.v - prev.v), lim.accel_max * 0.01 + 1e-15);
    ASSERT_LE(std::abs(out.omega - prev.omega), lim.alpha_accel_max * 0.01 + 1e-15);
    prev = out;
  }
}

TEST(Saturation, RejectsBadInput) {
  EXPECT_THROW(Saturate({}, {}, SaturationLimits{}, 0.0), Error);
  SaturationLimits bad;
  bad.v_min = 3.0;
  EXPECT_THROW(bad.Validate(), Error);
  ControllerGains g;
  g.k2 = 0.0;
  EXPECT_THROW(g.Validate(), Error);
}

}  // namespace
}  // namespace lanetrack
