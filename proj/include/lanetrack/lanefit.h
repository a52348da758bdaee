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

// Lane geometry in the vehicle frame (x forward, y left): region-of-interest
// filtering, arc-length resampling, cubic least-squares fitting, centerline
// synthesis with missing-lane fallback and look-ahead point extraction.
//
// Lanes are modelled as graphs y = p(x) with p at most cubic. Higher orders
// are never fitted; equispaced high-order fits oscillate near the ends of
// the sampled range.

#ifndef LANETRACK_LANEFIT_H_
#define LANETRACK_LANEFIT_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lanetrack/geometry.h"

namespace lanetrack {

inline constexpr double kDefaultLaneWidth = 3.5;
inline constexpr double kDefaultResampleSpacing = 0.25;
inline constexpr int kCenterlineGridSize = 64;

struct Roi {
  double x_min = 0.0;
  double x_max = 10.0;
  double y_min = -5.0;
  double y_max = 5.0;

  bool Contains(Point2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
};

struct CubicPoly {
  std::array<double, 4> a{};  // a0 + a1 x + a2 x^2 + a3 x^3
  double x_lo = 0.0;
  double x_hi = 1.0;

  double operator()(double x) const {
    return a[0] + x * (a[1] + x * (a[2] + x * a[3]));
  }
  double Derivative(double x) const {
    return a[1] + x * (2.0 * a[2] + x * 3.0 * a[3]);
  }
  bool InRange(double x) const { return x >= x_lo && x <= x_hi; }
};

struct CubicFit {
  CubicPoly poly;
  int order = 3;  // degree actually fitted; higher coefficients are zero
  double residual_norm = 0.0;
};

enum class CenterlineMode { kBothLanes, kLeftOnly, kRightOnly, kNone };

std::string_view CenterlineModeName(CenterlineMode mode);

struct CenterlineResult {
  CenterlineMode mode = CenterlineMode::kNone;
  std::optional<CubicPoly> centerline;
  std::optional<CubicPoly> lane_left;
  std::optional<CubicPoly> lane_right;
};

struct LookaheadPoints {
  std::array<Point2, 3> points;  // A, B, C
  bool extrapolated = false;     // some point lies outside the fitted range
};

// Keeps the points inside the closed box, in input order. Throws
// kInvalidArgument for an empty box.
Polyline RoiFilter(std::span<const Point2> points, const Roi& roi);

// S_0 = 0, S_i = S_{i-1} + |P_i - P_{i-1}|. Throws kEmptyPolyline.
std::vector<double> CumulativeArclength(std::span<const Point2> points);

// Points at arc lengths k * delta_s, k = 0 .. floor(S / delta_s), linearly
// interpolated inside the containing segment. Throws kDegeneratePolyline
// when the polyline has zero length and kInvalidArgument for delta_s <= 0.
Polyline Resample(std::span<const Point2> points, double delta_s);

// Least-squares cubic through the points via column-pivoted QR on the
// Vandermonde system. Rank-deficient data is refitted at the highest order
// the data supports and the missing coefficients are zero. Throws
// kTooFewPoints for fewer than two points.
CubicFit FitCubic(std::span<const Point2> points);

// Horner evaluation at each x.
Polyline EvalPoly(const CubicPoly& poly, std::span<const double> xs);

// `count` uniformly spaced samples of the polynomial over its range.
Polyline SamplePoly(const CubicPoly& poly, int count);

// Offsets the sampled curve by `distance` along its unit normal. Positive
// distances move to the left of the direction of increasing x.
Polyline OffsetAlongNormal(const CubicPoly& poly, double distance, int count);

// ROI filter, resample and fit one lane boundary. Returns nullopt when
// fewer than `min_points` survive either stage or the fit is degenerate.
std::optional<CubicPoly> FitLanePoints(std::span<const Point2> points,
                                       const Roi& roi, double delta_s,
                                       int min_points = 4);

// Combines the detected lanes into a centerline. A missing lane is
// synthesized one lane width away from the detected one along the curve
// normal, toward the track interior. Throws kDisjointRanges when both lanes
// are present but their x ranges do not overlap, and kInvalidArgument for a
// non-positive lane width.
CenterlineResult Centerline(const std::optional<CubicPoly>& left,
                            const std::optional<CubicPoly>& right,
                            double lane_width = kDefaultLaneWidth);

// A = (lead, p(lead)), B and C further along x by `spacing` each.
LookaheadPoints ExtractLookahead(const CubicPoly& center, double lead = 2.0,
                                 double spacing = 0.5);

// Coefficients of the cubic theta(t) with theta(0) = theta0,
// theta(t0) = theta_t, theta'(0) = rate0, theta'(t0) = rate_t. Throws
// kNonPositiveDuration.
std::array<double, 4> BoundaryCubic(double theta0, double theta_t,
                                    double rate0, double rate_t, double t0);

}  // namespace lanetrack

#endif  // LANETRACK_LANEFIT_H_
