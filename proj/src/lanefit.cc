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

#include "lanetrack/lanefit.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "lanetrack/error.h"

namespace lanetrack {

std::string_view CenterlineModeName(CenterlineMode mode) {
  switch (mode) {
    case CenterlineMode::kBothLanes: return "both_lanes";
    case CenterlineMode::kLeftOnly: return "left_only";
    case CenterlineMode::kRightOnly: return "right_only";
    case CenterlineMode::kNone: return "none";
  }
  return "none";
}

Polyline RoiFilter(std::span<const Point2> points, const Roi& roi) {
  if (!(roi.x_min < roi.x_max) || !(roi.y_min < roi.y_max)) {
    throw Error(ErrorCode::kInvalidArgument, "region of interest is empty");
  }
  Polyline out;
  out.reserve(points.size());
  std::copy_if(points.begin(), points.end(), std::back_inserter(out),
               [&roi](Point2 p) { return roi.Contains(p); });
  return out;
}

std::vector<double> CumulativeArclength(std::span<const Point2> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kEmptyPolyline, "arc length of an empty polyline");
  }
  std::vector<double> s(points.size());
  s[0] = 0.0;
  for (size_t i = 1; i < points.size(); ++i) {
    s[i] = s[i - 1] + Distance(points[i - 1], points[i]);
  }
  return s;
}

Polyline Resample(std::span<const Point2> points, double delta_s) {
  if (!(delta_s > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "resampling interval must be positive");
  }
  if (points.size() < 2) {
    throw Error(ErrorCode::kDegeneratePolyline,
                "resampling needs at least two points");
  }
  const std::vector<double> s = CumulativeArclength(points);
  const double total = s.back();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kDegeneratePolyline,
                "resampling needs two distinct points");
  }
  const auto count = static_cast<size_t>(std::floor(total / delta_s)) + 1;
  Polyline out;
  out.reserve(count);
  size_t j = 0;
  const size_t last = points.size() - 1;
  for (size_t k = 0; k < count; ++k) {
    const double target = static_cast<double>(k) * delta_s;
    // Smallest j whose segment [S_j, S_j+1] reaches the target and has
    // non-zero length.
    while (j + 1 < last && (s[j + 1] < target || s[j + 1] == s[j])) ++j;
    const double seg = s[j + 1] - s[j];
    const double t = seg > 0.0 ? (target - s[j]) / seg : 0.0;
    out.push_back((1.0 - t) * points[j] + t * points[j + 1]);
  }
  return out;
}

namespace {

// Solves the least-squares problem for the given order; returns the rank the
// pivoted QR detected.
int SolveVandermonde(std::span<const Point2> points, int order,
                     Eigen::VectorXd& coeffs, double& residual_norm) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd v(n, order + 1);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double power = 1.0;
    for (int c = 0; c <= order; ++c) {
      v(i, c) = power;
      power *= points[i].x;
    }
    y(i) = points[i].y;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
  coeffs = qr.solve(y);
  residual_norm = (v * coeffs - y).norm();
  return static_cast<int>(qr.rank());
}

}  // namespace

CubicFit FitCubic(std::span<const Point2> points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::kTooFewPoints,
                "a fit needs at least two points, got " +
                    std::to_string(points.size()));
  }
  std::vector<double> xs(points.size());
  std::transform(points.begin(), points.end(), xs.begin(),
                 [](Point2 p) { return p.x; });
  std::sort(xs.begin(), xs.end());
  const auto distinct =
      std::unique(xs.begin(), xs.end()) - xs.begin();
  if (distinct < 2) {
    throw Error(ErrorCode::kTooFewPoints,
                "a fit needs at least two distinct x values");
  }

  CubicFit fit;
  fit.poly.x_lo = xs.front();
  fit.poly.x_hi = xs[distinct - 1];
  int order = std::min<int>(3, static_cast<int>(distinct) - 1);
  Eigen::VectorXd coeffs;
  for (;;) {
    const int rank = SolveVandermonde(points, order, coeffs, fit.residual_norm);
    if (rank >= order + 1 || order == 0) break;
    order = std::max(0, rank - 1);
  }
  fit.order = order;
  for (int c = 0; c <= order; ++c) fit.poly.a[c] = coeffs(c);
  return fit;
}

Polyline EvalPoly(const CubicPoly& poly, std::span<const double> xs) {
  Polyline out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back({x, poly(x)});
  return out;
}

Polyline SamplePoly(const CubicPoly& poly, int count) {
  std::vector<double> xs(count);
  const double step = count > 1 ? (poly.x_hi - poly.x_lo) / (count - 1) : 0.0;
  for (int i = 0; i < count; ++i) xs[i] = poly.x_lo + i * step;
  if (count > 1) xs.back() = poly.x_hi;
  return EvalPoly(poly, xs);
}

Polyline OffsetAlongNormal(const CubicPoly& poly, double distance, int count) {
  Polyline out = SamplePoly(poly, count);
  for (Point2& p : out) {
    const double slope = poly.Derivative(p.x);
    const double norm = std::hypot(1.0, slope);
    p = p + (distance / norm) * Point2{-slope, 1.0};
  }
  return out;
}

namespace {

CubicPoly AverageLanes(const CubicPoly& left, const CubicPoly& right) {
  const double lo = std::max(left.x_lo, right.x_lo);
  const double hi = std::min(left.x_hi, right.x_hi);
  if (!(lo < hi)) {
    throw Error(ErrorCode::kDisjointRanges,
                "lane x ranges do not overlap");
  }
  Polyline mid(kCenterlineGridSize);
  const double step = (hi - lo) / (kCenterlineGridSize - 1);
  for (int i = 0; i < kCenterlineGridSize; ++i) {
    const double x = i + 1 == kCenterlineGridSize ? hi : lo + i * step;
    mid[i] = {x, 0.5 * (left(x) + right(x))};
  }
  return FitCubic(mid).poly;
}

}  // namespace

std::optional<CubicPoly> FitLanePoints(std::span<const Point2> points,
                                       const Roi& roi, double delta_s,
                                       int min_points) {
  const Polyline kept = RoiFilter(points, roi);
  if (static_cast<int>(kept.size()) < min_points) return std::nullopt;
  try {
    const Polyline resampled = Resample(kept, delta_s);
    if (static_cast<int>(resampled.size()) < min_points) return std::nullopt;
    return FitCubic(resampled).poly;
  } catch (const Error&) {
    return std::nullopt;
  }
}

CenterlineResult Centerline(const std::optional<CubicPoly>& left,
                            const std::optional<CubicPoly>& right,
                            double lane_width) {
  if (!(lane_width > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lane width must be positive");
  }
  CenterlineResult result;
  result.lane_left = left;
  result.lane_right = right;
  if (left && right) {
    result.mode = CenterlineMode::kBothLanes;
  } else if (left) {
    result.mode = CenterlineMode::kLeftOnly;
    const Polyline pts = OffsetAlongNormal(*left, -lane_width, kCenterlineGridSize);
    result.lane_right = FitCubic(pts).poly;
  } else if (right) {
    result.mode = CenterlineMode::kRightOnly;
    const Polyline pts = OffsetAlongNormal(*right, lane_width, kCenterlineGridSize);
    result.lane_left = FitCubic(pts).poly;
  } else {
    return result;
  }
  result.centerline = AverageLanes(*result.lane_left, *result.lane_right);
  return result;
}

LookaheadPoints ExtractLookahead(const CubicPoly& center, double lead,
                                 double spacing) {
  if (!(lead > 0.0) || !(spacing > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "look-ahead lead and spacing must be positive");
  }
  LookaheadPoints out;
  for (int i = 0; i < 3; ++i) {
    const double x = lead + i * spacing;
    out.points[i] = {x, center(x)};
    if (!center.InRange(x)) out.extrapolated = true;
  }
  return out;
}

std::array<double, 4> BoundaryCubic(double theta0, double theta_t,
                                    double rate0, double rate_t, double t0) {
  if (!(t0 > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDuration, "duration must be positive");
  }
  // The end-rate term enters a3 as (rate0 + rate_t); with the difference
  // instead, theta'(t0) misses rate_t by 2 * rate_t.
  const double delta = theta_t - theta0;
  return {theta0, rate0,
          3.0 / (t0 * t0) * delta - 2.0 / t0 * rate0 - rate_t / t0,
          -2.0 / (t0 * t0 * t0) * delta + (rate0 + rate_t) / (t0 * t0)};
}

}  // namespace lanetrack
