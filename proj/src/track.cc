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

#include "lanetrack/track.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "lanetrack/error.h"

namespace lanetrack {

bool Boundary::Painted(double local_s) const {
  switch (style) {
    case BoundaryStyle::kSolid:
    case BoundaryStyle::kZebraClutter:
      return true;
    case BoundaryStyle::kDotted: {
      const double period = dash_len + gap_len;
      if (!(period > 0.0)) return false;
      const double phase = local_s - std::floor(local_s / period) * period;
      return phase < dash_len;
    }
  }
  return true;
}

double TrackSegment::ArcLength() const {
  return type == SegmentType::kLine ? length : radius * std::abs(angle);
}

std::string_view BoundaryStyleName(BoundaryStyle style) {
  switch (style) {
    case BoundaryStyle::kSolid: return "solid";
    case BoundaryStyle::kDotted: return "dotted";
    case BoundaryStyle::kZebraClutter: return "zebra_clutter";
  }
  return "solid";
}

namespace {

Pose AdvanceAlong(const Pose& start, const TrackSegment& seg, double ds) {
  Pose p = start;
  if (seg.type == SegmentType::kLine) {
    p.x += ds * std::cos(start.phi);
    p.y += ds * std::sin(start.phi);
    return p;
  }
  const double kappa = (seg.angle >= 0.0 ? 1.0 : -1.0) / seg.radius;
  const double heading = start.phi + kappa * ds;
  p.x += (std::sin(heading) - std::sin(start.phi)) / kappa;
  p.y -= (std::cos(heading) - std::cos(start.phi)) / kappa;
  p.phi = heading;
  return p;
}

}  // namespace

TrackGeometry::TrackGeometry(Track track, double polyline_spacing)
    : track_(std::move(track)), spacing_(polyline_spacing) {
  if (track_.segments.empty()) {
    throw Error(ErrorCode::kInvalidScenario, "track has no segments");
  }
  if (!(track_.lane_width > 0.0)) {
    throw Error(ErrorCode::kInvalidScenario, "lane width must be positive");
  }
  Pose pose = track_.start;
  for (const TrackSegment& seg : track_.segments) {
    const bool valid = seg.type == SegmentType::kLine
                           ? seg.length > 0.0
                           : seg.radius > 0.0 && seg.angle != 0.0;
    if (!valid) {
      throw Error(ErrorCode::kInvalidScenario,
                  "segments need positive length or radius and a non-zero sweep");
    }
    segment_start_s_.push_back(length_);
    segment_start_pose_.push_back(pose);
    length_ += seg.ArcLength();
    pose = AdvanceAlong(pose, seg, seg.ArcLength());
  }
  if (track_.closed) {
    const double gap = std::hypot(pose.x - track_.start.x, pose.y - track_.start.y);
    const double turn = std::abs(WrapAngle(pose.phi - track_.start.phi));
    if (gap > 1e-6 || turn > 1e-9) {
      throw Error(ErrorCode::kInvalidScenario, "closed track does not return to its start");
    }
  }

  for (size_t i = 0; i < track_.segments.size(); ++i) {
    const double seg_len = track_.segments[i].ArcLength();
    const int n = std::max(1, static_cast<int>(std::ceil(seg_len / spacing_)));
    for (int k = 0; k < n; ++k) {
      const double ds = seg_len * k / n;
      reference_.push_back(
          AdvanceAlong(segment_start_pose_[i], track_.segments[i], ds).position());
      reference_s_.push_back(segment_start_s_[i] + ds);
    }
  }
  reference_.push_back(track_.closed ? track_.start.position() : pose.position());
  reference_s_.push_back(length_);
}

double TrackGeometry::WrapS(double s) const {
  if (!track_.closed) return s;
  double w = std::fmod(s, length_);
  if (w < 0.0) w += length_;
  return w;
}

PathSample TrackGeometry::At(double s) const {
  const double ws = WrapS(s);
  PathSample out;
  if (!track_.closed && ws < 0.0) {
    out.segment = 0;
  } else {
    const auto it = std::upper_bound(segment_start_s_.begin(),
                                     segment_start_s_.end(), ws);
    out.segment = static_cast<int>(it - segment_start_s_.begin()) - 1;
  }
  out.local_s = ws - segment_start_s_[out.segment];
  const TrackSegment& seg = track_.segments[out.segment];
  Pose pose;
  if (!track_.closed && ws > length_) {
    // Beyond the end of an open track: continue along the final tangent.
    const TrackSegment& last = track_.segments.back();
    const Pose end = AdvanceAlong(segment_start_pose_.back(), last, last.ArcLength());
    TrackSegment straight;
    straight.type = SegmentType::kLine;
    straight.length = 1.0;
    pose = AdvanceAlong(end, straight, ws - length_);
  } else if (!track_.closed && ws < 0.0) {
    TrackSegment straight;
    straight.type = SegmentType::kLine;
    straight.length = 1.0;
    pose = AdvanceAlong(track_.start, straight, ws);
  } else {
    pose = AdvanceAlong(segment_start_pose_[out.segment], seg, out.local_s);
    if (seg.type == SegmentType::kArc) {
      out.curvature = (seg.angle >= 0.0 ? 1.0 : -1.0) / seg.radius;
    }
  }
  out.point = pose.position();
  out.heading = WrapAngle(pose.phi);
  return out;
}

Point2 TrackGeometry::LeftBoundary(const PathSample& sample) const {
  const double h = 0.5 * track_.lane_width;
  return sample.point + h * Point2{-std::sin(sample.heading), std::cos(sample.heading)};
}

Point2 TrackGeometry::RightBoundary(const PathSample& sample) const {
  const double h = 0.5 * track_.lane_width;
  return sample.point + h * Point2{std::sin(sample.heading), -std::cos(sample.heading)};
}

double TrackGeometry::Project(Point2 p, double s_hint, double window) const {
  double best = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  // Segment-wise projection onto the dense reference.
  for (size_t i = 0; i + 1 < reference_.size(); ++i) {
    if (window > 0.0) {
      double ds = reference_s_[i] - s_hint;
      if (track_.closed) ds = std::remainder(ds, length_);
      if (std::abs(ds) > window) continue;
    }
    const Point2 a = reference_[i];
    const Point2 d = reference_[i + 1] - a;
    const double len2 = Dot(d, d);
    const double t = len2 > 0.0 ? std::clamp(Dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
    const double dist = Distance(p, a + t * d);
    if (dist < best) {
      best = dist;
      best_s = reference_s_[i] + t * (reference_s_[i + 1] - reference_s_[i]);
    }
  }
  if (!std::isfinite(best)) return Project(p);
  return WrapS(best_s);
}

namespace {

TrackSegment Line(double length, Boundary left = {}, Boundary right = {}) {
  TrackSegment s;
  s.type = SegmentType::kLine;
  s.length = length;
  s.left = left;
  s.right = right;
  return s;
}

TrackSegment Arc(double radius, double angle, Boundary left = {},
                 Boundary right = {}) {
  TrackSegment s;
  s.type = SegmentType::kArc;
  s.radius = radius;
  s.angle = angle;
  s.left = left;
  s.right = right;
  return s;
}

Boundary Dotted(double dash, double gap) {
  return {BoundaryStyle::kDotted, dash, gap};
}

Boundary Zebra() { return {BoundaryStyle::kZebraClutter, 1.0, 1.0}; }

}  // namespace

std::vector<std::string> FixtureTrackNames() {
  return {"straight", "circle", "oval", "figure_course", "blind_straight"};
}

Track MakeFixtureTrack(std::string_view name) {
  Track t;
  t.lane_width = 3.5;
  if (name == "straight") {
    t.segments = {Line(50.0)};
  } else if (name == "circle") {
    t.closed = true;
    t.segments = {Arc(15.0, kTwoPi)};
  } else if (name == "oval") {
    t.closed = true;
    t.segments = {Line(30.0), Arc(10.0, kPi), Line(30.0), Arc(10.0, kPi)};
  } else if (name == "figure_course") {
    t.closed = true;
    t.segments = {
        Line(24.0),
        Arc(12.0, kPi / 2, Dotted(1.5, 1.5), {}),
        Line(16.0, Zebra(), Zebra()),
        Arc(12.0, kPi / 2),
        Line(24.0, Dotted(2.0, 2.0), Dotted(2.0, 2.0)),
        Arc(12.0, kPi / 2, {}, Dotted(1.0, 2.0)),
        Line(16.0),
        Arc(12.0, kPi / 2),
    };
  } else if (name == "blind_straight") {
    t.segments = {Line(30.0), Line(30.0, Dotted(1.0, 29.0), Dotted(1.0, 29.0)),
                  Line(40.0)};
  } else {
    throw Error(ErrorCode::kInvalidScenario,
                "unknown track fixture '" + std::string(name) + "'");
  }
  return t;
}

}  // namespace lanetrack
