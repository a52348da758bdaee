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

// Desk-scale race tracks built from straight and circular segments. The
// reference path is the lane centre; boundaries lie half a lane width to
// either side.

#ifndef LANETRACK_TRACK_H_
#define LANETRACK_TRACK_H_

#include <string>
#include <string_view>
#include <vector>

#include "lanetrack/geometry.h"
#include "lanetrack/model.h"

namespace lanetrack {

enum class BoundaryStyle { kSolid, kDotted, kZebraClutter };

struct Boundary {
  BoundaryStyle style = BoundaryStyle::kSolid;
  double dash_len = 1.0;  // dotted only
  double gap_len = 1.0;   // dotted only

  // True when a boundary point `local_s` metres into its segment is painted.
  bool Painted(double local_s) const;
};

enum class SegmentType { kLine, kArc };

struct TrackSegment {
  SegmentType type = SegmentType::kLine;
  double length = 0.0;  // lines
  double radius = 0.0;  // arcs
  double angle = 0.0;   // arcs, signed sweep; positive turns left
  Boundary left;
  Boundary right;

  double ArcLength() const;
};

struct Track {
  Pose start;
  bool closed = false;
  double lane_width = 3.5;
  std::vector<TrackSegment> segments;
};

struct PathSample {
  Point2 point;
  double heading = 0.0;
  double curvature = 0.0;
  int segment = 0;
  double local_s = 0.0;
};

// Precomputed geometry of a validated track.
class TrackGeometry {
 public:
  // Throws kInvalidScenario for an empty, zero-length or non-closing track.
  explicit TrackGeometry(Track track, double polyline_spacing = 0.05);

  const Track& track() const { return track_; }
  double length() const { return length_; }
  bool closed() const { return track_.closed; }

  // Closed tracks wrap s; open tracks extend along the end tangents.
  PathSample At(double s) const;
  Point2 LeftBoundary(const PathSample& sample) const;
  Point2 RightBoundary(const PathSample& sample) const;

  // Dense centreline polyline including every segment joint. Closed tracks
  // repeat the start point at the end.
  const Polyline& reference() const { return reference_; }
  const std::vector<double>& reference_s() const { return reference_s_; }

  // Arc length of the closest reference point. With `window` > 0 only
  // reference points within `window` of `s_hint` (wrapped) are considered.
  double Project(Point2 p, double s_hint = 0.0, double window = 0.0) const;

  double WrapS(double s) const;

 private:
  Track track_;
  std::vector<double> segment_start_s_;
  std::vector<Pose> segment_start_pose_;
  double length_ = 0.0;
  Polyline reference_;
  std::vector<double> reference_s_;
  double spacing_ = 0.05;
};

// Shipped fixtures: "straight" (50 m), "circle" (R = 15 m), "oval" (two
// 30 m straights joined by R = 10 m semicircles), "figure_course" (rounded
// rectangle with dotted and zebra zones) and "blind_straight" (a straight
// whose markings vanish for a stretch). Throws kInvalidScenario for unknown
// names.
Track MakeFixtureTrack(std::string_view name);
std::vector<std::string> FixtureTrackNames();

std::string_view BoundaryStyleName(BoundaryStyle style);

}  // namespace lanetrack

#endif  // LANETRACK_TRACK_H_
