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

// Data-parallel kernels. Each has an OpenMP implementation and a serial
// reference with identical per-element arithmetic, so the two produce
// bitwise-equal results; tests compare them and bench/ times them.

#ifndef LANETRACK_KERNELS_H_
#define LANETRACK_KERNELS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "lanetrack/geometry.h"
#include "lanetrack/simulator.h"

namespace lanetrack {

struct PathProjection {
  double cross_track = 0.0;  // signed, positive to the left of the path
  double heading = 0.0;      // path tangent at the foot point
  std::size_t segment = 0;
  double t = 0.0;            // position of the foot on the segment, [0, 1]
};

// Projects every point onto its nearest path segment. Throws kDegeneratePath
// for paths with fewer than two points or zero length.
std::vector<PathProjection> ProjectOntoPath(std::span<const Point2> points,
                                            std::span<const Point2> path);
std::vector<PathProjection> ProjectOntoPathSerial(std::span<const Point2> points,
                                                  std::span<const Point2> path);

// Runs independent scenarios; results are in input order. Each run is
// sequential and deterministic, so both variants return identical logs.
std::vector<SimLog> RunBatch(std::span<const Scenario> scenarios);
std::vector<SimLog> RunBatchSerial(std::span<const Scenario> scenarios);

// Number of threads the OpenMP kernels will use (1 without OpenMP).
int KernelThreads();

}  // namespace lanetrack

#endif  // LANETRACK_KERNELS_H_
