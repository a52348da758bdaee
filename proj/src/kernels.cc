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

#include "lanetrack/kernels.h"

#include <cmath>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lanetrack/error.h"

namespace lanetrack {
namespace {

// Vertex tangent headings by central differences; one-sided at the ends of
// open paths. A path whose last point repeats the first is treated as closed.
std::vector<double> VertexHeadings(std::span<const Point2> path) {
  const std::size_t n = path.size();
  const bool closed = n > 2 && path.front() == path.back();
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point2 prev = i > 0 ? path[i - 1] : path[i];
    Point2 next = i + 1 < n ? path[i + 1] : path[i];
    if (closed && i == 0) prev = path[n - 2];
    if (closed && i + 1 == n) next = path[1];
    const Point2 d = next - prev;
    h[i] = std::atan2(d.y, d.x);
  }
  return h;
}

void CheckPath(std::span<const Point2> path) {
  if (path.size() < 2) {
    throw Error(ErrorCode::kDegeneratePath, "path needs at least two points");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!(path[i] == path[i + 1])) return;
  }
  throw Error(ErrorCode::kDegeneratePath, "path has zero length");
}

PathProjection ProjectOne(Point2 p, std::span<const Point2> path,
                          const std::vector<double>& headings) {
  double best = std::numeric_limits<double>::infinity();
  PathProjection out;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    const Point2 a = path[j];
    const Point2 d = path[j + 1] - a;
    const double len2 = Dot(d, d);
    if (len2 == 0.0) continue;
    double t = Dot(p - a, d) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    const Point2 r = p - (a + t * d);
    const double dist2 = Dot(r, r);
    if (dist2 < best) {
      best = dist2;
      out.segment = j;
      out.t = t;
      out.cross_track = std::copysign(std::sqrt(dist2), Cross(d, r));
    }
  }
  const double h0 = headings[out.segment];
  const double h1 = headings[out.segment + 1];
  out.heading = WrapAngle(h0 + out.t * WrapAngle(h1 - h0));
  return out;
}

std::vector<SimLog> RunBatchImpl(std::span<const Scenario> scenarios,
                                 bool parallel) {
  std::vector<SimLog> logs(scenarios.size());
  std::vector<std::exception_ptr> errors(scenarios.size());
  const auto n = static_cast<long long>(scenarios.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long long i = 0; i < n; ++i) {
    try {
      logs[i] = Run(scenarios[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return logs;
}

}  // namespace

std::vector<PathProjection> ProjectOntoPath(std::span<const Point2> points,
                                            std::span<const Point2> path) {
  CheckPath(path);
  const std::vector<double> headings = VertexHeadings(path);
  std::vector<PathProjection> out(points.size());
  const auto n = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    out[i] = ProjectOne(points[i], path, headings);
  }
  return out;
}

std::vector<PathProjection> ProjectOntoPathSerial(std::span<const Point2> points,
                                                  std::span<const Point2> path) {
  CheckPath(path);
  const std::vector<double> headings = VertexHeadings(path);
  std::vector<PathProjection> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = ProjectOne(points[i], path, headings);
  }
  return out;
}

std::vector<SimLog> RunBatch(std::span<const Scenario> scenarios) {
  return RunBatchImpl(scenarios, true);
}

std::vector<SimLog> RunBatchSerial(std::span<const Scenario> scenarios) {
  return RunBatchImpl(scenarios, false);
}

int KernelThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lanetrack
