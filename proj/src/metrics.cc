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

#include "lanetrack/metrics.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lanetrack/error.h"
#include "lanetrack/kernels.h"

namespace lanetrack {

std::string_view SpeedDeviationModeName(SpeedDeviationMode mode) {
  return mode == SpeedDeviationMode::kMax ? "max" : "mean_relative";
}

double CrossTrack(Point2 point, std::span<const Point2> path) {
  const Point2 pts[] = {point};
  return ProjectOntoPathSerial(pts, path)[0].cross_track;
}

MetricsReport ComputeMetrics(std::span<const StepRecord> records,
                             std::span<const Point2> path, double v_t,
                             const MetricsOptions& options) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyLog, "metrics need at least one log record");
  }
  const std::size_t n = records.size();
  std::vector<Point2> positions(n);
  for (std::size_t i = 0; i < n; ++i) positions[i] = records[i].pose.position();
  const std::vector<PathProjection> proj = ProjectOntoPath(positions, path);

  MetricsReport m;
  m.deviation_mode = options.deviation;
  m.completion_time = records.back().t;

  double distance = 0.0;
  double abs_omega = 0.0;
  double abs_lateral = 0.0;
  double abs_heading = 0.0;
  double turned = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    abs_omega += std::abs(records[i].applied.omega);
    abs_lateral += std::abs(proj[i].cross_track);
    abs_heading += std::abs(WrapAngle(records[i].pose.phi - proj[i].heading));
    if (i > 0) {
      distance += Distance(positions[i - 1], positions[i]);
      turned += std::abs(WrapAngle(records[i].pose.phi - records[i - 1].pose.phi));
    }
  }
  const auto count = static_cast<double>(n);
  m.avg_linear_speed = m.completion_time > 0.0 ? distance / m.completion_time : 0.0;
  m.avg_angular_speed = abs_omega / count;
  m.mae_lateral = abs_lateral / count;
  m.mae_orientation = abs_heading / count;
  m.accumulated_orientation = turned;

  auto first = std::find_if(records.begin(), records.end(), [&](const StepRecord& r) {
    return r.t >= options.window_start;
  });
  if (first == records.end()) first = records.begin();
  m.speed_window_start = first->t;
  double sq = 0.0;
  double abs_sum = 0.0;
  double worst = 0.0;
  std::size_t window = 0;
  for (auto it = first; it != records.end(); ++it, ++window) {
    const double dv = it->applied.v - v_t;
    sq += dv * dv;
    abs_sum += std::abs(dv);
    worst = std::max(worst, std::abs(dv));
  }
  const auto wn = static_cast<double>(window);
  m.rmse_linear_speed = std::sqrt(sq / wn);
  m.linear_speed_deviation_pct =
      100.0 * (options.deviation == SpeedDeviationMode::kMax ? worst : abs_sum / wn) /
      v_t;
  return m;
}

}  // namespace lanetrack
