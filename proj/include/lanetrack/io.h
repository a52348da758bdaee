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

// File formats: scenario JSON, trajectory CSV, metrics JSON/CSV and lane
// point CSV. See docs/formats.md for the schemas.

#ifndef LANETRACK_IO_H_
#define LANETRACK_IO_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lanetrack/metrics.h"
#include "lanetrack/simulator.h"

namespace lanetrack {

using Json = nlohmann::ordered_json;

// Track: either a fixture name ("oval") or an explicit object. Serialization
// always writes the explicit form.
Json TrackToJson(const Track& track);
Track TrackFromJson(const Json& j);

// Missing keys take their defaults; unknown keys are rejected. All failures
// throw kInvalidScenario naming the offending key.
Json ScenarioToJson(const Scenario& scenario);
Scenario ScenarioFromJson(const Json& j);

// Applies "dotted.key=value" to the full serialized scenario. The key must
// already exist. The value is parsed as JSON, falling back to a string.
void ApplyOverride(Json& scenario_json, std::string_view assignment);

Json ReadJsonFile(const std::filesystem::path& path);
Scenario LoadScenario(const std::filesystem::path& path,
                      const std::vector<std::string>& overrides = {});

// Trajectory CSV, one row per record, 9 significant digits.
inline constexpr std::string_view kSimLogHeader =
    "t,x,y,phi,v_cmd,omega_cmd,v_app,omega_app,x_t,y_t,phi_t,phi_t_dot,rho,"
    "alpha,beta,V1,V2,sat_flag,mode";

void WriteSimLogCsv(std::ostream& out, std::span<const StepRecord> records);
// Restores every column the CSV carries; throws kParseError on missing
// columns or malformed rows.
std::vector<StepRecord> ReadSimLogCsv(std::istream& in);

Json MetricsToJson(const MetricsReport& report);
// Pretty-printed with a trailing newline; the exact bytes `metrics` prints.
std::string MetricsJsonText(const MetricsReport& report);
void WriteMetricsCsv(std::ostream& out, const MetricsReport& report);

// Lane point CSV with header lane_id,x,y. lane_id is "left" or "right".
// A completely empty input yields two empty lanes.
LaneObservation ReadLaneCsv(std::istream& in);

std::string FormatNumber(double value);

}  // namespace lanetrack

#endif  // LANETRACK_IO_H_
