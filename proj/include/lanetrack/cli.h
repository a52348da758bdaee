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

#ifndef LANETRACK_CLI_H_
#define LANETRACK_CLI_H_

#include <filesystem>
#include <iosfwd>

#include "lanetrack/metrics.h"
#include "lanetrack/simulator.h"

namespace lanetrack {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitTimeout = 2;

// Entry point behind the `lanetrack` binary. Subcommands: simulate, fit,
// metrics, batch.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Writes trajectory.csv, metrics.json, metrics.csv and plotdata/ into `dir`.
// Metrics are computed from the log as written, so re-reading trajectory.csv
// reproduces them exactly.
MetricsReport WriteRunOutputs(const std::filesystem::path& dir,
                              const Scenario& scenario, const SimLog& log);

}  // namespace lanetrack

#endif  // LANETRACK_CLI_H_
