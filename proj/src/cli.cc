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

#include "lanetrack/cli.h"

#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lanetrack/error.h"
#include "lanetrack/io.h"
#include "lanetrack/kernels.h"
#include "lanetrack/lanefit.h"

namespace lanetrack {
namespace fs = std::filesystem;
namespace {

// Samples written for the fitted centerline in `fit` output.
constexpr int kFitSamples = 64;

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << contents) || !(f.flush())) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
}

std::string ReadFile(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());
}

// One plot series: header line then one row per record.
template <typename Row>
void WriteSeries(const fs::path& path, const char* header,
                 std::span<const StepRecord> records, Row row) {
  std::ostringstream out;
  out << header << '\n';
  for (const StepRecord& r : records) {
    bool first = true;
    for (double v : row(r)) {
      out << (first ? "" : ",") << FormatNumber(v);
      first = false;
    }
    out << '\n';
  }
  WriteFile(path, out.str());
}

void WritePlotData(const fs::path& dir, std::span<const StepRecord> records,
                   const Polyline& reference) {
  EnsureDir(dir);
  using V = std::vector<double>;
  WriteSeries(dir / "linear_speed.csv", "t,v_cmd,v_app", records,
              [](const StepRecord& r) { return V{r.t, r.cmd.v, r.applied.v}; });
  WriteSeries(dir / "angular_speed.csv", "t,omega_cmd,omega_app", records,
              [](const StepRecord& r) { return V{r.t, r.cmd.omega, r.applied.omega}; });
  WriteSeries(dir / "x_position.csv", "t,x,x_t", records,
              [](const StepRecord& r) { return V{r.t, r.pose.x, r.target.x}; });
  WriteSeries(dir / "y_position.csv", "t,y,y_t", records,
              [](const StepRecord& r) { return V{r.t, r.pose.y, r.target.y}; });
  WriteSeries(dir / "orientation.csv", "t,phi,phi_t", records,
              [](const StepRecord& r) { return V{r.t, r.pose.phi, r.target.phi}; });
  WriteSeries(dir / "trajectory_xy.csv", "x,y", records,
              [](const StepRecord& r) { return V{r.pose.x, r.pose.y}; });
  std::ostringstream ref;
  ref << "x,y\n";
  for (const Point2& p : reference) ref << FormatNumber(p.x) << ',' << FormatNumber(p.y) << '\n';
  WriteFile(dir / "reference_path.csv", ref.str());
}

int ExitFor(const SimLog& log) {
  return log.termination == Termination::kTimeout ? kExitTimeout : kExitOk;
}

void PrintRunSummary(std::ostream& out, const std::string& label, const SimLog& log) {
  const double t_end = log.records.empty() ? 0.0 : log.records.back().t;
  out << label << "termination: " << TerminationName(log.termination)
      << ", steps: " << log.records.size() << ", t_final: " << FormatNumber(t_end) << '\n';
}

Json PolyToJson(const CubicPoly& p) {
  return {{"coefficients", {p.a[0], p.a[1], p.a[2], p.a[3]}},
          {"x_range", {p.x_lo, p.x_hi}}};
}

Json OptionalPoly(const std::optional<CubicPoly>& p) {
  return p ? PolyToJson(*p) : Json(nullptr);
}

int CmdSimulate(const fs::path& scenario_path, const fs::path& out_dir,
                const std::vector<std::string>& overrides, std::ostream& out) {
  const Scenario scenario = LoadScenario(scenario_path, overrides);
  const SimLog log = Run(scenario);
  const MetricsReport m = WriteRunOutputs(out_dir, scenario, log);
  PrintRunSummary(out, "", log);
  out << "mae_lateral: " << FormatNumber(m.mae_lateral)
      << ", mae_orientation: " << FormatNumber(m.mae_orientation) << '\n';
  return ExitFor(log);
}

int CmdFit(const fs::path& in_path, double delta_s, double lane_width,
           const fs::path& out_path, std::ostream& out) {
  std::istringstream in(ReadFile(in_path));
  const LaneObservation lanes = ReadLaneCsv(in);
  const Roi roi;
  const auto left = FitLanePoints(lanes.left, roi, delta_s);
  const auto right = FitLanePoints(lanes.right, roi, delta_s);
  const CenterlineResult c = Centerline(left, right, lane_width);

  Json j;
  j["mode"] = CenterlineModeName(c.mode);
  j["delta_s"] = delta_s;
  j["lane_left"] = OptionalPoly(c.lane_left);
  j["lane_right"] = OptionalPoly(c.lane_right);
  j["centerline"] = OptionalPoly(c.centerline);
  Json samples = Json::array();
  if (c.centerline) {
    for (const Point2& p : SamplePoly(*c.centerline, kFitSamples)) samples.push_back({p.x, p.y});
  }
  j["centerline_samples"] = std::move(samples);
  if (!out_path.empty()) WriteFile(out_path, j.dump(2) + "\n");

  out << "mode: " << CenterlineModeName(c.mode) << '\n';
  if (c.centerline) {
    out << "centerline:";
    for (double a : c.centerline->a) out << ' ' << FormatNumber(a);
    out << '\n';
  }
  return kExitOk;
}

int CmdMetrics(const fs::path& log_path, const fs::path& track_path,
               std::optional<double> v_t, std::ostream& out) {
  std::istringstream in(ReadFile(log_path));
  const std::vector<StepRecord> records = ReadSimLogCsv(in);
  const Json j = ReadJsonFile(track_path);
  Track track;
  if (j.is_object() && j.contains("track")) {
    const Scenario s = ScenarioFromJson(j);
    track = s.track;
    if (!v_t) v_t = s.v_t;
  } else {
    track = TrackFromJson(j);
  }
  if (!v_t) {
    throw Error(ErrorCode::kInvalidArgument,
                "--v-t is required when --track is not a scenario file");
  }
  const TrackGeometry geometry(track);
  out << MetricsJsonText(ComputeMetrics(records, geometry.reference(), *v_t));
  return kExitOk;
}

struct BatchEntry {
  std::string name;
  Scenario scenario;
};

int CmdBatch(const fs::path& batch_path, const fs::path& out_dir, bool serial,
             std::ostream& out) {
  const Json j = ReadJsonFile(batch_path);
  if (!j.is_object() || !j.contains("runs") || !j.at("runs").is_array()) {
    throw Error(ErrorCode::kInvalidScenario, "batch file needs a 'runs' array");
  }
  const fs::path base = batch_path.parent_path();
  std::vector<BatchEntry> entries;
  std::set<std::string> names;
  for (const Json& run : j.at("runs")) {
    if (!run.is_object() || !run.contains("name") || !run.contains("scenario") ||
        !run.at("name").is_string() || !run.at("scenario").is_string()) {
      throw Error(ErrorCode::kInvalidScenario,
                  "each batch run needs string 'name' and 'scenario' keys");
    }
    BatchEntry e;
    e.name = run.at("name").get<std::string>();
    if (e.name.empty() || e.name.find('/') != std::string::npos || !names.insert(e.name).second) {
      throw Error(ErrorCode::kInvalidScenario, "bad or duplicate run name '" + e.name + "'");
    }
    std::vector<std::string> overrides;
    if (run.contains("set")) overrides = run.at("set").get<std::vector<std::string>>();
    e.scenario = LoadScenario(base / run.at("scenario").get<std::string>(), overrides);
    entries.push_back(std::move(e));
  }

  std::vector<Scenario> scenarios;
  for (const auto& e : entries) scenarios.push_back(e.scenario);
  const std::vector<SimLog> logs = serial ? RunBatchSerial(scenarios) : RunBatch(scenarios);

  int status = kExitOk;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    WriteRunOutputs(out_dir / entries[i].name, entries[i].scenario, logs[i]);
    PrintRunSummary(out, entries[i].name + ": ", logs[i]);
    if (ExitFor(logs[i]) == kExitTimeout) status = kExitTimeout;
  }
  return status;
}

}  // namespace

MetricsReport WriteRunOutputs(const fs::path& dir, const Scenario& scenario,
                              const SimLog& log) {
  EnsureDir(dir);
  std::ostringstream csv;
  WriteSimLogCsv(csv, log.records);
  WriteFile(dir / "trajectory.csv", csv.str());

  // Metrics from the rounded log so `metrics` on trajectory.csv agrees.
  std::istringstream back(csv.str());
  const std::vector<StepRecord> rounded = ReadSimLogCsv(back);
  const TrackGeometry geometry(scenario.track);
  const MetricsReport m = ComputeMetrics(rounded, geometry.reference(), scenario.v_t);
  WriteFile(dir / "metrics.json", MetricsJsonText(m));
  std::ostringstream mcsv;
  WriteMetricsCsv(mcsv, m);
  WriteFile(dir / "metrics.csv", mcsv.str());
  WritePlotData(dir / "plotdata", rounded, geometry.reference());
  return m;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lane tracking controller simulator"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir;
  std::vector<std::string> overrides;
  auto* sim = app.add_subcommand("simulate", "Run one scenario");
  sim->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  sim->add_option("--out", out_dir, "Output directory")->required();
  sim->add_option("--set", overrides, "Override, dotted.key=value (repeatable)");

  std::string fit_in, fit_out;
  double delta_s = kDefaultResampleSpacing;
  double lane_width = kDefaultLaneWidth;
  auto* fit = app.add_subcommand("fit", "Fit lanes and centerline from a lane CSV");
  fit->add_option("--in", fit_in, "CSV with lane_id,x,y")->required();
  fit->add_option("--delta-s", delta_s, "Resampling spacing (m)")
      ->check(CLI::PositiveNumber);
  fit->add_option("--lane-width", lane_width, "Lane width for synthesis (m)")
      ->check(CLI::PositiveNumber);
  fit->add_option("--out", fit_out, "Output JSON");

  std::string log_path, track_path;
  std::optional<double> v_t;
  auto* met = app.add_subcommand("metrics", "Compute metrics for a trajectory CSV");
  met->add_option("--log", log_path, "trajectory.csv")->required();
  met->add_option("--track", track_path, "Scenario or track JSON")->required();
  met->add_option("--v-t", v_t, "Target speed (m/s)")->check(CLI::PositiveNumber);

  std::string batch_path, batch_out;
  bool serial = false;
  auto* batch = app.add_subcommand("batch", "Run the scenarios of a batch file");
  batch->add_option("--file", batch_path, "Batch JSON")->required();
  batch->add_option("--out", batch_out, "Output directory")->required();
  batch->add_flag("--serial", serial, "Run on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sim) return CmdSimulate(scenario_path, out_dir, overrides, out);
    if (*fit) return CmdFit(fit_in, delta_s, lane_width, fit_out, out);
    if (*met) return CmdMetrics(log_path, track_path, v_t, out);
    if (*batch) return CmdBatch(batch_path, batch_out, serial, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace lanetrack
