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

#include "lanetrack/io.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "lanetrack/error.h"

namespace lanetrack {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidScenario, what);
}

template <typename E>
using NameTable = std::vector<std::pair<E, std::string_view>>;

const NameTable<SimMode> kModes = {{SimMode::kPresetPath, "preset_path"},
                                   {SimMode::kVision, "vision"}};
const NameTable<ControllerKind> kControllers = {
    {ControllerKind::kProposed, "proposed"},
    {ControllerKind::kComparative, "comparative"}};
const NameTable<AngularLawForm> kLawForms = {
    {AngularLawForm::kConsistent, "consistent"},
    {AngularLawForm::kAsPrinted, "as_printed"}};
const NameTable<Integrator> kIntegrators = {{Integrator::kEuler, "euler"},
                                            {Integrator::kExactArc, "exact_arc"}};
const NameTable<BoundaryStyle> kStyles = {
    {BoundaryStyle::kSolid, "solid"},
    {BoundaryStyle::kDotted, "dotted"},
    {BoundaryStyle::kZebraClutter, "zebra_clutter"}};
const NameTable<SegmentType> kSegmentTypes = {{SegmentType::kLine, "line"},
                                              {SegmentType::kArc, "arc"}};
const NameTable<RecordMode> kRecordModes = {
    {RecordMode::kPreset, "preset"},
    {RecordMode::kBothLanes, "both_lanes"},
    {RecordMode::kLeftOnly, "left_only"},
    {RecordMode::kRightOnly, "right_only"},
    {RecordMode::kNone, "none"}};

template <typename E>
std::string_view NameOf(const NameTable<E>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return table.front().second;
}

template <typename E>
bool Lookup(const NameTable<E>& table, std::string_view name, E& out) {
  for (const auto& [e, n] : table) {
    if (n == name) {
      out = e;
      return true;
    }
  }
  return false;
}

// Reads one JSON object, remembering which keys were consumed so that
// leftovers can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) Invalid(Where() + " must be an object");
  }

  bool Has(const std::string& key) const { return j_.contains(key); }

  void Number(const std::string& key, double& dst) {
    if (const Json* v = Take(key)) {
      if (!v->is_number()) Invalid(Where(key) + " must be a number");
      dst = v->get<double>();
    }
  }

  void Integer(const std::string& key, int& dst) {
    if (const Json* v = Take(key)) {
      if (!v->is_number_integer()) Invalid(Where(key) + " must be an integer");
      dst = v->get<int>();
    }
  }

  void Seed(const std::string& key, std::uint64_t& dst) {
    if (const Json* v = Take(key)) {
      if (!v->is_number_unsigned()) {
        Invalid(Where(key) + " must be a non-negative integer");
      }
      dst = v->get<std::uint64_t>();
    }
  }

  void Bool(const std::string& key, bool& dst) {
    if (const Json* v = Take(key)) {
      if (!v->is_boolean()) Invalid(Where(key) + " must be true or false");
      dst = v->get<bool>();
    }
  }

  template <typename E>
  void Enum(const std::string& key, const NameTable<E>& table, E& dst) {
    if (const Json* v = Take(key)) {
      if (!v->is_string() || !Lookup(table, v->get<std::string>(), dst)) {
        std::string names;
        for (const auto& [e, n] : table) names += (names.empty() ? "" : ", ") + std::string(n);
        Invalid(Where(key) + " must be one of: " + names);
      }
    }
  }

  const Json* Take(const std::string& key) {
    if (!j_.contains(key)) return nullptr;
    seen_.insert(key);
    return &j_.at(key);
  }

  std::string Where(const std::string& key = "") const {
    if (key.empty()) return path_.empty() ? "scenario" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

  void Finish() const {
    for (const auto& item : j_.items()) {
      if (!seen_.count(item.key())) Invalid("unknown key '" + Where(item.key()) + "'");
    }
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

Json PoseToJson(const Pose& p) { return {{"x", p.x}, {"y", p.y}, {"phi", p.phi}}; }

Pose PoseFromJson(const Json& j, const std::string& path) {
  Pose p;
  ObjectReader r(j, path);
  r.Number("x", p.x);
  r.Number("y", p.y);
  r.Number("phi", p.phi);
  r.Finish();
  return p;
}

Json BoundaryToJson(const Boundary& b) {
  return {{"style", NameOf(kStyles, b.style)},
          {"dash_len", b.dash_len},
          {"gap_len", b.gap_len}};
}

Boundary BoundaryFromJson(const Json& j, const std::string& path) {
  Boundary b;
  ObjectReader r(j, path);
  r.Enum("style", kStyles, b.style);
  r.Number("dash_len", b.dash_len);
  r.Number("gap_len", b.gap_len);
  r.Finish();
  return b;
}

Track FixtureOrThrow(const std::string& name, const std::string& path) {
  try {
    return MakeFixtureTrack(name);
  } catch (const Error&) {
    std::string names;
    for (const auto& n : FixtureTrackNames()) names += (names.empty() ? "" : ", ") + n;
    Invalid(path + ": unknown fixture '" + name + "' (known: " + names + ")");
  }
}

Track TrackFromJsonAt(const Json& j, const std::string& path) {
  if (j.is_string()) return FixtureOrThrow(j.get<std::string>(), path);
  ObjectReader r(j, path);
  if (const Json* f = r.Take("fixture")) {
    if (!f->is_string()) Invalid(r.Where("fixture") + " must be a string");
    r.Finish();
    return FixtureOrThrow(f->get<std::string>(), path);
  }
  Track t;
  if (const Json* s = r.Take("start")) t.start = PoseFromJson(*s, r.Where("start"));
  r.Bool("closed", t.closed);
  r.Number("lane_width", t.lane_width);
  const Json* segs = r.Take("segments");
  if (!segs || !segs->is_array()) Invalid(r.Where("segments") + " must be an array");
  for (std::size_t i = 0; i < segs->size(); ++i) {
    const std::string where = r.Where("segments") + "[" + std::to_string(i) + "]";
    ObjectReader sr((*segs)[i], where);
    TrackSegment seg;
    sr.Enum("type", kSegmentTypes, seg.type);
    sr.Number("length", seg.length);
    sr.Number("radius", seg.radius);
    sr.Number("angle", seg.angle);
    if (const Json* b = sr.Take("left")) seg.left = BoundaryFromJson(*b, where + ".left");
    if (const Json* b = sr.Take("right")) seg.right = BoundaryFromJson(*b, where + ".right");
    sr.Finish();
    t.segments.push_back(seg);
  }
  r.Finish();
  return t;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double ParseDouble(const std::string& text, std::size_t line, const std::string& column) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": column '" +
                                            column + "' is not a number: '" + text + "'");
  }
  return v;
}

}  // namespace

std::string FormatNumber(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

Json TrackToJson(const Track& track) {
  Json segs = Json::array();
  for (const TrackSegment& s : track.segments) {
    Json js = {{"type", NameOf(kSegmentTypes, s.type)}};
    if (s.type == SegmentType::kLine) {
      js["length"] = s.length;
    } else {
      js["radius"] = s.radius;
      js["angle"] = s.angle;
    }
    js["left"] = BoundaryToJson(s.left);
    js["right"] = BoundaryToJson(s.right);
    segs.push_back(std::move(js));
  }
  return {{"start", PoseToJson(track.start)},
          {"closed", track.closed},
          {"lane_width", track.lane_width},
          {"segments", std::move(segs)}};
}

Track TrackFromJson(const Json& j) { return TrackFromJsonAt(j, "track"); }

Json ScenarioToJson(const Scenario& s) {
  const Roi& roi = s.sensor.roi;
  Json j;
  j["track"] = TrackToJson(s.track);
  j["mode"] = NameOf(kModes, s.mode);
  j["v_t"] = s.v_t;
  j["gains"] = {{"lambda_v", s.gains.lambda_v},
                {"lambda_a", s.gains.lambda_a},
                {"k1", s.gains.k1},
                {"k2", s.gains.k2}};
  j["limits"] = {{"v_min", s.limits.v_min},
                 {"v_max", s.v_max_auto ? Json(nullptr) : Json(s.limits.v_max)},
                 {"omega_abs_max", s.limits.omega_abs_max},
                 {"accel_max", s.limits.accel_max},
                 {"alpha_accel_max", s.limits.alpha_accel_max}};
  j["saturation_enabled"] = s.saturation_enabled;
  j["dt"] = s.dt;
  j["duration_max"] = s.duration_max;
  j["initial_pose"] = PoseToJson(s.initial_pose);
  j["controller"] = NameOf(kControllers, s.controller);
  j["sensor"] = {{"point_noise_sigma", s.sensor.point_noise_sigma},
                 {"clutter_rate", s.sensor.clutter_rate},
                 {"frame_period", s.sensor.frame_period},
                 {"sample_spacing", s.sensor.sample_spacing},
                 {"roi", {{"x_min", roi.x_min},
                          {"x_max", roi.x_max},
                          {"y_min", roi.y_min},
                          {"y_max", roi.y_max}}}};
  j["rng_seed"] = s.rng_seed;
  j["angular_law"] = NameOf(kLawForms, s.angular_law);
  j["integrator"] = NameOf(kIntegrators, s.integrator);
  j["lookahead_lead"] = s.lookahead_lead;
  j["lookahead_spacing"] = s.lookahead_spacing;
  j["delta_s"] = s.delta_s;
  j["min_lane_points"] = s.min_lane_points;
  j["target_lead"] = s.target_lead;
  return j;
}

Scenario ScenarioFromJson(const Json& j) {
  Scenario s;
  ObjectReader r(j, "");
  const Json* track = r.Take("track");
  if (!track) Invalid("missing required key 'track'");
  s.track = TrackFromJsonAt(*track, "track");
  r.Enum("mode", kModes, s.mode);
  r.Number("v_t", s.v_t);
  if (const Json* g = r.Take("gains")) {
    ObjectReader gr(*g, "gains");
    gr.Number("lambda_v", s.gains.lambda_v);
    gr.Number("lambda_a", s.gains.lambda_a);
    gr.Number("k1", s.gains.k1);
    gr.Number("k2", s.gains.k2);
    gr.Finish();
  }
  if (const Json* l = r.Take("limits")) {
    ObjectReader lr(*l, "limits");
    lr.Number("v_min", s.limits.v_min);
    if (const Json* vmax = lr.Take("v_max")) {
      if (vmax->is_null()) {
        s.v_max_auto = true;
      } else if (vmax->is_number()) {
        s.v_max_auto = false;
        s.limits.v_max = vmax->get<double>();
      } else {
        Invalid("limits.v_max must be a number or null");
      }
    }
    lr.Number("omega_abs_max", s.limits.omega_abs_max);
    lr.Number("accel_max", s.limits.accel_max);
    lr.Number("alpha_accel_max", s.limits.alpha_accel_max);
    lr.Finish();
  }
  r.Bool("saturation_enabled", s.saturation_enabled);
  r.Number("dt", s.dt);
  r.Number("duration_max", s.duration_max);
  if (const Json* p = r.Take("initial_pose")) s.initial_pose = PoseFromJson(*p, "initial_pose");
  r.Enum("controller", kControllers, s.controller);
  if (const Json* sj = r.Take("sensor")) {
    ObjectReader sr(*sj, "sensor");
    sr.Number("point_noise_sigma", s.sensor.point_noise_sigma);
    sr.Number("clutter_rate", s.sensor.clutter_rate);
    sr.Number("frame_period", s.sensor.frame_period);
    sr.Number("sample_spacing", s.sensor.sample_spacing);
    if (const Json* roi = sr.Take("roi")) {
      ObjectReader rr(*roi, "sensor.roi");
      rr.Number("x_min", s.sensor.roi.x_min);
      rr.Number("x_max", s.sensor.roi.x_max);
      rr.Number("y_min", s.sensor.roi.y_min);
      rr.Number("y_max", s.sensor.roi.y_max);
      rr.Finish();
    }
    sr.Finish();
  }
  r.Seed("rng_seed", s.rng_seed);
  r.Enum("angular_law", kLawForms, s.angular_law);
  r.Enum("integrator", kIntegrators, s.integrator);
  r.Number("lookahead_lead", s.lookahead_lead);
  r.Number("lookahead_spacing", s.lookahead_spacing);
  r.Number("delta_s", s.delta_s);
  r.Integer("min_lane_points", s.min_lane_points);
  r.Number("target_lead", s.target_lead);
  r.Finish();
  return s;
}

void ApplyOverride(Json& scenario_json, std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    Invalid("override '" + std::string(assignment) + "' is not of the form key=value");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));

  Json* node = &scenario_json;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (!node->is_object() || !node->contains(part)) {
      Invalid("unknown override key '" + key + "'");
    }
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  *node = std::move(value);
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::kParseError, path.string() + " is not valid JSON");
  }
  return j;
}

Scenario LoadScenario(const std::filesystem::path& path,
                      const std::vector<std::string>& overrides) {
  Scenario s = ScenarioFromJson(ReadJsonFile(path));
  if (overrides.empty()) return s;
  Json full = ScenarioToJson(s);
  for (const auto& o : overrides) ApplyOverride(full, o);
  return ScenarioFromJson(full);
}

void WriteSimLogCsv(std::ostream& out, std::span<const StepRecord> records) {
  out << kSimLogHeader << '\n';
  for (const StepRecord& r : records) {
    const double row[] = {r.t,           r.pose.x,         r.pose.y,         r.pose.phi,
                          r.cmd.v,       r.cmd.omega,      r.applied.v,      r.applied.omega,
                          r.target.x,    r.target.y,       r.target.phi,     r.target.phi_dot,
                          r.error.rho,   r.error.alpha,    r.error.beta,     r.lyapunov.v1,
                          r.lyapunov.v2};
    for (double v : row) out << FormatNumber(v) << ',';
    out << r.flags << ',' << NameOf(kRecordModes, r.mode) << '\n';
  }
}

std::vector<StepRecord> ReadSimLogCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kParseError, "log has no header");
  const std::vector<std::string> header = SplitCsvLine(StripCr(line));
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  const std::vector<std::string> expected = SplitCsvLine(std::string(kSimLogHeader));
  for (const auto& name : expected) {
    if (!col.count(name)) {
      throw Error(ErrorCode::kParseError, "log is missing column '" + name + "'");
    }
  }

  std::vector<StepRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = StripCr(line);
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != header.size()) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) + ": expected " +
                                              std::to_string(header.size()) + " fields");
    }
    const auto num = [&](const char* name) {
      return ParseDouble(f[col.at(name)], lineno, name);
    };
    StepRecord r;
    r.step = static_cast<std::int64_t>(records.size());
    r.t = num("t");
    r.pose = {num("x"), num("y"), num("phi")};
    r.cmd = {num("v_cmd"), num("omega_cmd")};
    r.applied = {num("v_app"), num("omega_app")};
    r.target.x = num("x_t");
    r.target.y = num("y_t");
    r.target.phi = num("phi_t");
    r.target.phi_dot = num("phi_t_dot");
    r.error.rho = num("rho");
    r.error.alpha = num("alpha");
    r.error.beta = num("beta");
    r.error.theta = WrapAngle(r.error.alpha + r.pose.phi);
    r.lyapunov.v1 = num("V1");
    r.lyapunov.v2 = num("V2");
    const double flags = num("sat_flag");
    if (flags < 0 || flags != static_cast<double>(static_cast<std::uint32_t>(flags))) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(lineno) + ": sat_flag must be a non-negative integer");
    }
    r.flags = static_cast<std::uint32_t>(flags);
    if (!Lookup(kRecordModes, std::string_view(f[col.at("mode")]), r.mode)) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(lineno) + ": unknown mode '" + f[col.at("mode")] + "'");
    }
    records.push_back(r);
  }
  return records;
}

Json MetricsToJson(const MetricsReport& m) {
  return {{"completion_time", m.completion_time},
          {"avg_linear_speed", m.avg_linear_speed},
          {"avg_angular_speed", m.avg_angular_speed},
          {"mae_lateral", m.mae_lateral},
          {"mae_orientation", m.mae_orientation},
          {"rmse_linear_speed", m.rmse_linear_speed},
          {"linear_speed_deviation_pct", m.linear_speed_deviation_pct},
          {"accumulated_orientation", m.accumulated_orientation},
          {"speed_window_start", m.speed_window_start},
          {"speed_deviation_mode", SpeedDeviationModeName(m.deviation_mode)},
          {"definition_version", m.definition_version}};
}

std::string MetricsJsonText(const MetricsReport& report) {
  return MetricsToJson(report).dump(2) + "\n";
}

void WriteMetricsCsv(std::ostream& out, const MetricsReport& m) {
  out << "completion_time,avg_linear_speed,avg_angular_speed,mae_lateral,"
         "mae_orientation,rmse_linear_speed,linear_speed_deviation_pct,"
         "accumulated_orientation,speed_window_start,speed_deviation_mode,"
         "definition_version\n";
  const double row[] = {m.completion_time,   m.avg_linear_speed,
                        m.avg_angular_speed, m.mae_lateral,
                        m.mae_orientation,   m.rmse_linear_speed,
                        m.linear_speed_deviation_pct, m.accumulated_orientation,
                        m.speed_window_start};
  for (double v : row) out << FormatNumber(v) << ',';
  out << SpeedDeviationModeName(m.deviation_mode) << ',' << m.definition_version << '\n';
}

LaneObservation ReadLaneCsv(std::istream& in) {
  LaneObservation obs;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t id_col = 0, x_col = 0, y_col = 0, width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = StripCr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (!have_header) {
      std::map<std::string, std::size_t> col;
      for (std::size_t i = 0; i < f.size(); ++i) col[f[i]] = i;
      for (const char* name : {"lane_id", "x", "y"}) {
        if (!col.count(name)) {
          throw Error(ErrorCode::kParseError,
                      std::string("lane file is missing column '") + name + "'");
        }
      }
      id_col = col["lane_id"];
      x_col = col["x"];
      y_col = col["y"];
      width = f.size();
      have_header = true;
      continue;
    }
    if (f.size() != width) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) + ": expected " +
                                              std::to_string(width) + " fields");
    }
    const Point2 p{ParseDouble(f[x_col], lineno, "x"), ParseDouble(f[y_col], lineno, "y")};
    if (f[id_col] == "left") {
      obs.left.push_back(p);
    } else if (f[id_col] == "right") {
      obs.right.push_back(p);
    } else {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) +
                                              ": lane_id must be left or right, got '" +
                                              f[id_col] + "'");
    }
  }
  return obs;
}

}  // namespace lanetrack
