/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The headpoint Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "headpoint/study.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "headpoint/error.hpp"
#include "headpoint/wire.hpp"

namespace headpoint {

namespace fs = std::filesystem;

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw Error(Errc::invalid_argument, "bad screen profile '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<fs::path> files_with_extension(const fs::path& dir, std::string_view ext) {
  if (!fs::is_directory(dir)) throw Error(Errc::io, dir.string() + " is not a directory");
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ext) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ScreenGeometry parse_screen_profile(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) throw Error(Errc::invalid_argument, "bad screen profile '" + std::string(text) + "'");
  const auto at = text.find('@', x);
  const double w = parse_number(text.substr(0, x), text);
  const double h = parse_number(text.substr(x + 1, at == std::string_view::npos ? at : at - x - 1), text);
  const double gain = at == std::string_view::npos ? 0.3 : parse_number(text.substr(at + 1), text);
  try {
    return ScreenGeometry::with_size(w, h, gain);
  } catch (const Error&) {
    throw Error(Errc::invalid_argument, "bad screen profile '" + std::string(text) + "'");
  }
}

ScreenGeometry default_screen_profile() {
  if (const char* env = std::getenv("HEADPOINT_SCREEN_PROFILE"); env && *env) return parse_screen_profile(env);
  return {};
}

std::string layout_document(const Layout& layout) {
  wire::json targets = wire::json::array();
  for (const Target& t : layout.targets) {
    targets.push_back({{"id", t.id},
                       {"label", t.label},
                       {"rect", {{"x", t.rect.x}, {"y", t.rect.y}, {"width", t.rect.width}, {"height", t.rect.height}}}});
  }
  wire::json doc = {{"name", to_string(layout.name)},
                    {"screen", wire::screen_to_json(layout.screen)},
                    {"sequence", trial_sequence(layout.name)},
                    {"targets", targets}};
  return doc.dump(2) + "\n";
}

std::string participant_id(int index, int participants) {
  const int width = std::max(2, static_cast<int>(std::to_string(participants).size()));
  std::string digits = std::to_string(index + 1);
  return "p" + std::string(static_cast<size_t>(std::max(0, width - static_cast<int>(digits.size()))), '0') + digits;
}

std::string session_stem(const SessionConfig& config) {
  std::string stem = config.participant + "_" + to_string(config.distance);
  for (LayoutName l : config.tests) stem += std::string("_") + to_string(l);
  return stem;
}

Trace synth_trace(const StudyOptions& options, int participant, DistanceMode distance, LayoutName layout_name) {
  Trace trace;
  trace.meta.participant = participant_id(participant, options.participants);
  trace.meta.distance = distance;
  trace.meta.tests = {layout_name};
  trace.meta.dwell = options.dwell;
  trace.meta.screen = options.screen;
  trace.meta.seed = options.seed;
  trace.meta.validate();

  MotionParams motion = options.motion;
  motion.head_depth_m = nominal_depth_m(distance);
  motion.seed = options.seed;
  const double threshold = options.dwell.select == EventKind::gaze ? options.dwell.gaze_ms : options.dwell.glance_ms;
  const Layout layout = build_layout(layout_name, options.screen);
  trace.frames = synth_session(layout, trial_sequence(layout_name), motion,
                               SynthKey{static_cast<std::uint32_t>(participant), distance, layout_name}, threshold);
  return trace;
}

std::vector<fs::path> synth_study(const StudyOptions& options, const fs::path& out_dir) {
  if (options.participants < 1) throw Error(Errc::invalid_argument, "need at least one participant");
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  for (int p = 0; p < options.participants; ++p) {
    for (DistanceMode d : options.distances) {
      for (LayoutName l : options.layouts) {
        Trace trace = synth_trace(options, p, d, l);
        const fs::path path = out_dir / (session_stem(trace.meta) + ".trace");
        save_trace(trace, path);
        written.push_back(path);
      }
    }
  }
  return written;
}

void replay_file(const fs::path& trace_path, const fs::path& events_path) {
  const Trace trace = load_trace(trace_path);
  try {
    save_event_log(replay(trace), events_path);
  } catch (const Error& e) {
    if (e.code() == Errc::io) throw;
    throw Error(e.code(), trace_path.string() + ": " + e.what());
  }
}

std::vector<fs::path> replay_directory(const fs::path& in_dir, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  for (const fs::path& trace : files_with_extension(in_dir, ".trace")) {
    fs::path out = out_dir / trace.stem();
    out += ".events";
    replay_file(trace, out);
    written.push_back(out);
  }
  return written;
}

std::vector<TrialRow> collect_trials(std::span<const EventLog> logs) {
  std::vector<TrialRow> rows;
  for (const EventLog& log : logs) {
    for (const TrialRecord& r : log.trials()) rows.push_back({log.meta.participant, log.meta.distance, r.layout, r});
  }
  std::sort(rows.begin(), rows.end(), row_order);
  return rows;
}

AnalysisSummary analyze_directory(const fs::path& events_dir, const fs::path& out_dir, Grouping grouping) {
  std::vector<EventLog> logs;
  for (const fs::path& p : files_with_extension(events_dir, ".events")) logs.push_back(load_event_log(p));
  if (logs.empty()) throw Error(Errc::io, "no .events files in " + events_dir.string());
  const auto rows = collect_trials(logs);
  const auto report = sequence_stats(rows, grouping);
  const auto eigen = eigen_by_target(rows);
  const auto boxes = box_rows(report.stats);

  fs::create_directories(out_dir);
  auto emit = [&](const char* name, auto&& writer) {
    std::ostringstream os;
    writer(os);
    write_file_atomic(out_dir / name, os.str());
  };
  emit("trials.csv", [&](std::ostream& os) { write_trials_csv(os, rows); });
  emit("sequences.csv", [&](std::ostream& os) { write_sequences_csv(os, report.stats); });
  emit("eigen.csv", [&](std::ostream& os) { write_eigen_csv(os, eigen); });
  emit("boxes.csv", [&](std::ostream& os) { write_boxes_csv(os, boxes); });
  return {rows.size(), report.stats.size(), eigen.size(), report.diagnostics};
}

}  // namespace headpoint
