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

#include "headpoint/trace.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "headpoint/error.hpp"
#include "headpoint/wire.hpp"

namespace headpoint {

namespace {

constexpr std::string_view kTraceMagic = "headpoint-trace";
constexpr std::string_view kEventLogFormat = "headpoint-events";

[[noreturn]] void parse_error(std::size_t line, const std::string& why) {
  throw Error(Errc::parse, "line " + std::to_string(line) + ": " + why);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  return in;
}

}  // namespace

std::string format_shortest(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(Errc::io, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(Errc::io, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

void save_trace(const Trace& trace, std::ostream& os) {
  os << kTraceMagic << ' ' << kTraceVersion << '\n';
  os << wire::dump(wire::config_to_json(trace.meta)) << '\n';
  std::string line;
  for (const Pose& p : trace.frames) {
    line = format_shortest(p.t_ms);
    for (double v : p.m) {
      line += ' ';
      line += format_shortest(v);
    }
    line += '\n';
    os << line;
  }
}

void save_trace(const Trace& trace, const std::filesystem::path& path) {
  std::ostringstream os;
  save_trace(trace, os);
  write_file_atomic(path, os.str());
}

Trace load_trace(std::istream& is) {
  Trace trace;
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line)) parse_error(line_no, "missing trace header");
  {
    std::istringstream hs(line);
    std::string magic;
    int version = 0;
    if (!(hs >> magic >> version) || magic != kTraceMagic) parse_error(line_no, "not a headpoint trace");
    if (version != kTraceVersion) {
      throw Error(Errc::version, "unsupported trace version " + std::to_string(version));
    }
  }
  ++line_no;
  if (!std::getline(is, line)) parse_error(line_no, "missing session metadata");
  try {
    trace.meta = wire::config_from_json(wire::json::parse(line));
  } catch (const wire::json::exception& e) {
    parse_error(line_no, std::string("metadata is not JSON: ") + e.what());
  } catch (const Error& e) {
    parse_error(line_no, e.what());
  }

  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    Pose pose;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto next = [&](double& out) {
      while (p < end && *p == ' ') ++p;
      const auto res = std::from_chars(p, end, out);
      if (res.ec != std::errc{}) parse_error(line_no, "expected 17 numbers per frame");
      p = res.ptr;
    };
    next(pose.t_ms);
    for (double& v : pose.m) next(v);
    while (p < end && (*p == ' ' || *p == '\r')) ++p;
    if (p != end) parse_error(line_no, "trailing data after frame");
    if (!std::isfinite(pose.t_ms)) parse_error(line_no, "non-finite timestamp");
    for (double v : pose.m) {
      if (!std::isfinite(v)) parse_error(line_no, "non-finite matrix entry");
    }
    if (!trace.frames.empty() && pose.t_ms < trace.frames.back().t_ms) {
      throw Error(Errc::non_monotone_time, "line " + std::to_string(line_no) + ": timestamp goes backwards");
    }
    trace.frames.push_back(pose);
  }
  return trace;
}

Trace load_trace(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return load_trace(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::vector<TrialRecord> EventLog::trials() const {
  std::vector<TrialRecord> out;
  for (const auto& m : entries) {
    if (const auto* r = std::get_if<TrialRecord>(&m)) out.push_back(*r);
  }
  return out;
}

void save_event_log(const EventLog& log, std::ostream& os) {
  wire::json header = {
      {"format", kEventLogFormat}, {"version", kEventLogVersion}, {"meta", wire::config_to_json(log.meta)}};
  os << wire::dump(header) << '\n';
  for (const auto& m : log.entries) os << wire::dump(wire::message_to_json(m)) << '\n';
}

std::string event_log_text(const EventLog& log) {
  std::ostringstream os;
  save_event_log(log, os);
  return os.str();
}

void save_event_log(const EventLog& log, const std::filesystem::path& path) {
  write_file_atomic(path, event_log_text(log));
}

EventLog load_event_log(std::istream& is) {
  EventLog log;
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line)) parse_error(line_no, "missing event log header");
  try {
    const auto header = wire::json::parse(line);
    if (header.value("format", "") != kEventLogFormat) parse_error(line_no, "not a headpoint event log");
    const int version = header.value("version", 0);
    if (version != kEventLogVersion) {
      throw Error(Errc::version, "unsupported event log version " + std::to_string(version));
    }
    log.meta = wire::config_from_json(header.at("meta"));
  } catch (const wire::json::exception& e) {
    parse_error(line_no, e.what());
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      log.entries.push_back(wire::message_from_json(wire::json::parse(line)));
    } catch (const wire::json::exception& e) {
      parse_error(line_no, e.what());
    } catch (const Error& e) {
      parse_error(line_no, e.what());
    }
  }
  return log;
}

EventLog load_event_log(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return load_event_log(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

EventLog replay(const Trace& trace) {
  EventLog log{trace.meta, {}};
  PointingSession session(trace.meta);
  for (std::size_t i = 0; i < trace.frames.size(); ++i) {
    try {
      auto out = session.process_pose(trace.frames[i]);
      for (auto& m : out.messages) log.entries.push_back(std::move(m));
    } catch (const Error& e) {
      // Frame i sits on line i + 3 of the trace file.
      throw Error(e.code(), "frame " + std::to_string(i) + " (line " + std::to_string(i + 3) + "): " + e.what());
    }
  }
  return log;
}

EventLog replay(const Trace& trace, const SessionConfig& config) {
  if (wire::config_to_json(trace.meta) != wire::config_to_json(config)) {
    throw Error(Errc::metadata, "trace metadata does not match the session config");
  }
  return replay(trace);
}

}  // namespace headpoint
