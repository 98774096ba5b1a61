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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "headpoint/session.hpp"

namespace headpoint {

inline constexpr int kTraceVersion = 1;
inline constexpr int kEventLogVersion = 1;

struct Trace {
  SessionConfig meta;
  std::vector<Pose> frames;
};

/**
 * Line-oriented trace file:
 *
 *   headpoint-trace 1
 *   {"participant":"p01",...}          session config as JSON
 *   <t> <m00> <m01> ... <m33>          one line per frame
 *
 * Reals use the shortest representation that parses back to the same
 * double, so load(save(x)) == x bit for bit.
 */
void save_trace(const Trace& trace, std::ostream& os);
void save_trace(const Trace& trace, const std::filesystem::path& path);
// Throws parse (with the offending line number), version or
// non_monotone_time.
Trace load_trace(std::istream& is);
Trace load_trace(const std::filesystem::path& path);

struct EventLog {
  SessionConfig meta;
  std::vector<SessionMessage> entries;

  std::vector<TrialRecord> trials() const;
};

// JSON Lines: a header object, then one wire message per line.
void save_event_log(const EventLog& log, std::ostream& os);
void save_event_log(const EventLog& log, const std::filesystem::path& path);
EventLog load_event_log(std::istream& is);
EventLog load_event_log(const std::filesystem::path& path);
std::string event_log_text(const EventLog& log);

// Feeds every frame through a fresh PointingSession. Invalid frames abort
// with an error naming the frame index.
EventLog replay(const Trace& trace);
// Same, after checking that the trace was recorded for `config`.
EventLog replay(const Trace& trace, const SessionConfig& config);

// Writes to a sibling temporary and renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string format_shortest(double value);

}  // namespace headpoint
