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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "headpoint/analysis.hpp"
#include "headpoint/synth.hpp"
#include "headpoint/trace.hpp"

namespace headpoint {

// "WIDTHxHEIGHT" or "WIDTHxHEIGHT@METERS_PER_NDC_X"; throws invalid_argument.
ScreenGeometry parse_screen_profile(std::string_view text);
// HEADPOINT_SCREEN_PROFILE when set, otherwise 375x812.
ScreenGeometry default_screen_profile();

// Layout as a JSON document: name, screen, sequence and targets with rects.
std::string layout_document(const Layout& layout);

struct StudyOptions {
  int participants = 27;
  std::uint64_t seed = 0;
  std::vector<LayoutName> layouts{LayoutName::numbers, LayoutName::alphabets};
  std::vector<DistanceMode> distances{DistanceMode::near, DistanceMode::mid, DistanceMode::far};
  MotionParams motion;  // head depth is taken from each distance mode
  DwellConfig dwell;
  ScreenGeometry screen;
};

std::string participant_id(int index, int participants);
std::string session_stem(const SessionConfig& config);  // e.g. p01_near_numbers

// One trace per participant x distance x layout. Returns the written paths.
std::vector<std::filesystem::path> synth_study(const StudyOptions& options, const std::filesystem::path& out_dir);

// Single trace synthesis used by synth_study; exposed for tests.
Trace synth_trace(const StudyOptions& options, int participant, DistanceMode distance, LayoutName layout);

void replay_file(const std::filesystem::path& trace_path, const std::filesystem::path& events_path);
// Replays every *.trace in `in_dir` into `out_dir`/<stem>.events.
std::vector<std::filesystem::path> replay_directory(const std::filesystem::path& in_dir,
                                                    const std::filesystem::path& out_dir);

std::vector<TrialRow> collect_trials(std::span<const EventLog> logs);

struct AnalysisSummary {
  std::size_t trial_rows = 0;
  std::size_t sequence_rows = 0;
  std::size_t eigen_rows = 0;
  std::vector<std::string> diagnostics;
};

// Reads every *.events in `events_dir` and writes trials.csv,
// sequences.csv, eigen.csv and boxes.csv into `out_dir`.
AnalysisSummary analyze_directory(const std::filesystem::path& events_dir, const std::filesystem::path& out_dir,
                                  Grouping grouping = Grouping::per_sequence);

}  // namespace headpoint
