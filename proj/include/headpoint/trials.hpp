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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "headpoint/dwell.hpp"
#include "headpoint/geometry.hpp"

namespace headpoint {

enum class LayoutName { numbers, alphabets };
enum class DistanceMode { near, mid, far };

const char* to_string(LayoutName name) noexcept;
const char* to_string(DistanceMode mode) noexcept;
std::optional<LayoutName> parse_layout_name(std::string_view text) noexcept;
std::optional<DistanceMode> parse_distance_mode(std::string_view text) noexcept;

// Interval midpoints 13, 17 and 21 inches, in meters.
double nominal_depth_m(DistanceMode mode) noexcept;

struct Target {
  std::string id;
  std::string label;
  Rect rect;

  ScreenPoint center() const {
    const Vec2 c = rect.center();
    return {c.x, c.y, true};
  }
};

/**
 * Target size and spacing. For the keypad `gap` is the exact spacing between
 * keys; for the letter grid the spacing is spread evenly over the screen and
 * `gap` is the smallest spacing accepted before reporting an overflow.
 */
struct LayoutParams {
  double target_width = 0.0;
  double target_height = 0.0;
  double gap = 0.0;

  static LayoutParams defaults(LayoutName name) noexcept;
};

struct Layout {
  LayoutName name = LayoutName::numbers;
  std::vector<Target> targets;
  ScreenGeometry screen;

  const Target* find(std::string_view label) const;
  const Target& at(std::string_view label) const;
  WidgetRegistry registry(double glance_ms, double gaze_ms) const;
};

Layout build_layout(LayoutName name, const ScreenGeometry& screen, const LayoutParams& params);
Layout build_layout(LayoutName name, const ScreenGeometry& screen);

// "1234567890" + "1928376405" for the keypad, "A".."O" for the letter grid.
std::vector<std::string> trial_sequence(LayoutName name);

struct DwellConfig {
  double glance_ms = 1000.0;
  double gaze_ms = 2000.0;
  EventKind select = EventKind::glance;
};

struct SessionConfig {
  std::string participant = "p01";
  DistanceMode distance = DistanceMode::mid;
  std::vector<LayoutName> tests{LayoutName::numbers};
  DwellConfig dwell;
  ScreenGeometry screen;
  double smoothing_alpha = 1.0;
  bool practice = false;
  std::optional<std::uint64_t> seed;

  void validate() const;
};

struct TrialRecord {
  int test = 0;  // 0-based index into SessionConfig::tests
  LayoutName layout = LayoutName::numbers;
  int index = 0;
  std::string target_label;
  ScreenPoint target_center;
  ScreenPoint prev_center;
  ScreenPoint selection_point;
  double amplitude_pt = 0.0;
  double movement_time_ms = 0.0;
  double t_select = 0.0;
};

enum class SessionPhase { welcome, practice, test1, test2, summary };
const char* to_string(SessionPhase phase) noexcept;

/**
 * Drives the highlight protocol over one or more test layouts. Only select
 * events of the configured kind on the highlighted target close a trial;
 * selections elsewhere are counted and otherwise ignored.
 */
class TrialSession {
 public:
  TrialSession(std::vector<Layout> tests, EventKind select_kind = EventKind::glance);

  void begin_practice();
  void begin_test(double t);

  // Returns the record closed by this event, if any. Throws protocol for
  // widgets that are not part of the active layout, state outside a test.
  std::optional<TrialRecord> advance(const GazeEvent& event);

  SessionPhase phase() const { return phase_; }
  bool in_test() const { return phase_ == SessionPhase::test1 || phase_ == SessionPhase::test2; }
  bool complete() const { return phase_ == SessionPhase::summary; }
  int test_index() const { return test_; }

  // Layout shown in the current phase (practice uses the first test's layout).
  const Layout* active_layout() const;
  std::optional<std::string> current_target() const;  // highlighted orange
  std::optional<std::string> next_target() const;     // highlighted gray
  int cursor_index() const { return static_cast<int>(position_); }
  double test_start() const { return test_start_; }

  std::size_t ignored_selections() const { return ignored_; }
  const std::vector<TrialRecord>& records() const { return records_; }
  // Throws incomplete_session before the summary phase.
  std::vector<TrialRecord> session_log() const;

 private:
  void enter_test(int index, double t);

  std::vector<Layout> tests_;
  std::vector<std::vector<std::string>> sequences_;
  EventKind select_kind_;
  SessionPhase phase_ = SessionPhase::welcome;
  int test_ = 0;
  std::size_t position_ = 0;
  double test_start_ = 0.0;
  double last_select_ = 0.0;
  std::size_t ignored_ = 0;
  std::vector<TrialRecord> records_;
};

}  // namespace headpoint
