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

#include "headpoint/trials.hpp"

#include <cmath>

#include "headpoint/error.hpp"

namespace headpoint {

const char* to_string(LayoutName name) noexcept { return name == LayoutName::numbers ? "numbers" : "alphabets"; }

const char* to_string(DistanceMode mode) noexcept {
  switch (mode) {
    case DistanceMode::near: return "near";
    case DistanceMode::mid: return "mid";
    case DistanceMode::far: return "far";
  }
  return "?";
}

const char* to_string(SessionPhase phase) noexcept {
  switch (phase) {
    case SessionPhase::welcome: return "welcome";
    case SessionPhase::practice: return "practice";
    case SessionPhase::test1: return "test1";
    case SessionPhase::test2: return "test2";
    case SessionPhase::summary: return "summary";
  }
  return "?";
}

std::optional<LayoutName> parse_layout_name(std::string_view text) noexcept {
  if (text == "numbers") return LayoutName::numbers;
  if (text == "alphabets") return LayoutName::alphabets;
  return std::nullopt;
}

std::optional<DistanceMode> parse_distance_mode(std::string_view text) noexcept {
  if (text == "near") return DistanceMode::near;
  if (text == "mid") return DistanceMode::mid;
  if (text == "far") return DistanceMode::far;
  return std::nullopt;
}

double nominal_depth_m(DistanceMode mode) noexcept {
  constexpr double kMetersPerInch = 0.0254;
  switch (mode) {
    case DistanceMode::near: return 13.0 * kMetersPerInch;
    case DistanceMode::mid: return 17.0 * kMetersPerInch;
    case DistanceMode::far: return 21.0 * kMetersPerInch;
  }
  return 0.0;
}

LayoutParams LayoutParams::defaults(LayoutName name) noexcept {
  if (name == LayoutName::numbers) return {90.0, 90.0, 12.0};
  return {110.0, 110.0, 8.0};
}

const Target* Layout::find(std::string_view label) const {
  for (const Target& t : targets) {
    if (t.label == label) return &t;
  }
  return nullptr;
}

const Target& Layout::at(std::string_view label) const {
  const Target* t = find(label);
  if (!t) throw Error(Errc::invalid_argument, "layout has no target '" + std::string(label) + "'");
  return *t;
}

WidgetRegistry Layout::registry(double glance_ms, double gaze_ms) const {
  WidgetRegistry reg(screen);
  for (const Target& t : targets) reg.add(Widget{t.id, t.rect, glance_ms, gaze_ms, true});
  return reg;
}

namespace {

void check_fits(const Layout& layout) {
  const ScreenGeometry& s = layout.screen;
  for (const Target& t : layout.targets) {
    const Rect& r = t.rect;
    if (r.x < 0.0 || r.y < 0.0 || r.x + r.width > s.width_pt || r.y + r.height > s.height_pt) {
      throw Error(Errc::out_of_bounds, std::string(to_string(layout.name)) + " layout does not fit the screen");
    }
  }
}

Layout keypad(const ScreenGeometry& screen, const LayoutParams& p) {
  Layout layout{LayoutName::numbers, {}, screen};
  const double pitch_x = p.target_width + p.gap;
  const double pitch_y = p.target_height + p.gap;
  // The 1-9 block is centered so that "5" sits on the screen center.
  const Vec2 c = screen.center();
  const double left = c.x - 1.5 * p.target_width - p.gap;
  const double top = c.y - 1.5 * p.target_height - p.gap;
  auto place = [&](const std::string& label, int row, int col) {
    layout.targets.push_back({label, label, Rect{left + col * pitch_x, top + row * pitch_y, p.target_width,
                                                 p.target_height}});
  };
  for (int k = 1; k <= 9; ++k) place(std::to_string(k), (k - 1) / 3, (k - 1) % 3);
  place("0", 3, 1);
  return layout;
}

Layout letter_grid(const ScreenGeometry& screen, const LayoutParams& p) {
  constexpr int kCols = 3;
  constexpr int kRows = 5;
  Layout layout{LayoutName::alphabets, {}, screen};
  const double gap_x = (screen.width_pt - kCols * p.target_width) / (kCols + 1);
  const double gap_y = (screen.height_pt - kRows * p.target_height) / (kRows + 1);
  if (gap_x < p.gap || gap_y < p.gap) {
    throw Error(Errc::out_of_bounds, "alphabets grid overflows the screen");
  }
  for (int row = 0; row < kRows; ++row) {
    for (int col = 0; col < kCols; ++col) {
      const std::string label(1, static_cast<char>('A' + row * kCols + col));
      layout.targets.push_back({label, label,
                                Rect{gap_x + col * (p.target_width + gap_x), gap_y + row * (p.target_height + gap_y),
                                     p.target_width, p.target_height}});
    }
  }
  return layout;
}

}  // namespace

Layout build_layout(LayoutName name, const ScreenGeometry& screen, const LayoutParams& params) {
  screen.validate();
  if (!(params.target_width > 0.0 && params.target_height > 0.0)) {
    throw Error(Errc::invalid_argument, "target size must be positive");
  }
  if (params.gap < 0.0) throw Error(Errc::overlap, "negative gap makes targets overlap");
  Layout layout = name == LayoutName::numbers ? keypad(screen, params) : letter_grid(screen, params);
  check_fits(layout);
  return layout;
}

Layout build_layout(LayoutName name, const ScreenGeometry& screen) {
  return build_layout(name, screen, LayoutParams::defaults(name));
}

std::vector<std::string> trial_sequence(LayoutName name) {
  std::vector<std::string> seq;
  if (name == LayoutName::numbers) {
    for (char c : std::string_view("12345678901928376405")) seq.emplace_back(1, c);
  } else {
    for (char c = 'A'; c <= 'O'; ++c) seq.emplace_back(1, c);
  }
  return seq;
}

void SessionConfig::validate() const {
  if (participant.empty()) throw Error(Errc::metadata, "participant id must not be empty");
  if (tests.empty() || tests.size() > 2) throw Error(Errc::metadata, "a session runs one or two tests");
  if (!(dwell.glance_ms > 0.0 && dwell.glance_ms <= dwell.gaze_ms)) {
    throw Error(Errc::metadata, "dwell config needs 0 < glance_ms <= gaze_ms");
  }
  if (!is_select(dwell.select)) throw Error(Errc::metadata, "select kind must be glance or gaze");
  if (dwell.select == EventKind::gaze && std::isinf(dwell.gaze_ms)) {
    throw Error(Errc::metadata, "gaze selection requires a finite gaze_ms");
  }
  if (!(smoothing_alpha > 0.0 && smoothing_alpha <= 1.0)) throw Error(Errc::metadata, "alpha must lie in (0, 1]");
  screen.validate();
}

TrialSession::TrialSession(std::vector<Layout> tests, EventKind select_kind)
    : tests_(std::move(tests)), select_kind_(select_kind) {
  if (tests_.empty() || tests_.size() > 2) throw Error(Errc::invalid_argument, "a session runs one or two tests");
  if (!is_select(select_kind)) throw Error(Errc::invalid_argument, "select kind must be glance or gaze");
  for (const Layout& l : tests_) {
    auto seq = trial_sequence(l.name);
    for (const auto& label : seq) l.at(label);
    sequences_.push_back(std::move(seq));
  }
}

void TrialSession::begin_practice() {
  if (phase_ != SessionPhase::welcome) throw Error(Errc::state, "practice can only follow the welcome screen");
  phase_ = SessionPhase::practice;
}

void TrialSession::begin_test(double t) {
  if (phase_ != SessionPhase::welcome && phase_ != SessionPhase::practice) {
    throw Error(Errc::state, "test already started");
  }
  enter_test(0, t);
}

void TrialSession::enter_test(int index, double t) {
  test_ = index;
  position_ = 0;
  test_start_ = t;
  last_select_ = t;
  phase_ = index == 0 ? SessionPhase::test1 : SessionPhase::test2;
}

const Layout* TrialSession::active_layout() const {
  switch (phase_) {
    case SessionPhase::welcome:
    case SessionPhase::summary: return nullptr;
    case SessionPhase::practice: return &tests_.front();
    default: return &tests_[static_cast<size_t>(test_)];
  }
}

std::optional<std::string> TrialSession::current_target() const {
  if (!in_test()) return std::nullopt;
  return sequences_[static_cast<size_t>(test_)][position_];
}

std::optional<std::string> TrialSession::next_target() const {
  if (!in_test()) return std::nullopt;
  const auto& seq = sequences_[static_cast<size_t>(test_)];
  if (position_ + 1 >= seq.size()) return std::nullopt;
  return seq[position_ + 1];
}

std::optional<TrialRecord> TrialSession::advance(const GazeEvent& event) {
  if (!in_test()) throw Error(Errc::state, "session is not in a test phase");
  const Layout& layout = tests_[static_cast<size_t>(test_)];
  const Target* target = layout.find(event.widget_id);
  if (!target) {
    throw Error(Errc::protocol, "event from widget '" + event.widget_id + "' outside the " +
                                    to_string(layout.name) + " layout");
  }
  if (event.kind != select_kind_) return std::nullopt;
  const auto& seq = sequences_[static_cast<size_t>(test_)];
  if (target->label != seq[position_]) {
    ++ignored_;
    return std::nullopt;
  }

  TrialRecord rec;
  rec.test = test_;
  rec.layout = layout.name;
  rec.index = static_cast<int>(position_);
  rec.target_label = target->label;
  rec.target_center = target->center();
  if (position_ == 0) {
    const Vec2 c = layout.screen.center();
    rec.prev_center = {c.x, c.y, true};
  } else {
    rec.prev_center = layout.at(seq[position_ - 1]).center();
  }
  rec.selection_point = event.cursor;
  rec.amplitude_pt = std::hypot(rec.target_center.x - rec.prev_center.x, rec.target_center.y - rec.prev_center.y);
  rec.movement_time_ms = event.t - last_select_;
  rec.t_select = event.t;
  records_.push_back(rec);

  last_select_ = event.t;
  if (++position_ == seq.size()) {
    if (static_cast<size_t>(test_ + 1) < tests_.size()) {
      enter_test(test_ + 1, event.t);
    } else {
      phase_ = SessionPhase::summary;
    }
  }
  return rec;
}

std::vector<TrialRecord> TrialSession::session_log() const {
  if (!complete()) throw Error(Errc::incomplete_session, "session has not reached the summary");
  return records_;
}

}  // namespace headpoint
