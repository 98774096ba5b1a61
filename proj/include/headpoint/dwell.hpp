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

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "headpoint/geometry.hpp"

namespace headpoint {

// Half-open rectangle: left/top edges belong to it, right/bottom edges do not.
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  bool contains(double px, double py) const { return px >= x && px < x + width && py >= y && py < y + height; }
  bool intersects(const Rect& o) const {
    return x < o.x + o.width && o.x < x + width && y < o.y + o.height && o.y < y + height;
  }
  Vec2 center() const { return {x + width / 2.0, y + height / 2.0}; }
};

inline constexpr double kNever = std::numeric_limits<double>::infinity();

struct Widget {
  std::string id;
  Rect rect;
  double glance_ms = 1000.0;
  double gaze_ms = 2000.0;  // kNever disables the gaze event
  bool enabled = true;
};

enum class HoverPhase { idle, hovering, fired_awaiting_exit };

struct WidgetState {
  HoverPhase phase = HoverPhase::idle;
  std::optional<double> hover_start;
  bool glance_emitted = false;
  bool gaze_emitted = false;
};

// Declaration order is the tiebreak order within one timestamp.
enum class EventKind { enter, progress, glance, gaze, exit };

const char* to_string(EventKind kind) noexcept;
std::optional<EventKind> parse_event_kind(std::string_view name) noexcept;
inline bool is_select(EventKind kind) { return kind == EventKind::glance || kind == EventKind::gaze; }

struct GazeEvent {
  double t = 0.0;
  std::string widget_id;
  EventKind kind = EventKind::enter;
  double progress = 0.0;
  ScreenPoint cursor;

  friend bool operator==(const GazeEvent&, const GazeEvent&) = default;
};

/// Disjoint widgets on one screen, addressable by id.
class WidgetRegistry {
 public:
  explicit WidgetRegistry(ScreenGeometry bounds = {}) : bounds_(bounds) {}

  // Throws duplicate_id, out_of_bounds, overlap or invalid_argument.
  void add(Widget widget);

  std::optional<std::string_view> hit_test(const ScreenPoint& cursor) const;
  const Widget* find(std::string_view id) const;

  const std::vector<Widget>& widgets() const { return widgets_; }
  const ScreenGeometry& bounds() const { return bounds_; }
  bool empty() const { return widgets_.empty(); }

 private:
  ScreenGeometry bounds_;
  std::vector<Widget> widgets_;  // registration order
};

/**
 * Hover state machine for every registered widget.
 *
 * Per frame and per widget (in ascending id order):
 *   - cursor enters: enter, progress, then threshold checks;
 *   - cursor stays while hovering: progress = min(1, elapsed / glance_ms),
 *     glance once elapsed >= glance_ms, gaze once elapsed >= gaze_ms which
 *     also parks the widget in fired_awaiting_exit;
 *   - cursor leaves: exit and all timers cleared.
 * A parked widget stays silent until the cursor leaves it.
 */
class DwellEngine {
 public:
  explicit DwellEngine(ScreenGeometry bounds = {}) : registry_(bounds) {}
  explicit DwellEngine(WidgetRegistry registry);

  void register_widget(Widget widget);

  // Throws non_monotone_time (frame rejected, state untouched) when t goes backwards.
  std::vector<GazeEvent> process_frame(double t, const ScreenPoint& cursor);

  void reset();

  const WidgetRegistry& registry() const { return registry_; }
  const WidgetState& state(std::string_view id) const;
  std::optional<double> last_time() const { return last_t_; }

 private:
  void step(const Widget& widget, WidgetState& state, bool inside, double t, const ScreenPoint& cursor,
            std::vector<GazeEvent>& out) const;

  WidgetRegistry registry_;
  std::map<std::string, WidgetState, std::less<>> states_;  // ordered by id
  std::optional<double> last_t_;
};

}  // namespace headpoint
