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

#include "headpoint/dwell.hpp"

#include <algorithm>
#include <cmath>

#include "headpoint/error.hpp"

namespace headpoint {

const char* to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::enter: return "enter";
    case EventKind::progress: return "progress";
    case EventKind::glance: return "glance";
    case EventKind::gaze: return "gaze";
    case EventKind::exit: return "exit";
  }
  return "?";
}

std::optional<EventKind> parse_event_kind(std::string_view name) noexcept {
  for (EventKind k : {EventKind::enter, EventKind::progress, EventKind::glance, EventKind::gaze, EventKind::exit}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

void WidgetRegistry::add(Widget widget) {
  const Rect& r = widget.rect;
  if (widget.id.empty()) throw Error(Errc::invalid_argument, "widget id must not be empty");
  if (!(r.width > 0.0 && r.height > 0.0)) {
    throw Error(Errc::invalid_argument, "widget '" + widget.id + "' needs a positive size");
  }
  if (!(widget.glance_ms >= 0.0 && widget.glance_ms <= widget.gaze_ms)) {
    throw Error(Errc::invalid_argument, "widget '" + widget.id + "' needs 0 <= glance_ms <= gaze_ms");
  }
  if (find(widget.id) != nullptr) throw Error(Errc::duplicate_id, "duplicate widget id '" + widget.id + "'");
  if (r.x < 0.0 || r.y < 0.0 || r.x + r.width > bounds_.width_pt || r.y + r.height > bounds_.height_pt) {
    throw Error(Errc::out_of_bounds, "widget '" + widget.id + "' extends past the screen");
  }
  for (const Widget& other : widgets_) {
    if (other.rect.intersects(r)) {
      throw Error(Errc::overlap, "widget '" + widget.id + "' overlaps '" + other.id + "'");
    }
  }
  widgets_.push_back(std::move(widget));
}

std::optional<std::string_view> WidgetRegistry::hit_test(const ScreenPoint& cursor) const {
  for (const Widget& w : widgets_) {
    if (w.enabled && w.rect.contains(cursor.x, cursor.y)) return std::string_view(w.id);
  }
  return std::nullopt;
}

const Widget* WidgetRegistry::find(std::string_view id) const {
  auto it = std::find_if(widgets_.begin(), widgets_.end(), [&](const Widget& w) { return w.id == id; });
  return it == widgets_.end() ? nullptr : &*it;
}

DwellEngine::DwellEngine(WidgetRegistry registry) : registry_(std::move(registry)) {
  for (const Widget& w : registry_.widgets()) states_.emplace(w.id, WidgetState{});
}

void DwellEngine::register_widget(Widget widget) {
  std::string id = widget.id;
  registry_.add(std::move(widget));
  states_.emplace(std::move(id), WidgetState{});
}

const WidgetState& DwellEngine::state(std::string_view id) const {
  auto it = states_.find(id);
  if (it == states_.end()) throw Error(Errc::invalid_argument, "unknown widget '" + std::string(id) + "'");
  return it->second;
}

void DwellEngine::reset() {
  for (auto& [id, st] : states_) st = WidgetState{};
  last_t_.reset();
}

std::vector<GazeEvent> DwellEngine::process_frame(double t, const ScreenPoint& cursor) {
  if (!std::isfinite(t)) throw Error(Errc::invalid_argument, "frame timestamp must be finite");
  if (last_t_ && t < *last_t_) throw Error(Errc::non_monotone_time, "frame timestamp went backwards");
  last_t_ = t;

  const auto hit = registry_.hit_test(cursor);
  std::vector<GazeEvent> out;
  for (auto& [id, st] : states_) {
    const Widget* w = registry_.find(id);
    step(*w, st, hit && *hit == id, t, cursor, out);
  }
  return out;
}

void DwellEngine::step(const Widget& widget, WidgetState& st, bool inside, double t, const ScreenPoint& cursor,
                       std::vector<GazeEvent>& out) const {
  auto emit = [&](EventKind kind, double progress) { out.push_back({t, widget.id, kind, progress, cursor}); };

  if (!inside) {
    if (st.phase != HoverPhase::idle) {
      emit(EventKind::exit, 0.0);
      st = WidgetState{};
    }
    return;
  }
  if (st.phase == HoverPhase::fired_awaiting_exit) return;
  if (st.phase == HoverPhase::idle) {
    st.phase = HoverPhase::hovering;
    st.hover_start = t;
    emit(EventKind::enter, 0.0);
  }

  const double elapsed = t - *st.hover_start;
  const double progress = widget.glance_ms > 0.0 ? std::min(1.0, elapsed / widget.glance_ms) : 1.0;
  emit(EventKind::progress, progress);
  if (!st.glance_emitted && elapsed >= widget.glance_ms) {
    st.glance_emitted = true;
    emit(EventKind::glance, progress);
  }
  if (!st.gaze_emitted && elapsed >= widget.gaze_ms) {
    st.gaze_emitted = true;
    emit(EventKind::gaze, progress);
    st.phase = HoverPhase::fired_awaiting_exit;
    st.hover_start.reset();
  }
}

}  // namespace headpoint
