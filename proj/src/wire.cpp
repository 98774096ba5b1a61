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

#include "headpoint/wire.hpp"

#include <cmath>

#include "headpoint/error.hpp"

namespace headpoint::wire {

namespace {

json point_json(const ScreenPoint& p) { return {{"x", p.x}, {"y", p.y}, {"in_bounds", p.in_bounds}}; }

ScreenPoint point_from(const json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.value("in_bounds", true)};
}

// Infinite durations travel as null.
json duration_json(double ms) { return std::isinf(ms) ? json(nullptr) : json(ms); }

double duration_from(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  return v.is_null() ? kNever : v.get<double>();
}

}  // namespace

json screen_to_json(const ScreenGeometry& s) {
  return {{"width_pt", s.width_pt},
          {"height_pt", s.height_pt},
          {"meters_per_ndc_x", s.meters_per_ndc_x},
          {"meters_per_ndc_y", s.meters_per_ndc_y}};
}

ScreenGeometry screen_from_json(const json& j) {
  ScreenGeometry s;
  s.width_pt = j.value("width_pt", s.width_pt);
  s.height_pt = j.value("height_pt", s.height_pt);
  s.meters_per_ndc_x = j.value("meters_per_ndc_x", 0.3);
  s.meters_per_ndc_y = j.value("meters_per_ndc_y", s.meters_per_ndc_x * (s.height_pt / s.width_pt));
  s.validate();
  return s;
}

json config_to_json(const SessionConfig& c) {
  json layouts = json::array();
  for (LayoutName l : c.tests) layouts.push_back(to_string(l));
  json j = {{"participant", c.participant},
            {"distance", to_string(c.distance)},
            {"layout", c.tests.size() == 1 ? json(to_string(c.tests.front())) : layouts},
            {"dwell",
             {{"glance_ms", duration_json(c.dwell.glance_ms)},
              {"gaze_ms", duration_json(c.dwell.gaze_ms)},
              {"select", to_string(c.dwell.select)}}},
            {"screen", screen_to_json(c.screen)},
            {"alpha", c.smoothing_alpha},
            {"practice", c.practice}};
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

SessionConfig config_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(Errc::metadata, "session config must be an object");
    SessionConfig c;
    c.participant = j.value("participant", c.participant);
    if (j.contains("distance")) {
      auto d = parse_distance_mode(j.at("distance").get<std::string>());
      if (!d) throw Error(Errc::metadata, "unknown distance mode");
      c.distance = *d;
    }
    if (j.contains("layout")) {
      const json& l = j.at("layout");
      c.tests.clear();
      for (const json& name : l.is_array() ? l : json::array({l})) {
        auto parsed = parse_layout_name(name.get<std::string>());
        if (!parsed) throw Error(Errc::metadata, "unknown layout '" + name.get<std::string>() + "'");
        c.tests.push_back(*parsed);
      }
    }
    if (j.contains("dwell")) {
      const json& d = j.at("dwell");
      c.dwell.glance_ms = duration_from(d, "glance_ms", c.dwell.glance_ms);
      c.dwell.gaze_ms = duration_from(d, "gaze_ms", c.dwell.gaze_ms);
      if (d.contains("select")) {
        auto k = parse_event_kind(d.at("select").get<std::string>());
        if (!k) throw Error(Errc::metadata, "unknown select kind");
        c.dwell.select = *k;
      }
    }
    if (j.contains("screen")) c.screen = screen_from_json(j.at("screen"));
    c.smoothing_alpha = j.value("alpha", c.smoothing_alpha);
    c.practice = j.value("practice", c.practice);
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::metadata, std::string("bad session config: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::metadata) throw;
    throw Error(Errc::metadata, std::string("bad session config: ") + e.what());
  }
}

json message_to_json(const SessionMessage& message) {
  struct Visitor {
    json operator()(const PhaseChange& p) const { return {{"type", "phase"}, {"name", to_string(p.phase)}, {"t", p.t}}; }
    json operator()(const GazeEvent& e) const {
      return {{"type", "event"},   {"t", e.t},
              {"widget_id", e.widget_id}, {"kind", to_string(e.kind)},
              {"progress", e.progress},   {"cursor", point_json(e.cursor)}};
    }
    json operator()(const TrialRecord& r) const {
      return {{"type", "trial"},
              {"test", r.test},
              {"layout", to_string(r.layout)},
              {"index", r.index},
              {"target", r.target_label},
              {"target_center", point_json(r.target_center)},
              {"prev_center", point_json(r.prev_center)},
              {"selection_point", point_json(r.selection_point)},
              {"amplitude_pt", r.amplitude_pt},
              {"mt_ms", r.movement_time_ms},
              {"t_select", r.t_select}};
    }
  };
  return std::visit(Visitor{}, message);
}

SessionMessage message_from_json(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "phase") {
      const std::string name = j.at("name").get<std::string>();
      for (SessionPhase p : {SessionPhase::welcome, SessionPhase::practice, SessionPhase::test1, SessionPhase::test2,
                             SessionPhase::summary}) {
        if (name == to_string(p)) return PhaseChange{j.at("t").get<double>(), p};
      }
      throw Error(Errc::parse, "unknown phase '" + name + "'");
    }
    if (type == "event") {
      auto kind = parse_event_kind(j.at("kind").get<std::string>());
      if (!kind) throw Error(Errc::parse, "unknown event kind");
      return GazeEvent{j.at("t").get<double>(), j.at("widget_id").get<std::string>(), *kind,
                       j.at("progress").get<double>(), point_from(j.at("cursor"))};
    }
    if (type == "trial") {
      TrialRecord r;
      r.test = j.at("test").get<int>();
      auto layout = parse_layout_name(j.at("layout").get<std::string>());
      if (!layout) throw Error(Errc::parse, "unknown layout");
      r.layout = *layout;
      r.index = j.at("index").get<int>();
      r.target_label = j.at("target").get<std::string>();
      r.target_center = point_from(j.at("target_center"));
      r.prev_center = point_from(j.at("prev_center"));
      r.selection_point = point_from(j.at("selection_point"));
      r.amplitude_pt = j.at("amplitude_pt").get<double>();
      r.movement_time_ms = j.at("mt_ms").get<double>();
      r.t_select = j.at("t_select").get<double>();
      return r;
    }
    throw Error(Errc::parse, "unknown message type '" + type + "'");
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("malformed message: ") + e.what());
  }
}

json cursor_message(double t, const ScreenPoint& cursor) {
  return {{"type", "cursor"}, {"t", t}, {"x", cursor.x}, {"y", cursor.y}, {"in_bounds", cursor.in_bounds}};
}

json error_message(std::string_view text) { return {{"type", "error"}, {"message", std::string(text)}}; }

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

}  // namespace headpoint::wire
