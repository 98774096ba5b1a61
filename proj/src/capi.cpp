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

#include "headpoint/headpoint.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <filesystem>
#include <string>

#include "headpoint/analysis.hpp"
#include "headpoint/error.hpp"
#include "headpoint/service.hpp"
#include "headpoint/session.hpp"
#include "headpoint/study.hpp"
#include "headpoint/wire.hpp"

using namespace headpoint;

struct hp_session {
  PointingSession session;
  std::string pending;
};

struct hp_protocol {
  ProtocolHandler handler;
};

struct hp_server {
  SessionServer server;
};

namespace {

thread_local std::string g_last_error;

hp_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return HP_ERR_INVALID_ARGUMENT;
    case Errc::invalid_pose: return HP_ERR_INVALID_POSE;
    case Errc::non_monotone_time: return HP_ERR_NON_MONOTONE_TIME;
    case Errc::duplicate_id:
    case Errc::out_of_bounds:
    case Errc::overlap: return HP_ERR_LAYOUT;
    case Errc::protocol: return HP_ERR_PROTOCOL;
    case Errc::state:
    case Errc::incomplete_session: return HP_ERR_STATE;
    case Errc::degenerate: return HP_ERR_DEGENERATE;
    case Errc::parse: return HP_ERR_PARSE;
    case Errc::version: return HP_ERR_VERSION;
    case Errc::metadata: return HP_ERR_METADATA;
    case Errc::io: return HP_ERR_IO;
  }
  return HP_ERR_INTERNAL;
}

hp_status fail(hp_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
hp_status guarded(Fn&& fn) {
  try {
    fn();
    return HP_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(HP_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(HP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HP_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

ScreenGeometry to_screen(const hp_screen* s) {
  if (!s) return default_screen_profile();
  ScreenGeometry g;
  g.width_pt = s->width_pt;
  g.height_pt = s->height_pt;
  g.meters_per_ndc_x = s->meters_per_ndc_x;
  g.meters_per_ndc_y = s->meters_per_ndc_y;
  g.validate();
  return g;
}

hp_screen from_screen(const ScreenGeometry& g) { return {g.width_pt, g.height_pt, g.meters_per_ndc_x, g.meters_per_ndc_y}; }

hp_point from_point(const ScreenPoint& p) { return {p.x, p.y, p.in_bounds ? 1 : 0}; }

Pose to_pose(double t_ms, const double* m) {
  if (!m) throw Error(Errc::invalid_argument, "matrix must not be null");
  Pose pose;
  pose.t_ms = t_ms;
  std::memcpy(pose.m.data(), m, sizeof(double) * 16);
  return pose;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(Errc::invalid_argument, std::string(what) + " must not be null");
}

template <typename T, typename Parse>
std::vector<T> parse_choice(const char* text, Parse parse, std::vector<T> all, const char* what) {
  if (!text || std::string_view(text) == "all") return all;
  auto v = parse(text);
  if (!v) throw Error(Errc::invalid_argument, std::string("unknown ") + what + " '" + text + "'");
  return {*v};
}

}  // namespace

extern "C" {

const char* hp_version(void) { return "1.0.0"; }

const char* hp_last_error(void) { return g_last_error.c_str(); }

const char* hp_status_name(hp_status status) {
  switch (status) {
    case HP_OK: return "ok";
    case HP_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case HP_ERR_INVALID_POSE: return "invalid_pose";
    case HP_ERR_NON_MONOTONE_TIME: return "non_monotone_time";
    case HP_ERR_LAYOUT: return "layout";
    case HP_ERR_PROTOCOL: return "protocol";
    case HP_ERR_STATE: return "state";
    case HP_ERR_DEGENERATE: return "degenerate";
    case HP_ERR_PARSE: return "parse";
    case HP_ERR_VERSION: return "version";
    case HP_ERR_METADATA: return "metadata";
    case HP_ERR_IO: return "io";
    case HP_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void hp_string_free(char* text) { std::free(text); }

hp_status hp_screen_default(hp_screen* out) {
  return guarded([&] {
    require(out, "out");
    *out = from_screen(default_screen_profile());
  });
}

hp_status hp_screen_parse(const char* profile, hp_screen* out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = from_screen(parse_screen_profile(profile));
  });
}

hp_status hp_pointer_from_pose(const hp_screen* screen, const double matrix[16], hp_point* out) {
  return guarded([&] {
    require(out, "out");
    const Pose pose = to_pose(0.0, matrix);
    validate_pose(pose);
    SmoothingFilter filter;
    *out = from_point(pointer_from_pose(HeadModel{}, pose, to_screen(screen), filter));
  });
}

hp_status hp_pose_for_screen_point(const hp_screen* screen, hp_point target, const double head_position[3],
                                   double matrix_out[16]) {
  return guarded([&] {
    require(head_position, "head_position");
    require(matrix_out, "matrix_out");
    const Pose pose = pose_for_screen_point({target.x, target.y, target.in_bounds != 0},
                                            {head_position[0], head_position[1], head_position[2]}, to_screen(screen));
    std::memcpy(matrix_out, pose.m.data(), sizeof(double) * 16);
  });
}

hp_status hp_effective_width(const double* projections, size_t count, double* sx_out, double* we_out) {
  return guarded([&] {
    if (count > 0) require(projections, "projections");
    const auto ew = effective_width(std::span<const double>(projections, count));
    if (sx_out) *sx_out = ew.sx;
    if (we_out) *we_out = ew.we;
  });
}

hp_status hp_effective_id(double amplitude_pt, double we_pt, double* bits_out) {
  return guarded([&] {
    require(bits_out, "bits_out");
    *bits_out = effective_id(amplitude_pt, we_pt);
  });
}

hp_status hp_throughput(double ide_bits, double mt_s, double* bps_out) {
  return guarded([&] {
    require(bps_out, "bps_out");
    *bps_out = throughput(ide_bits, mt_s);
  });
}

hp_status hp_session_create(const char* config_json, hp_session** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    SessionConfig config;
    if (config_json && *config_json) {
      wire::json j;
      try {
        j = wire::json::parse(config_json);
      } catch (const wire::json::exception& e) {
        throw Error(Errc::parse, std::string("config is not JSON: ") + e.what());
      }
      config = wire::config_from_json(j);
    }
    *out = new hp_session{PointingSession(std::move(config)), {}};
  });
}

void hp_session_destroy(hp_session* session) { delete session; }

hp_status hp_session_push_pose(hp_session* session, double t_ms, const double matrix[16], hp_point* cursor_out) {
  return guarded([&] {
    require(session, "session");
    auto out = session->session.process_pose(to_pose(t_ms, matrix));
    if (cursor_out) *cursor_out = from_point(out.cursor);
    for (const auto& m : out.messages) {
      session->pending += wire::dump(wire::message_to_json(m));
      session->pending += '\n';
    }
  });
}

hp_status hp_session_take_messages(hp_session* session, char** jsonl_out) {
  return guarded([&] {
    require(session, "session");
    require(jsonl_out, "jsonl_out");
    *jsonl_out = copy_string(session->pending);
    session->pending.clear();
  });
}

hp_status hp_session_request_start(hp_session* session) {
  return guarded([&] {
    require(session, "session");
    session->session.request_start();
  });
}

const char* hp_session_phase(const hp_session* session) {
  return session ? to_string(session->session.phase()) : "";
}

size_t hp_session_trial_count(const hp_session* session) {
  return session ? session->session.trials().records().size() : 0;
}

hp_status hp_protocol_create(hp_protocol** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hp_protocol{};
  });
}

void hp_protocol_destroy(hp_protocol* protocol) { delete protocol; }

hp_status hp_protocol_handle(hp_protocol* protocol, const char* frame, char** replies_out, int* closing_out) {
  return guarded([&] {
    require(protocol, "protocol");
    require(frame, "frame");
    std::string text;
    for (const auto& r : protocol->handler.on_text(frame)) {
      text += r;
      text += '\n';
    }
    if (replies_out) *replies_out = copy_string(text);
    if (closing_out) *closing_out = protocol->handler.closing() ? 1 : 0;
  });
}

hp_status hp_layout_document(const char* name, const hp_screen* screen, char** json_out) {
  return guarded([&] {
    require(name, "name");
    require(json_out, "json_out");
    const auto layout = parse_layout_name(name);
    if (!layout) throw Error(Errc::invalid_argument, std::string("unknown layout '") + name + "'");
    *json_out = copy_string(layout_document(build_layout(*layout, to_screen(screen))));
  });
}

void hp_synth_options_default(hp_synth_options* options) {
  if (!options) return;
  const StudyOptions d;
  options->participants = d.participants;
  options->seed = d.seed;
  options->layout = "all";
  options->distance = "all";
  options->noise_sigma_pt = d.motion.noise_sigma_pt;
  options->move_ms_per_pt = d.motion.move_ms_per_pt;
  options->dwell_hold_ms = d.motion.dwell_hold_ms;
  options->frame_interval_ms = d.motion.frame_interval_ms;
  options->glance_ms = d.dwell.glance_ms;
  options->gaze_ms = d.dwell.gaze_ms;
  options->select = "glance";
  options->screen = from_screen(default_screen_profile());
}

hp_status hp_synth_study(const hp_synth_options* options, const char* out_dir, size_t* written_out) {
  return guarded([&] {
    require(options, "options");
    require(out_dir, "out_dir");
    StudyOptions study;
    study.participants = options->participants;
    study.seed = options->seed;
    study.layouts = parse_choice<LayoutName>(options->layout, parse_layout_name, {LayoutName::numbers, LayoutName::alphabets},
                                 "layout");
    study.distances = parse_choice<DistanceMode>(options->distance, parse_distance_mode,
                                   {DistanceMode::near, DistanceMode::mid, DistanceMode::far}, "distance");
    study.motion.noise_sigma_pt = options->noise_sigma_pt;
    study.motion.move_ms_per_pt = options->move_ms_per_pt;
    study.motion.dwell_hold_ms = options->dwell_hold_ms;
    study.motion.frame_interval_ms = options->frame_interval_ms;
    study.dwell.glance_ms = options->glance_ms;
    study.dwell.gaze_ms = options->gaze_ms > 0.0 ? options->gaze_ms : kNever;
    const auto kind = parse_event_kind(options->select ? options->select : "glance");
    if (!kind || !is_select(*kind)) throw Error(Errc::invalid_argument, "select must be glance or gaze");
    study.dwell.select = *kind;
    study.screen = to_screen(&options->screen);
    const auto written = synth_study(study, out_dir);
    if (written_out) *written_out = written.size();
  });
}

hp_status hp_replay(const char* trace_path, const char* out_path, size_t* written_out) {
  return guarded([&] {
    require(trace_path, "trace_path");
    require(out_path, "out_path");
    size_t n = 1;
    if (std::filesystem::is_directory(trace_path)) {
      n = replay_directory(trace_path, out_path).size();
    } else {
      replay_file(trace_path, out_path);
    }
    if (written_out) *written_out = n;
  });
}

hp_status hp_analyze(const char* events_dir, const char* out_dir, int pooled, char** report_out) {
  return guarded([&] {
    require(events_dir, "events_dir");
    require(out_dir, "out_dir");
    const auto summary = analyze_directory(events_dir, out_dir, pooled ? Grouping::pooled : Grouping::per_sequence);
    if (report_out) {
      wire::json report = {{"trial_rows", summary.trial_rows},
                           {"sequence_rows", summary.sequence_rows},
                           {"eigen_rows", summary.eigen_rows},
                           {"diagnostics", summary.diagnostics}};
      *report_out = copy_string(report.dump());
    }
  });
}

hp_status hp_server_start(const char* host, uint16_t port, hp_server** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    std::unique_ptr<hp_server> server(new hp_server{SessionServer(ServerOptions{host ? host : "127.0.0.1", port, 2})});
    server->server.start();
    *out = server.release();
  });
}

uint16_t hp_server_port(const hp_server* server) { return server ? server->server.port() : 0; }

void hp_server_stop(hp_server* server) {
  if (!server) return;
  server->server.stop();
  delete server;
}

}  // extern "C"
