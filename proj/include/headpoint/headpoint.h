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

#ifndef HEADPOINT_H
#define HEADPOINT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HEADPOINT_BUILDING)
#    define HP_API __declspec(dllexport)
#  else
#    define HP_API __declspec(dllimport)
#  endif
#else
#  define HP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns an hp_status. On failure hp_last_error()
 * describes the problem; the text lives until the next failing call on the
 * same thread. Strings handed out through char** must be released with
 * hp_string_free(). */
typedef enum hp_status {
  HP_OK = 0,
  HP_ERR_INVALID_ARGUMENT = 1,
  HP_ERR_INVALID_POSE = 2,
  HP_ERR_NON_MONOTONE_TIME = 3,
  HP_ERR_LAYOUT = 4, /* duplicate id, overlap or out-of-bounds geometry */
  HP_ERR_PROTOCOL = 5,
  HP_ERR_STATE = 6,
  HP_ERR_DEGENERATE = 7,
  HP_ERR_PARSE = 8,
  HP_ERR_VERSION = 9,
  HP_ERR_METADATA = 10,
  HP_ERR_IO = 11,
  HP_ERR_INTERNAL = 99
} hp_status;

HP_API const char* hp_version(void);
HP_API const char* hp_last_error(void);
HP_API const char* hp_status_name(hp_status status);
HP_API void hp_string_free(char* text);

typedef struct hp_screen {
  double width_pt;
  double height_pt;
  double meters_per_ndc_x;
  double meters_per_ndc_y;
} hp_screen;

typedef struct hp_point {
  double x;
  double y;
  int in_bounds;
} hp_point;

/* 375x812 pt unless HEADPOINT_SCREEN_PROFILE overrides it. */
HP_API hp_status hp_screen_default(hp_screen* out);
/* "WIDTHxHEIGHT" or "WIDTHxHEIGHT@METERS_PER_NDC_X". */
HP_API hp_status hp_screen_parse(const char* profile, hp_screen* out);

/* ---- geometry ---------------------------------------------------------- */

/* Stateless head pose -> cursor (no smoothing). matrix is row-major 4x4. A
 * ray that misses the screen yields the screen center. */
HP_API hp_status hp_pointer_from_pose(const hp_screen* screen, const double matrix[16], hp_point* out);
HP_API hp_status hp_pose_for_screen_point(const hp_screen* screen, hp_point target, const double head_position[3],
                                          double matrix_out[16]);

/* ---- Fitts evaluation -------------------------------------------------- */

HP_API hp_status hp_effective_width(const double* projections, size_t count, double* sx_out, double* we_out);
HP_API hp_status hp_effective_id(double amplitude_pt, double we_pt, double* bits_out);
HP_API hp_status hp_throughput(double ide_bits, double mt_s, double* bps_out);

/* ---- interactive sessions ---------------------------------------------- */

typedef struct hp_session hp_session;

/* config_json has the shape of the hello message (type key optional). */
HP_API hp_status hp_session_create(const char* config_json, hp_session** out);
HP_API void hp_session_destroy(hp_session* session);
HP_API hp_status hp_session_push_pose(hp_session* session, double t_ms, const double matrix[16], hp_point* cursor_out);
/* Drains the phase/event/trial messages produced so far as JSON Lines. */
HP_API hp_status hp_session_take_messages(hp_session* session, char** jsonl_out);
HP_API hp_status hp_session_request_start(hp_session* session);
HP_API const char* hp_session_phase(const hp_session* session);
HP_API size_t hp_session_trial_count(const hp_session* session);

/* Transport-free message protocol of one service connection. */
typedef struct hp_protocol hp_protocol;

HP_API hp_status hp_protocol_create(hp_protocol** out);
HP_API void hp_protocol_destroy(hp_protocol* protocol);
/* Replies are returned as JSON Lines; *closing_out is set once the
 * connection should be closed. */
HP_API hp_status hp_protocol_handle(hp_protocol* protocol, const char* frame, char** replies_out, int* closing_out);

/* ---- layouts, studies, analysis ---------------------------------------- */

HP_API hp_status hp_layout_document(const char* name, const hp_screen* screen, char** json_out);

typedef struct hp_synth_options {
  int participants;
  uint64_t seed;
  const char* layout;   /* "numbers", "alphabets" or "all" */
  const char* distance; /* "near", "mid", "far" or "all" */
  double noise_sigma_pt;
  double move_ms_per_pt;
  double dwell_hold_ms;
  double frame_interval_ms;
  double glance_ms;
  double gaze_ms; /* <= 0 disables gaze */
  const char* select; /* "glance" or "gaze" */
  hp_screen screen;
} hp_synth_options;

HP_API void hp_synth_options_default(hp_synth_options* options);
HP_API hp_status hp_synth_study(const hp_synth_options* options, const char* out_dir, size_t* written_out);
/* trace_path may be a file (out_path is then the event log) or a directory
 * of *.trace files (out_path is then a directory). */
HP_API hp_status hp_replay(const char* trace_path, const char* out_path, size_t* written_out);
/* Writes trials.csv, sequences.csv, eigen.csv and boxes.csv. The optional
 * report is a JSON object with row counts and diagnostics. */
HP_API hp_status hp_analyze(const char* events_dir, const char* out_dir, int pooled, char** report_out);

/* ---- service ----------------------------------------------------------- */

typedef struct hp_server hp_server;

/* port 0 picks an ephemeral port. */
HP_API hp_status hp_server_start(const char* host, uint16_t port, hp_server** out);
HP_API uint16_t hp_server_port(const hp_server* server);
/* Stops the server and releases it. */
HP_API void hp_server_stop(hp_server* server);

#ifdef __cplusplus
}
#endif

#endif /* HEADPOINT_H */
