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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "headpoint/headpoint.h"

namespace {

const double kIdentityMid[16] = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0.4318, 0, 0, 0, 1};

std::string take(char* text) {
  std::string s = text ? text : "";
  hp_string_free(text);
  return s;
}

int count_lines(const std::string& s, const std::string& needle) {
  int n = 0;
  for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(CApiTest, VersionAndStatusNames) {
  EXPECT_STREQ(hp_version(), "1.0.0");
  EXPECT_STREQ(hp_status_name(HP_OK), "ok");
  EXPECT_STREQ(hp_status_name(HP_ERR_NON_MONOTONE_TIME), "non_monotone_time");
  EXPECT_STREQ(hp_status_name(static_cast<hp_status>(42)), "unknown");
}

TEST(CApiTest, Screens) {
  hp_screen s{};
  ASSERT_EQ(hp_screen_default(&s), HP_OK);
  EXPECT_EQ(s.width_pt, 375);
  EXPECT_EQ(s.height_pt, 812);
  EXPECT_DOUBLE_EQ(s.meters_per_ndc_y, 0.3 * 812 / 375);
  ASSERT_EQ(hp_screen_parse("390x844@0.25", &s), HP_OK);
  EXPECT_EQ(s.width_pt, 390);
  EXPECT_DOUBLE_EQ(s.meters_per_ndc_y, 0.25 * 844 / 390);
  EXPECT_EQ(hp_screen_parse("wide", &s), HP_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(hp_last_error()), "");
  EXPECT_EQ(hp_screen_default(nullptr), HP_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, PointerAndInverse) {
  hp_point p{};
  ASSERT_EQ(hp_pointer_from_pose(nullptr, kIdentityMid, &p), HP_OK);
  EXPECT_NEAR(p.x, 187.5, 1e-9);
  EXPECT_NEAR(p.y, 406.0, 1e-9);
  EXPECT_EQ(p.in_bounds, 1);

  const double head[3] = {0.01, -0.02, 0.3302};
  double m[16];
  ASSERT_EQ(hp_pose_for_screen_point(nullptr, hp_point{40.0, 700.0, 1}, head, m), HP_OK);
  ASSERT_EQ(hp_pointer_from_pose(nullptr, m, &p), HP_OK);
  EXPECT_NEAR(p.x, 40.0, 1e-9);
  EXPECT_NEAR(p.y, 700.0, 1e-9);

  double bad[16];
  std::copy(kIdentityMid, kIdentityMid + 16, bad);
  bad[5] = 2.0;
  EXPECT_EQ(hp_pointer_from_pose(nullptr, bad, &p), HP_ERR_INVALID_POSE);
  EXPECT_EQ(hp_pointer_from_pose(nullptr, nullptr, &p), HP_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, FittsFunctions) {
  const double proj[] = {-1.0, 1.0};
  double sx = 0, we = 0;
  ASSERT_EQ(hp_effective_width(proj, 2, &sx, &we), HP_OK);
  EXPECT_NEAR(we, 5.844945, 1e-6);
  EXPECT_EQ(hp_effective_width(proj, 1, &sx, &we), HP_ERR_DEGENERATE);
  double bits = 0;
  ASSERT_EQ(hp_effective_id(100, 41.33, &bits), HP_OK);
  EXPECT_NEAR(bits, 1.7738064690, 1e-9);
  EXPECT_EQ(hp_effective_id(100, 0, &bits), HP_ERR_DEGENERATE);
  double tp = 0;
  ASSERT_EQ(hp_throughput(std::log2(5.0), 1.5, &tp), HP_OK);
  EXPECT_NEAR(tp, 1.547952, 1e-6);
  EXPECT_EQ(hp_throughput(1, 0, &tp), HP_ERR_DEGENERATE);
}

TEST(CApiTest, SessionLifecycle) {
  hp_session* s = nullptr;
  EXPECT_EQ(hp_session_create("{not json", &s), HP_ERR_PARSE);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(hp_session_create(R"({"distance":"orbit"})", &s), HP_ERR_METADATA);
  ASSERT_EQ(hp_session_create(R"({"participant":"p09","practice":true})", &s), HP_OK);
  EXPECT_STREQ(hp_session_phase(s), "welcome");

  hp_point cursor{};
  ASSERT_EQ(hp_session_push_pose(s, 0, kIdentityMid, &cursor), HP_OK);
  EXPECT_STREQ(hp_session_phase(s), "practice");
  EXPECT_EQ(hp_session_request_start(s), HP_OK);
  ASSERT_EQ(hp_session_push_pose(s, 16, kIdentityMid, &cursor), HP_OK);
  EXPECT_STREQ(hp_session_phase(s), "test1");
  EXPECT_EQ(hp_session_push_pose(s, 10, kIdentityMid, &cursor), HP_ERR_NON_MONOTONE_TIME);

  char* text = nullptr;
  ASSERT_EQ(hp_session_take_messages(s, &text), HP_OK);
  const std::string jsonl = take(text);
  EXPECT_EQ(count_lines(jsonl, "\"type\":\"phase\""), 2);
  ASSERT_EQ(hp_session_take_messages(s, &text), HP_OK);
  EXPECT_EQ(take(text), "");
  EXPECT_EQ(hp_session_trial_count(s), 0u);
  hp_session_destroy(s);

  EXPECT_EQ(hp_session_push_pose(nullptr, 0, kIdentityMid, &cursor), HP_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(hp_session_phase(nullptr), "");
  hp_session_destroy(nullptr);
}

TEST(CApiTest, ProtocolHandle) {
  hp_protocol* p = nullptr;
  ASSERT_EQ(hp_protocol_create(&p), HP_OK);
  char* replies = nullptr;
  int closing = -1;
  ASSERT_EQ(hp_protocol_handle(p, R"({"type":"hello"})", &replies, &closing), HP_OK);
  EXPECT_EQ(take(replies), "");
  EXPECT_EQ(closing, 0);
  ASSERT_EQ(hp_protocol_handle(p, R"({"type":"pose","t":0,"m":[1,0,0,0,0,1,0,0,0,0,1,0.4,0,0,0,1]})", &replies,
                               &closing),
            HP_OK);
  const std::string r = take(replies);
  EXPECT_NE(r.substr(0, r.find('\n')).find("\"type\":\"cursor\""), std::string::npos) << r;
  ASSERT_EQ(hp_protocol_handle(p, R"({"type":"end"})", &replies, &closing), HP_OK);
  take(replies);
  EXPECT_EQ(closing, 1);
  hp_protocol_destroy(p);
}

TEST(CApiTest, LayoutDocument) {
  char* doc = nullptr;
  ASSERT_EQ(hp_layout_document("alphabets", nullptr, &doc), HP_OK);
  const std::string s = take(doc);
  EXPECT_EQ(count_lines(s, "\"label\""), 15);
  EXPECT_EQ(hp_layout_document("emoji", nullptr, &doc), HP_ERR_INVALID_ARGUMENT);
  hp_screen narrow{200, 812, 0.3, 0.3 * 812 / 200};
  EXPECT_EQ(hp_layout_document("numbers", &narrow, &doc), HP_ERR_LAYOUT);
}

TEST(CApiTest, SynthReplayAnalyze) {
  const auto root = std::filesystem::temp_directory_path() / "headpoint_capi_test";
  std::filesystem::remove_all(root);
  hp_synth_options o;
  hp_synth_options_default(&o);
  o.participants = 2;
  o.seed = 3;
  o.distance = "near";
  size_t n = 0;
  ASSERT_EQ(hp_synth_study(&o, (root / "traces").c_str(), &n), HP_OK) << hp_last_error();
  EXPECT_EQ(n, 4u);
  ASSERT_EQ(hp_replay((root / "traces").c_str(), (root / "events").c_str(), &n), HP_OK) << hp_last_error();
  EXPECT_EQ(n, 4u);
  char* report = nullptr;
  ASSERT_EQ(hp_analyze((root / "events").c_str(), (root / "out").c_str(), 0, &report), HP_OK) << hp_last_error();
  const std::string r = take(report);
  EXPECT_NE(r.find("\"trial_rows\":70"), std::string::npos) << r;
  EXPECT_NE(r.find("\"sequence_rows\":4"), std::string::npos) << r;
  EXPECT_TRUE(std::filesystem::exists(root / "out" / "boxes.csv"));

  EXPECT_EQ(hp_replay((root / "missing.trace").c_str(), (root / "x.events").c_str(), &n), HP_ERR_IO);
  o.layout = "emoji";
  EXPECT_EQ(hp_synth_study(&o, root.c_str(), &n), HP_ERR_INVALID_ARGUMENT);
  std::filesystem::remove_all(root);
}

TEST(CApiTest, ServerStartStop) {
  hp_server* server = nullptr;
  ASSERT_EQ(hp_server_start("127.0.0.1", 0, &server), HP_OK) << hp_last_error();
  EXPECT_NE(hp_server_port(server), 0);
  hp_server* clash = nullptr;
  EXPECT_EQ(hp_server_start("127.0.0.1", hp_server_port(server), &clash), HP_ERR_IO);
  EXPECT_EQ(clash, nullptr);
  hp_server_stop(server);
  hp_server_stop(nullptr);
}

}  // namespace
