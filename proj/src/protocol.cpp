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

#include "headpoint/service.hpp"

#include <cmath>

#include "headpoint/error.hpp"
#include "headpoint/wire.hpp"

namespace headpoint {

namespace {

Pose pose_from_message(const wire::json& j) {
  Pose pose;
  pose.t_ms = j.at("t").get<double>();
  const wire::json& m = j.at("m");
  if (!m.is_array() || m.size() != 16) throw Error(Errc::protocol, "pose needs 16 matrix entries");
  for (std::size_t i = 0; i < 16; ++i) pose.m[i] = m[i].get<double>();
  return pose;
}

}  // namespace

std::vector<std::string> ProtocolHandler::on_text(std::string_view frame) {
  std::vector<std::string> replies;
  if (closing_) return replies;
  auto fail = [&](std::string_view text, bool close) {
    replies.push_back(wire::dump(wire::error_message(text)));
    closing_ = closing_ || close;
  };

  wire::json msg;
  try {
    msg = wire::json::parse(frame);
  } catch (const wire::json::exception&) {
    fail("malformed frame: not JSON", !session_);
    return replies;
  }
  const std::string type = msg.is_object() && msg.contains("type") && msg["type"].is_string()
                               ? msg["type"].get<std::string>()
                               : std::string();

  if (!session_) {
    if (type != "hello") {
      fail("expected hello before any other message", true);
      return replies;
    }
    try {
      session_.emplace(wire::config_from_json(msg));
    } catch (const Error& e) {
      fail(e.what(), true);
    }
    return replies;
  }

  if (type == "pose") {
    try {
      auto out = session_->process_pose(pose_from_message(msg));
      replies.push_back(wire::dump(wire::cursor_message(out.t, out.cursor)));
      for (const auto& m : out.messages) replies.push_back(wire::dump(wire::message_to_json(m)));
    } catch (const wire::json::exception& e) {
      fail(std::string("malformed pose: ") + e.what(), false);
    } catch (const Error& e) {
      fail(e.what(), false);
    }
  } else if (type == "start") {
    session_->request_start();
  } else if (type == "end") {
    closing_ = true;
  } else if (type == "hello") {
    fail("session already configured", false);
  } else {
    fail("unknown message type '" + type + "'", false);
  }
  return replies;
}

}  // namespace headpoint
