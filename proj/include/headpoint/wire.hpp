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

#include <string>
#include <string_view>

#include <json.hpp>

#include "headpoint/session.hpp"

namespace headpoint::wire {

using nlohmann::json;

// Session configuration as carried by the hello message and trace headers.
json config_to_json(const SessionConfig& config);
// Unknown keys are ignored; missing keys keep their defaults. Throws metadata.
SessionConfig config_from_json(const json& j);

json screen_to_json(const ScreenGeometry& screen);
ScreenGeometry screen_from_json(const json& j);

json message_to_json(const SessionMessage& message);
SessionMessage message_from_json(const json& j);  // throws parse

json cursor_message(double t, const ScreenPoint& cursor);
json error_message(std::string_view text);

// Compact single-line form used for frames and log lines.
std::string dump(const json& j);

}  // namespace headpoint::wire
