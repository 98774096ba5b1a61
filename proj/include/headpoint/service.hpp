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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "headpoint/session.hpp"

namespace headpoint {

/**
 * Message protocol of one connection, independent of the transport.
 *
 * Inbound text frames hold one JSON object each:
 *   {"type":"hello", <session config>}   must come first
 *   {"type":"pose","t":ms,"m":[16 reals]}
 *   {"type":"start"}                     ends an unlimited practice phase
 *   {"type":"end"}
 * Outbound: cursor, event, trial, phase and error objects, in the order the
 * session produced them.
 */
class ProtocolHandler {
 public:
  std::vector<std::string> on_text(std::string_view frame);

  // Once set, the transport must flush the replies and close.
  bool closing() const { return closing_; }
  const PointingSession* session() const { return session_ ? &*session_ : nullptr; }

 private:
  std::optional<PointingSession> session_;
  bool closing_ = false;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  std::uint16_t port = 8765;  // 0 picks an ephemeral port
  int threads = 2;
};

/// WebSocket server, one PointingSession per connection.
class SessionServer {
 public:
  explicit SessionServer(ServerOptions options);
  ~SessionServer();

  SessionServer(const SessionServer&) = delete;
  SessionServer& operator=(const SessionServer&) = delete;

  // Binds and starts the worker threads; throws io on bind failure.
  void start();
  void stop();
  std::uint16_t port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace headpoint
