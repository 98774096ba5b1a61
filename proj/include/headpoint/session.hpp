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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "headpoint/dwell.hpp"
#include "headpoint/geometry.hpp"
#include "headpoint/trials.hpp"

namespace headpoint {

struct PhaseChange {
  double t = 0.0;
  SessionPhase phase = SessionPhase::welcome;

  friend bool operator==(const PhaseChange&, const PhaseChange&) = default;
};

// Everything a session reports besides the cursor itself.
using SessionMessage = std::variant<PhaseChange, GazeEvent, TrialRecord>;

struct FrameOutput {
  double t = 0.0;
  ScreenPoint cursor;
  std::vector<SessionMessage> messages;
};

/**
 * One interactive session: pose -> cursor -> dwell events -> trials.
 *
 * The first accepted pose leaves the welcome screen, entering practice when
 * the config asks for it and test 1 otherwise. request_start() ends practice
 * on the next pose. Rejected poses (invalid or out of order) leave the
 * session untouched.
 */
class PointingSession {
 public:
  explicit PointingSession(SessionConfig config);

  FrameOutput process_pose(const Pose& pose);
  void request_start() { start_requested_ = true; }

  const SessionConfig& config() const { return config_; }
  const TrialSession& trials() const { return trials_; }
  SessionPhase phase() const { return trials_.phase(); }

 private:
  void rebuild_dwell();

  SessionConfig config_;
  HeadModel head_;
  SmoothingFilter filter_;
  TrialSession trials_;
  std::optional<DwellEngine> dwell_;
  std::optional<double> last_t_;
  bool start_requested_ = false;
};

std::vector<Layout> build_session_layouts(const SessionConfig& config);

}  // namespace headpoint
