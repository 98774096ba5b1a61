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

#include "headpoint/session.hpp"

#include "headpoint/error.hpp"

namespace headpoint {

std::vector<Layout> build_session_layouts(const SessionConfig& config) {
  std::vector<Layout> layouts;
  for (LayoutName name : config.tests) layouts.push_back(build_layout(name, config.screen));
  return layouts;
}

PointingSession::PointingSession(SessionConfig config)
    : config_((config.validate(), std::move(config))),
      filter_(config_.smoothing_alpha),
      trials_(build_session_layouts(config_), config_.dwell.select) {}

void PointingSession::rebuild_dwell() {
  const Layout* layout = trials_.active_layout();
  if (!layout) {
    dwell_.reset();
    return;
  }
  dwell_.emplace(layout->registry(config_.dwell.glance_ms, config_.dwell.gaze_ms));
}

FrameOutput PointingSession::process_pose(const Pose& pose) {
  validate_pose(pose);
  if (last_t_ && pose.t_ms < *last_t_) throw Error(Errc::non_monotone_time, "pose timestamp went backwards");
  last_t_ = pose.t_ms;

  FrameOutput out;
  out.t = pose.t_ms;
  out.cursor = pointer_from_pose(head_, pose, config_.screen, filter_);

  if (trials_.phase() == SessionPhase::welcome) {
    if (config_.practice) {
      trials_.begin_practice();
    } else {
      trials_.begin_test(pose.t_ms);
    }
    out.messages.emplace_back(PhaseChange{pose.t_ms, trials_.phase()});
    rebuild_dwell();
  } else if (trials_.phase() == SessionPhase::practice && start_requested_) {
    trials_.begin_test(pose.t_ms);
    out.messages.emplace_back(PhaseChange{pose.t_ms, trials_.phase()});
    rebuild_dwell();
  }
  if (!dwell_) return out;

  const SessionPhase frame_phase = trials_.phase();
  for (GazeEvent& ev : dwell_->process_frame(pose.t_ms, out.cursor)) {
    // Events already computed for a layout that was just closed are logged
    // but no longer drive the trials.
    const bool drives = trials_.in_test() && trials_.phase() == frame_phase;
    GazeEvent copy = ev;
    out.messages.emplace_back(std::move(ev));
    if (!drives) continue;
    if (auto rec = trials_.advance(copy)) {
      out.messages.emplace_back(std::move(*rec));
      if (trials_.phase() != frame_phase) out.messages.emplace_back(PhaseChange{copy.t, trials_.phase()});
    }
  }
  if (trials_.phase() != frame_phase) rebuild_dwell();
  return out;
}

}  // namespace headpoint
