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
#include <optional>
#include <string>
#include <vector>

#include "headpoint/geometry.hpp"
#include "headpoint/trials.hpp"

namespace headpoint {

struct Anisotropy {
  double axis_deg = 0.0;  // in screen coordinates (x right, y down)
  double ratio = 1.0;     // major / minor standard deviation
};

struct MotionParams {
  double head_depth_m = nominal_depth_m(DistanceMode::mid);
  double move_ms_per_pt = 2.0;
  double min_move_ms = 200.0;
  double dwell_hold_ms = 1200.0;
  double noise_sigma_pt = 4.0;  // standard deviation along the major axis
  std::optional<Anisotropy> anisotropy;
  double frame_interval_ms = 16.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// Identifies one synthetic session inside a study; part of every noise key.
struct SynthKey {
  std::uint32_t participant = 0;
  DistanceMode distance = DistanceMode::mid;
  LayoutName layout = LayoutName::numbers;
};

double min_jerk(double start, double end, double duration, double t);

// Hold-phase cursor offset for one frame, reproducible from its key alone.
Vec2 sample_noise(const MotionParams& params, const SynthKey& key, std::uint32_t trial, std::uint32_t frame);

double move_duration_ms(const MotionParams& params, double amplitude_pt);
std::size_t expected_frame_count(const Layout& layout, const std::vector<std::string>& sequence,
                                 const MotionParams& params);

/**
 * Cursor-space script for acquiring the sequence: a minimum-jerk move from
 * the current point to each target center followed by a noisy hold, every
 * frame inverse-mapped to a head pose at params.head_depth_m. The session
 * starts at the screen center at t = 0.
 *
 * Throws invalid_argument before generating anything when the noise could
 * leave the smallest target or the hold is too short to reach
 * `select_threshold_ms`.
 */
std::vector<Pose> synth_session(const Layout& layout, const std::vector<std::string>& sequence,
                                const MotionParams& params, const SynthKey& key,
                                double select_threshold_ms = 1000.0);

}  // namespace headpoint
