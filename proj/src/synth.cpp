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

#include "headpoint/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "headpoint/error.hpp"

namespace headpoint {

void MotionParams::validate() const {
  const bool ok = head_depth_m > 0.0 && move_ms_per_pt > 0.0 && min_move_ms > 0.0 && dwell_hold_ms > 0.0 &&
                  noise_sigma_pt >= 0.0 && frame_interval_ms > 0.0;
  if (!ok) throw Error(Errc::invalid_argument, "motion parameters need positive durations and sigma >= 0");
  if (anisotropy && !(anisotropy->ratio >= 1.0)) {
    throw Error(Errc::invalid_argument, "anisotropy ratio must be >= 1");
  }
}

double min_jerk(double start, double end, double duration, double t) {
  const double tau = t / duration;
  const double tau3 = tau * tau * tau;
  return start + (end - start) * (tau3 * (10.0 + tau * (-15.0 + 6.0 * tau)));
}

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

Vec2 sample_noise(const MotionParams& params, const SynthKey& key, std::uint32_t trial, std::uint32_t frame) {
  if (params.noise_sigma_pt == 0.0) return {};
  std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                    key.participant, static_cast<std::uint32_t>(key.distance),
                    static_cast<std::uint32_t>(key.layout), trial, frame};
  std::mt19937_64 rng(seq);

  const double major = params.noise_sigma_pt;
  const double minor = params.anisotropy ? major / params.anisotropy->ratio : major;
  double u = 0.0;
  double v = 0.0;
  // Box-Muller pairs, rejected outside the 3-sigma ellipse.
  for (;;) {
    const double u1 = 1.0 - unit_uniform(rng);
    const double u2 = unit_uniform(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double z0 = r * std::cos(2.0 * std::numbers::pi * u2);
    const double z1 = r * std::sin(2.0 * std::numbers::pi * u2);
    if (z0 * z0 + z1 * z1 <= 9.0) {
      u = z0 * major;
      v = z1 * minor;
      break;
    }
  }
  if (!params.anisotropy) return {u, v};
  const double a = params.anisotropy->axis_deg * std::numbers::pi / 180.0;
  return {u * std::cos(a) - v * std::sin(a), u * std::sin(a) + v * std::cos(a)};
}

double move_duration_ms(const MotionParams& params, double amplitude_pt) {
  return std::max(params.min_move_ms, params.move_ms_per_pt * amplitude_pt);
}

namespace {

std::size_t frames_for(double duration, double interval) {
  return static_cast<std::size_t>(std::ceil(duration / interval));
}

}  // namespace

std::size_t expected_frame_count(const Layout& layout, const std::vector<std::string>& sequence,
                                 const MotionParams& params) {
  Vec2 at = layout.screen.center();
  std::size_t total = 0;
  for (const auto& label : sequence) {
    const Vec2 c = layout.at(label).rect.center();
    total += frames_for(move_duration_ms(params, std::hypot(c.x - at.x, c.y - at.y)), params.frame_interval_ms);
    total += frames_for(params.dwell_hold_ms, params.frame_interval_ms);
    at = c;
  }
  return total;
}

std::vector<Pose> synth_session(const Layout& layout, const std::vector<std::string>& sequence,
                                const MotionParams& params, const SynthKey& key, double select_threshold_ms) {
  params.validate();
  double min_half = kNever;
  for (const auto& label : sequence) {
    const Rect& r = layout.at(label).rect;
    min_half = std::min({min_half, r.width / 2.0, r.height / 2.0});
  }
  if (!(params.noise_sigma_pt < min_half / 3.0)) {
    throw Error(Errc::invalid_argument, "noise sigma must stay below a third of the smallest target half-size");
  }
  if (params.dwell_hold_ms < select_threshold_ms + params.frame_interval_ms) {
    throw Error(Errc::invalid_argument, "dwell hold is too short to reach the selection threshold");
  }

  const Vec3 head{0.0, 0.0, params.head_depth_m};
  const double dt = params.frame_interval_ms;
  std::vector<Pose> frames;
  frames.reserve(expected_frame_count(layout, sequence, params));

  auto push = [&](double x, double y) {
    const double t = static_cast<double>(frames.size()) * dt;
    frames.push_back(pose_for_screen_point({x, y, true}, head, layout.screen, HeadModel{}, t));
  };

  Vec2 at = layout.screen.center();
  std::uint32_t trial = 0;
  for (const auto& label : sequence) {
    const Vec2 goal = layout.at(label).rect.center();
    const double duration = move_duration_ms(params, std::hypot(goal.x - at.x, goal.y - at.y));
    const std::size_t n_move = frames_for(duration, dt);
    for (std::size_t k = 0; k < n_move; ++k) {
      const double s = std::min(static_cast<double>(k) * dt, duration);
      push(min_jerk(at.x, goal.x, duration, s), min_jerk(at.y, goal.y, duration, s));
    }
    const std::size_t n_hold = frames_for(params.dwell_hold_ms, dt);
    for (std::size_t k = 0; k < n_hold; ++k) {
      const Vec2 off = sample_noise(params, key, trial, static_cast<std::uint32_t>(k));
      push(goal.x + off.x, goal.y + off.y);
    }
    at = goal;
    ++trial;
  }
  return frames;
}

}  // namespace headpoint
