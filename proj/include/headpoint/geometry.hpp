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

#include <array>
#include <optional>

namespace headpoint {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Row-major 4x4 homogeneous transform.
using Mat4 = std::array<double, 16>;

Mat4 identity_matrix();

inline constexpr double kRotationTolerance = 1e-6;
inline constexpr double kAffineTolerance = 1e-9;
inline constexpr double kParallelEpsilon = 1e-9;

/**
 * World transform of the tracked head anchor at a point in time.
 *
 * The upper-left 3x3 block must be a proper rotation and the bottom row
 * (0,0,0,1); validate_pose() enforces both at ingest.
 */
struct Pose {
  double t_ms = 0.0;
  Mat4 m = identity_matrix();

  Vec3 translation() const { return {m[3], m[7], m[11]}; }
};

// Throws Error(invalid_pose) describing the first violated invariant.
void validate_pose(const Pose& pose);
bool is_valid_pose(const Pose& pose) noexcept;

/**
 * Head center and stylus direction in the anchor's object space. The head
 * center is a point (implicit homogeneous w = 1); the stylus is a direction.
 */
struct HeadModel {
  Vec3 center{0.0, 0.0, 0.0};
  Vec3 stylus{0.0, 0.0, -1.0};
};

enum class NdcOrigin { top_left };

/**
 * The screen plane sits at z = 0 with the viewer on the +z side. The region
 * of the plane mapped onto NDC [0,1]^2 is centered on the world origin and
 * spans meters_per_ndc_x by meters_per_ndc_y.
 */
struct ScreenGeometry {
  double width_pt = 375.0;
  double height_pt = 812.0;
  double meters_per_ndc_x = 0.3;
  double meters_per_ndc_y = 0.3 * (812.0 / 375.0);
  NdcOrigin ndc_origin = NdcOrigin::top_left;

  // Physical gain keeps the default 0.3 m horizontally and follows the aspect.
  static ScreenGeometry with_size(double width_pt, double height_pt, double meters_per_ndc_x = 0.3);

  void validate() const;
  Vec2 center() const { return {width_pt / 2.0, height_pt / 2.0}; }
};

struct ScreenPoint {
  double x = 0.0;
  double y = 0.0;
  bool in_bounds = true;

  friend bool operator==(const ScreenPoint&, const ScreenPoint&) = default;
};

struct Ray {
  Vec3 origin;
  Vec3 direction;
};

// Head center is transformed as a point, the stylus by the 3x3 block only.
Ray update_ray(const HeadModel& head, const Pose& pose);

// Intersection with the z = 0 plane in plane meters; nullopt when the ray is
// parallel to the plane or points away from it.
std::optional<Vec2> plane_intersection(const Ray& ray);

// Plane intersection expressed in NDC; values outside [0,1] are kept as-is.
std::optional<Vec2> intersect_screen(const Ray& ray, const ScreenGeometry& screen);

Vec2 plane_to_ndc(Vec2 plane, const ScreenGeometry& screen);
Vec2 screen_to_plane(Vec2 screen_pt, const ScreenGeometry& screen);

ScreenPoint ndc_to_screen(Vec2 ndc, const ScreenGeometry& screen);

/// Per-axis exponential moving average. alpha == 1 is an exact pass-through.
class SmoothingFilter {
 public:
  explicit SmoothingFilter(double alpha = 1.0);

  ScreenPoint smooth(const ScreenPoint& point);
  const std::optional<ScreenPoint>& last() const { return state_; }
  double alpha() const { return alpha_; }
  void reset() { state_.reset(); }

 private:
  double alpha_;
  std::optional<ScreenPoint> state_;
};

/**
 * Full head-to-cursor chain: ray update, plane intersection, viewport
 * transform and smoothing. When the stylus misses the plane the previous
 * smoothed cursor is held (screen center if there is no history yet).
 */
ScreenPoint pointer_from_pose(const HeadModel& head, const Pose& pose, const ScreenGeometry& screen,
                              SmoothingFilter& filter);

/**
 * Inverse mapping: a pose with its head center at head_position whose stylus
 * lands on target. Rotation is yaw about y followed by pitch about x, no
 * roll. Requires the default stylus direction (0,0,-1).
 */
Pose pose_for_screen_point(const ScreenPoint& target, const Vec3& head_position,
                           const ScreenGeometry& screen, const HeadModel& head = {}, double t_ms = 0.0);

// R_y(yaw) * R_x(pitch) with the given translation.
Mat4 yaw_pitch_transform(double yaw_rad, double pitch_rad, const Vec3& translation);

}  // namespace headpoint
