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

#include "headpoint/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "headpoint/error.hpp"

namespace headpoint {

namespace {

double at(const Mat4& m, int row, int col) { return m[static_cast<size_t>(row * 4 + col)]; }

[[noreturn]] void reject(const std::string& why) { throw Error(Errc::invalid_pose, "invalid pose: " + why); }

}  // namespace

Mat4 identity_matrix() {
  return {1.0, 0.0, 0.0, 0.0,  //
          0.0, 1.0, 0.0, 0.0,  //
          0.0, 0.0, 1.0, 0.0,  //
          0.0, 0.0, 0.0, 1.0};
}

void validate_pose(const Pose& pose) {
  if (!std::isfinite(pose.t_ms)) reject("non-finite timestamp");
  for (double v : pose.m) {
    if (!std::isfinite(v)) reject("non-finite matrix entry");
  }
  const Mat4& m = pose.m;
  if (std::abs(at(m, 3, 0)) > kAffineTolerance || std::abs(at(m, 3, 1)) > kAffineTolerance ||
      std::abs(at(m, 3, 2)) > kAffineTolerance || std::abs(at(m, 3, 3) - 1.0) > kAffineTolerance) {
    reject("bottom row is not (0,0,0,1)");
  }
  // Columns of R must be orthonormal: R^T R = I.
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      double dot = 0.0;
      for (int r = 0; r < 3; ++r) dot += at(m, r, a) * at(m, r, b);
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(dot - expected) > kRotationTolerance) {
        std::ostringstream os;
        os << "rotation block not orthonormal (column " << a << "." << b << " = " << dot << ")";
        reject(os.str());
      }
    }
  }
  const double det = at(m, 0, 0) * (at(m, 1, 1) * at(m, 2, 2) - at(m, 1, 2) * at(m, 2, 1)) -
                     at(m, 0, 1) * (at(m, 1, 0) * at(m, 2, 2) - at(m, 1, 2) * at(m, 2, 0)) +
                     at(m, 0, 2) * (at(m, 1, 0) * at(m, 2, 1) - at(m, 1, 1) * at(m, 2, 0));
  if (std::abs(det - 1.0) > kRotationTolerance) reject("rotation determinant is not +1");
}

bool is_valid_pose(const Pose& pose) noexcept {
  try {
    validate_pose(pose);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ScreenGeometry ScreenGeometry::with_size(double width_pt, double height_pt, double meters_per_ndc_x) {
  ScreenGeometry screen;
  screen.width_pt = width_pt;
  screen.height_pt = height_pt;
  screen.meters_per_ndc_x = meters_per_ndc_x;
  screen.meters_per_ndc_y = meters_per_ndc_x * (height_pt / width_pt);
  screen.validate();
  return screen;
}

void ScreenGeometry::validate() const {
  const bool ok = std::isfinite(width_pt) && std::isfinite(height_pt) && std::isfinite(meters_per_ndc_x) &&
                  std::isfinite(meters_per_ndc_y) && width_pt > 0.0 && height_pt > 0.0 &&
                  meters_per_ndc_x > 0.0 && meters_per_ndc_y > 0.0;
  if (!ok) throw Error(Errc::invalid_argument, "screen geometry needs positive finite extents");
}

Ray update_ray(const HeadModel& head, const Pose& pose) {
  const Mat4& m = pose.m;
  const Vec3& c = head.center;
  const Vec3& s = head.stylus;
  Ray ray;
  ray.origin = {at(m, 0, 0) * c.x + at(m, 0, 1) * c.y + at(m, 0, 2) * c.z + at(m, 0, 3),
                at(m, 1, 0) * c.x + at(m, 1, 1) * c.y + at(m, 1, 2) * c.z + at(m, 1, 3),
                at(m, 2, 0) * c.x + at(m, 2, 1) * c.y + at(m, 2, 2) * c.z + at(m, 2, 3)};
  ray.direction = {at(m, 0, 0) * s.x + at(m, 0, 1) * s.y + at(m, 0, 2) * s.z,
                   at(m, 1, 0) * s.x + at(m, 1, 1) * s.y + at(m, 1, 2) * s.z,
                   at(m, 2, 0) * s.x + at(m, 2, 1) * s.y + at(m, 2, 2) * s.z};
  return ray;
}

std::optional<Vec2> plane_intersection(const Ray& ray) {
  const Vec3& p = ray.origin;
  const Vec3& d = ray.direction;
  if (std::abs(d.z) <= kParallelEpsilon) return std::nullopt;
  const double t = -p.z / d.z;
  if (t < 0.0) return std::nullopt;
  return Vec2{p.x + d.x * t, p.y + d.y * t};
}

std::optional<Vec2> intersect_screen(const Ray& ray, const ScreenGeometry& screen) {
  const auto hit = plane_intersection(ray);
  if (!hit) return std::nullopt;
  return plane_to_ndc(*hit, screen);
}

Vec2 plane_to_ndc(Vec2 plane, const ScreenGeometry& screen) {
  // World y points up, screen y grows downward from the top-left corner.
  return {0.5 + plane.x / screen.meters_per_ndc_x, 0.5 - plane.y / screen.meters_per_ndc_y};
}

Vec2 screen_to_plane(Vec2 screen_pt, const ScreenGeometry& screen) {
  return {(screen_pt.x / screen.width_pt - 0.5) * screen.meters_per_ndc_x,
          (0.5 - screen_pt.y / screen.height_pt) * screen.meters_per_ndc_y};
}

ScreenPoint ndc_to_screen(Vec2 ndc, const ScreenGeometry& screen) {
  ScreenPoint out;
  out.in_bounds = ndc.x >= 0.0 && ndc.x <= 1.0 && ndc.y >= 0.0 && ndc.y <= 1.0;
  out.x = std::clamp(ndc.x, 0.0, 1.0) * screen.width_pt;
  out.y = std::clamp(ndc.y, 0.0, 1.0) * screen.height_pt;
  return out;
}

SmoothingFilter::SmoothingFilter(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(Errc::invalid_argument, "smoothing alpha must lie in (0, 1]");
}

ScreenPoint SmoothingFilter::smooth(const ScreenPoint& point) {
  if (!state_ || alpha_ == 1.0) {
    state_ = point;
    return point;
  }
  ScreenPoint out = point;
  out.x = alpha_ * point.x + (1.0 - alpha_) * state_->x;
  out.y = alpha_ * point.y + (1.0 - alpha_) * state_->y;
  state_ = out;
  return out;
}

ScreenPoint pointer_from_pose(const HeadModel& head, const Pose& pose, const ScreenGeometry& screen,
                              SmoothingFilter& filter) {
  const auto ndc = intersect_screen(update_ray(head, pose), screen);
  if (!ndc) {
    if (filter.last()) return *filter.last();
    const Vec2 c = screen.center();
    return {c.x, c.y, true};
  }
  return filter.smooth(ndc_to_screen(*ndc, screen));
}

Mat4 yaw_pitch_transform(double yaw_rad, double pitch_rad, const Vec3& translation) {
  const double cy = std::cos(yaw_rad);
  const double sy = std::sin(yaw_rad);
  const double cp = std::cos(pitch_rad);
  const double sp = std::sin(pitch_rad);
  // R_y(yaw) * R_x(pitch)
  return {cy,  sy * sp, sy * cp,  translation.x,  //
          0.0, cp,      -sp,      translation.y,  //
          -sy, cy * sp, cy * cp,  translation.z,  //
          0.0, 0.0,     0.0,      1.0};
}

Pose pose_for_screen_point(const ScreenPoint& target, const Vec3& head_position, const ScreenGeometry& screen,
                           const HeadModel& head, double t_ms) {
  if (!(head_position.z > 0.0)) throw Error(Errc::invalid_argument, "head must be in front of the screen (z > 0)");
  if (head.stylus.x != 0.0 || head.stylus.y != 0.0 || head.stylus.z != -1.0) {
    throw Error(Errc::invalid_argument, "inverse mapping requires the default stylus direction (0,0,-1)");
  }
  if (!(target.x >= 0.0 && target.x <= screen.width_pt && target.y >= 0.0 && target.y <= screen.height_pt)) {
    throw Error(Errc::out_of_bounds, "target outside the screen is unreachable");
  }
  const Vec2 b = screen_to_plane({target.x, target.y}, screen);
  const double vx = b.x - head_position.x;
  const double vy = b.y - head_position.y;
  const double vz = -head_position.z;
  // Stylus after R_y(yaw) R_x(pitch) is (-sin(yaw)cos(pitch), sin(pitch), -cos(yaw)cos(pitch)).
  const double yaw = std::atan2(-vx, -vz);
  const double pitch = std::atan2(vy, std::hypot(vx, vz));

  Mat4 m = yaw_pitch_transform(yaw, pitch, {});
  // Place the transformed head center exactly on head_position.
  const Vec3& c = head.center;
  m[3] = head_position.x - (m[0] * c.x + m[1] * c.y + m[2] * c.z);
  m[7] = head_position.y - (m[4] * c.x + m[5] * c.y + m[6] * c.z);
  m[11] = head_position.z - (m[8] * c.x + m[9] * c.y + m[10] * c.z);
  return Pose{t_ms, m};
}

}  // namespace headpoint
