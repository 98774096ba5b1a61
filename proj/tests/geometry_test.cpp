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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "headpoint/error.hpp"
#include "headpoint/geometry.hpp"

namespace headpoint {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

Pose translated(double x, double y, double z) {
  Pose p;
  p.m[3] = x;
  p.m[7] = y;
  p.m[11] = z;
  return p;
}

// Rotation about y written out independently of yaw_pitch_transform.
Pose yawed(double degrees, double z = 0.0) {
  const double c = std::cos(degrees * kDeg);
  const double s = std::sin(degrees * kDeg);
  Pose p;
  p.m = {c, 0, s, 0, 0, 1, 0, 0, -s, 0, c, z, 0, 0, 0, 1};
  return p;
}

TEST(UpdateRayTest, IdentityKeepsHeadAndStylus) {
  const Ray r = update_ray(HeadModel{{0, 0, 0.5}, {0, 0, -1}}, Pose{});
  EXPECT_EQ(r.origin.x, 0.0);
  EXPECT_EQ(r.origin.z, 0.5);
  EXPECT_EQ(r.direction.z, -1.0);
}

TEST(UpdateRayTest, TranslationMovesHeadButNotStylus) {
  const Ray r = update_ray(HeadModel{{0, 0, 0.5}, {0, 0, -1}}, translated(0.1, 0.2, 0.0));
  EXPECT_DOUBLE_EQ(r.origin.x, 0.1);
  EXPECT_DOUBLE_EQ(r.origin.y, 0.2);
  EXPECT_DOUBLE_EQ(r.origin.z, 0.5);
  EXPECT_EQ(r.direction.x, 0.0);
  EXPECT_EQ(r.direction.y, 0.0);
  EXPECT_EQ(r.direction.z, -1.0);
}

TEST(UpdateRayTest, YawTenDegrees) {
  const Ray r = update_ray(HeadModel{{0, 0, 0.5}, {0, 0, -1}}, yawed(10.0));
  EXPECT_NEAR(r.direction.x, -std::sin(10.0 * kDeg), 1e-15);
  EXPECT_NEAR(r.direction.x, -0.17365, 1e-5);
  EXPECT_NEAR(r.direction.y, 0.0, 1e-15);
  EXPECT_NEAR(r.direction.z, -0.98481, 1e-5);
  // p = W * p0 with p0 on the z axis.
  EXPECT_NEAR(r.origin.x, 0.5 * std::sin(10.0 * kDeg), 1e-15);
  EXPECT_NEAR(r.origin.z, 0.5 * std::cos(10.0 * kDeg), 1e-15);
}

TEST(UpdateRayTest, AddedTranslationNeverChangesDirection) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Mat4 base = yaw_pitch_transform(u(rng), u(rng), {});
    Pose a{0.0, base};
    Pose b = a;
    b.m[3] += u(rng);
    b.m[7] += u(rng);
    b.m[11] += u(rng);
    const Ray ra = update_ray({}, a);
    const Ray rb = update_ray({}, b);
    EXPECT_EQ(ra.direction.x, rb.direction.x);
    EXPECT_EQ(ra.direction.y, rb.direction.y);
    EXPECT_EQ(ra.direction.z, rb.direction.z);
  }
}

TEST(IntersectTest, StraightAheadLandsUnderHead) {
  const auto b = plane_intersection({{0.1, 0.2, 0.5}, {0, 0, -1}});
  ASSERT_TRUE(b);
  EXPECT_DOUBLE_EQ(b->x, 0.1);
  EXPECT_DOUBLE_EQ(b->y, 0.2);
}

TEST(IntersectTest, UnitDepthLinearOffset) {
  const auto b = plane_intersection({{0, 0, 1}, {0.2, 0, -1}});
  ASSERT_TRUE(b);
  EXPECT_DOUBLE_EQ(b->x, 0.2);
  EXPECT_DOUBLE_EQ(b->y, 0.0);
}

TEST(IntersectTest, RayAwayFromPlaneMisses) {
  EXPECT_FALSE(plane_intersection({{0, 0, 0.5}, {0, 0, 1}}));
  EXPECT_FALSE(plane_intersection({{0, 0, 0.5}, {1, 0, 0}}));
  EXPECT_FALSE(plane_intersection({{0, 0, 0.5}, {1, 0, 1e-10}}));
  // Behind the screen looking further away.
  EXPECT_FALSE(plane_intersection({{0, 0, -0.5}, {0, 0, -1}}));
}

TEST(IntersectTest, YawTenDegreesAtHalfMeter) {
  const auto b = plane_intersection(update_ray({}, yawed(10.0, 0.5)));
  ASSERT_TRUE(b);
  EXPECT_NEAR(b->x, -0.5 * std::tan(10.0 * kDeg), 1e-15);
  EXPECT_NEAR(b->x, -0.088163, 1e-6);
}

TEST(IntersectTest, NdcCentersOnOrigin) {
  const auto ndc = intersect_screen({{0, 0, 0.5}, {0, 0, -1}}, ScreenGeometry{});
  ASSERT_TRUE(ndc);
  EXPECT_DOUBLE_EQ(ndc->x, 0.5);
  EXPECT_DOUBLE_EQ(ndc->y, 0.5);
}

TEST(IntersectTest, OutsideNdcIsNotClamped) {
  const auto ndc = intersect_screen({{0.3, 0, 0.5}, {0, 0, -1}}, ScreenGeometry{});
  ASSERT_TRUE(ndc);
  EXPECT_DOUBLE_EQ(ndc->x, 1.5);
}

TEST(IntersectTest, TranslationEquivariance) {
  const ScreenGeometry screen;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  const auto base = plane_intersection(update_ray({}, translated(0, 0, 0.4)));
  for (int i = 0; i < 100; ++i) {
    const double dx = u(rng), dy = u(rng);
    const auto b = plane_intersection(update_ray({}, translated(dx, dy, 0.4)));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->x - base->x, dx);
    EXPECT_EQ(b->y - base->y, dy);
  }
}

TEST(NdcToScreenTest, Examples) {
  const ScreenGeometry screen;
  ScreenPoint c = ndc_to_screen({0.5, 0.5}, screen);
  EXPECT_EQ(c.x, 187.5);
  EXPECT_EQ(c.y, 406.0);
  EXPECT_TRUE(c.in_bounds);

  ScreenPoint o = ndc_to_screen({0.0, 0.0}, screen);
  EXPECT_EQ(o.x, 0.0);
  EXPECT_EQ(o.y, 0.0);
  EXPECT_TRUE(o.in_bounds);

  ScreenPoint r = ndc_to_screen({1.2, 0.5}, screen);
  EXPECT_EQ(r.x, 375.0);
  EXPECT_EQ(r.y, 406.0);
  EXPECT_FALSE(r.in_bounds);
}

TEST(PointerFromPoseTest, StraightAheadIsScreenCenter) {
  SmoothingFilter f;
  const ScreenPoint p = pointer_from_pose({}, translated(0, 0, 0.5), ScreenGeometry{}, f);
  EXPECT_DOUBLE_EQ(p.x, 187.5);
  EXPECT_DOUBLE_EQ(p.y, 406.0);
}

TEST(PointerFromPoseTest, HeadModelOffsetOnIdentityPose) {
  SmoothingFilter f;
  const ScreenPoint p = pointer_from_pose(HeadModel{{0, 0, 0.5}, {0, 0, -1}}, Pose{}, ScreenGeometry{}, f);
  EXPECT_DOUBLE_EQ(p.x, 187.5);
  EXPECT_DOUBLE_EQ(p.y, 406.0);
}

TEST(PointerFromPoseTest, YawTenDegreesChainsToPoints) {
  SmoothingFilter f;
  const ScreenPoint p = pointer_from_pose({}, yawed(10.0, 0.5), ScreenGeometry{}, f);
  const double ndc = 0.5 - 0.5 * std::tan(10.0 * kDeg) / 0.3;
  EXPECT_NEAR(ndc, 0.20612, 1e-5);
  EXPECT_NEAR(p.x, ndc * 375.0, 1e-12);
  EXPECT_NEAR(p.x, 77.30, 0.005);
}

TEST(PointerFromPoseTest, IdenticalPosesGiveIdenticalOutput) {
  SmoothingFilter f(0.4);
  const Pose pose = yawed(-7.0, 0.33);
  const ScreenPoint a = pointer_from_pose({}, pose, ScreenGeometry{}, f);
  const ScreenPoint b = pointer_from_pose({}, pose, ScreenGeometry{}, f);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
}

TEST(PointerFromPoseTest, MissHoldsLastCursorOrCenter) {
  SmoothingFilter f;
  const ScreenGeometry screen;
  Pose away = yawed(180.0, 0.5);  // stylus now points to +z
  ScreenPoint first = pointer_from_pose({}, away, screen, f);
  EXPECT_EQ(first.x, 187.5);
  EXPECT_EQ(first.y, 406.0);

  const ScreenPoint seen = pointer_from_pose({}, yawed(5.0, 0.5), screen, f);
  const ScreenPoint held = pointer_from_pose({}, away, screen, f);
  EXPECT_EQ(held.x, seen.x);
  EXPECT_EQ(held.y, seen.y);
}

TEST(PoseForScreenPointTest, CenterIsIdentityRotation) {
  const Pose p = pose_for_screen_point({187.5, 406.0, true}, {0, 0, 0.4}, ScreenGeometry{});
  const Mat4 id = identity_matrix();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(p.m[r * 4 + c], id[r * 4 + c], 1e-15);
  }
  EXPECT_EQ(p.m[11], 0.4);
}

TEST(PoseForScreenPointTest, InvertsTheTenDegreeExample) {
  const ScreenGeometry screen;
  const double x = (0.5 - 0.5 * std::tan(10.0 * kDeg) / 0.3) * 375.0;
  const Pose p = pose_for_screen_point({x, 406.0, true}, {0, 0, 0.5}, screen);
  // For a pure yaw, m[2] = sin(yaw), m[0] = cos(yaw).
  const double yaw = std::atan2(p.m[2], p.m[0]) / kDeg;
  EXPECT_NEAR(yaw, 10.0, 1e-6);
}

TEST(PoseForScreenPointTest, RoundTripWithOffsetHeadAndNonDefaultCenter) {
  const ScreenGeometry screen = ScreenGeometry::with_size(390, 844, 0.25);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(0.0, 390.0), uy(0.0, 844.0), off(-0.05, 0.05);
  const HeadModel head{{0.01, -0.02, 0.03}, {0, 0, -1}};
  for (int i = 0; i < 500; ++i) {
    const ScreenPoint q{ux(rng), uy(rng), true};
    const Vec3 h{off(rng), off(rng), 0.3 + std::abs(off(rng))};
    const Pose pose = pose_for_screen_point(q, h, screen, head);
    ASSERT_TRUE(is_valid_pose(pose));
    SmoothingFilter f;
    const ScreenPoint back = pointer_from_pose(head, pose, screen, f);
    EXPECT_NEAR(back.x, q.x, 1e-9);
    EXPECT_NEAR(back.y, q.y, 1e-9);
    const Ray r = update_ray(head, pose);
    EXPECT_NEAR(r.origin.x, h.x, 1e-15);
    EXPECT_NEAR(r.origin.z, h.z, 1e-15);
  }
}

TEST(PoseForScreenPointTest, RejectsUnreachableTargets) {
  const ScreenGeometry screen;
  EXPECT_THROW(pose_for_screen_point({400, 10, true}, {0, 0, 0.4}, screen), Error);
  EXPECT_THROW(pose_for_screen_point({10, 10, true}, {0, 0, 0.0}, screen), Error);
}

TEST(SmoothingTest, AlphaOneIsPassThrough) {
  SmoothingFilter f(1.0);
  f.smooth({3, 4, true});
  const ScreenPoint p = f.smooth({0.1, 1e9, false});
  EXPECT_EQ(p.x, 0.1);
  EXPECT_EQ(p.y, 1e9);
  EXPECT_FALSE(p.in_bounds);
}

TEST(SmoothingTest, HalfAlphaConverges) {
  SmoothingFilter f(0.5);
  EXPECT_EQ(f.smooth({0, 0, true}).x, 0.0);  // first call returns its input
  EXPECT_EQ(f.smooth({10, 10, true}).x, 5.0);
  EXPECT_EQ(f.smooth({10, 10, true}).x, 7.5);
  const ScreenPoint third = f.smooth({10, 10, true});
  EXPECT_EQ(third.x, 8.75);
  EXPECT_EQ(third.y, 8.75);
  ScreenPoint last = third;
  for (int i = 0; i < 60; ++i) last = f.smooth({10, 10, true});
  EXPECT_NEAR(last.x, 10.0, 1e-12);
}

TEST(SmoothingTest, RejectsAlphaOutsideRange) {
  EXPECT_THROW(SmoothingFilter(0.0), Error);
  EXPECT_THROW(SmoothingFilter(1.5), Error);
}

TEST(ValidatePoseTest, AcceptsRigidTransforms) {
  EXPECT_NO_THROW(validate_pose(Pose{}));
  EXPECT_NO_THROW(validate_pose(Pose{0, yaw_pitch_transform(0.3, -0.2, {0.1, 0.2, 0.3})}));
}

TEST(ValidatePoseTest, RejectsNonRigidTransforms) {
  Pose scaled;
  scaled.m[0] = 2.0;
  EXPECT_THROW(validate_pose(scaled), Error);

  Pose mirrored;
  mirrored.m[0] = -1.0;  // orthonormal, determinant -1
  EXPECT_THROW(validate_pose(mirrored), Error);

  Pose projective;
  projective.m[12] = 0.5;
  EXPECT_THROW(validate_pose(projective), Error);

  Pose nan;
  nan.m[5] = std::nan("");
  EXPECT_THROW(validate_pose(nan), Error);

  Pose slightly_off;
  slightly_off.m[0] = 1.0 + 1e-8;
  EXPECT_NO_THROW(validate_pose(slightly_off));
}

}  // namespace
}  // namespace headpoint
