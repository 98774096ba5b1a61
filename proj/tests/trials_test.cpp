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
#include <set>

#include <gtest/gtest.h>

#include "headpoint/error.hpp"
#include "headpoint/trials.hpp"

namespace headpoint {
namespace {

GazeEvent select_on(const Layout& layout, const std::string& label, double t, EventKind kind = EventKind::glance) {
  return {t, layout.at(label).id, kind, 1.0, layout.at(label).center()};
}

TEST(LayoutTest, AlphabetsIsAThreeByFiveGrid) {
  const Layout l = build_layout(LayoutName::alphabets, ScreenGeometry{});
  ASSERT_EQ(l.targets.size(), 15u);
  std::set<double> xs, ys;
  for (const auto& t : l.targets) {
    xs.insert(t.rect.x);
    ys.insert(t.rect.y);
    EXPECT_EQ(t.rect.width, 110.0);
    EXPECT_EQ(t.rect.height, 110.0);
  }
  EXPECT_EQ(xs.size(), 3u);
  EXPECT_EQ(ys.size(), 5u);
  for (size_t i = 0; i < l.targets.size(); ++i) {
    for (size_t j = i + 1; j < l.targets.size(); ++j) EXPECT_FALSE(l.targets[i].rect.intersects(l.targets[j].rect));
  }
  // Margins equal the gaps on both axes.
  const double gap_x = *xs.begin();
  EXPECT_DOUBLE_EQ(gap_x, (375.0 - 330.0) / 4.0);
  EXPECT_DOUBLE_EQ(375.0 - (*xs.rbegin() + 110.0), gap_x);
  const double gap_y = *ys.begin();
  EXPECT_NEAR(812.0 - (*ys.rbegin() + 110.0), gap_y, 1e-9);
  // Row-major labels: A B C on the top row.
  EXPECT_EQ(l.at("A").rect.y, l.at("C").rect.y);
  EXPECT_LT(l.at("A").rect.x, l.at("B").rect.x);
  EXPECT_LT(l.at("C").rect.y, l.at("D").rect.y);
  EXPECT_EQ(l.at("O").rect.y, *ys.rbegin());
}

TEST(LayoutTest, FiveIsNearestTheCenterOfTheKeypad) {
  const ScreenGeometry screen;
  const Layout l = build_layout(LayoutName::numbers, screen);
  ASSERT_EQ(l.targets.size(), 10u);
  const Vec2 c = screen.center();
  std::string nearest;
  double best = 1e9;
  for (const auto& t : l.targets) {
    const Vec2 tc = t.rect.center();
    const double d = std::hypot(tc.x - c.x, tc.y - c.y);
    if (d < best) {
      best = d;
      nearest = t.label;
    }
  }
  EXPECT_EQ(nearest, "5");
  // Keypad arrangement: 1 2 3 on top, 0 below 8.
  EXPECT_EQ(l.at("1").rect.y, l.at("3").rect.y);
  EXPECT_LT(l.at("1").rect.y, l.at("4").rect.y);
  EXPECT_EQ(l.at("0").rect.x, l.at("8").rect.x);
  EXPECT_GT(l.at("0").rect.y, l.at("8").rect.y);
  EXPECT_DOUBLE_EQ(l.at("2").rect.x - l.at("1").rect.x, 102.0);
}

TEST(LayoutTest, OverflowIsAnError) {
  try {
    build_layout(LayoutName::alphabets, ScreenGeometry::with_size(340, 812));
    FAIL() << "letter grid should not fit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::out_of_bounds);
  }
  EXPECT_THROW(build_layout(LayoutName::numbers, ScreenGeometry::with_size(290, 812)), Error);
  EXPECT_THROW(build_layout(LayoutName::numbers, ScreenGeometry{}, {90, 90, -1}), Error);
  EXPECT_NO_THROW(build_layout(LayoutName::numbers, ScreenGeometry::with_size(294, 812)));
}

TEST(LayoutTest, SequencesAreFixed) {
  const auto n = trial_sequence(LayoutName::numbers);
  std::string joined;
  for (const auto& s : n) joined += s;
  EXPECT_EQ(joined, "12345678901928376405");
  const auto a = trial_sequence(LayoutName::alphabets);
  ASSERT_EQ(a.size(), 15u);
  EXPECT_EQ(a.front(), "A");
  EXPECT_EQ(a.back(), "O");
}

TEST(LayoutTest, NominalDepthsAreIntervalMidpoints) {
  EXPECT_DOUBLE_EQ(nominal_depth_m(DistanceMode::near), 0.3302);
  EXPECT_DOUBLE_EQ(nominal_depth_m(DistanceMode::mid), 0.4318);
  EXPECT_DOUBLE_EQ(nominal_depth_m(DistanceMode::far), 0.5334);
}

class SessionTest : public ::testing::Test {
 protected:
  ScreenGeometry screen_;
  Layout numbers_ = build_layout(LayoutName::numbers, screen_);
  Layout alphabets_ = build_layout(LayoutName::alphabets, screen_);
};

TEST_F(SessionTest, TwentyCorrectSelectionsCompleteTheNumbersTest) {
  TrialSession s({numbers_});
  s.begin_test(100.0);
  double t = 100.0;
  const auto seq = trial_sequence(LayoutName::numbers);
  for (size_t i = 0; i < seq.size(); ++i) {
    ASSERT_EQ(s.current_target(), seq[i]);
    t += 1000.0 + static_cast<double>(i);
    ASSERT_TRUE(s.advance(select_on(numbers_, seq[i], t)));
  }
  EXPECT_TRUE(s.complete());
  const auto log = s.session_log();
  ASSERT_EQ(log.size(), 20u);
  for (size_t i = 1; i < log.size(); ++i) EXPECT_GT(log[i].t_select, log[i - 1].t_select);
  EXPECT_EQ(log[0].movement_time_ms, 1000.0);
  EXPECT_EQ(log[0].prev_center.x, 187.5);
  EXPECT_EQ(log[0].prev_center.y, 406.0);
  EXPECT_EQ(log[5].movement_time_ms, 1005.0);
}

TEST_F(SessionTest, WrongTargetIsIgnored) {
  TrialSession s({numbers_});
  s.begin_test(0.0);
  EXPECT_FALSE(s.advance(select_on(numbers_, "7", 1000)));
  EXPECT_EQ(s.cursor_index(), 0);
  EXPECT_EQ(s.ignored_selections(), 1u);
  EXPECT_TRUE(s.records().empty());
  // The expected target stays selectable.
  EXPECT_TRUE(s.advance(select_on(numbers_, "1", 1500)));
  EXPECT_EQ(s.current_target(), "2");
  EXPECT_EQ(s.next_target(), "3");
}

TEST_F(SessionTest, OnlyTheConfiguredKindSelects) {
  TrialSession s({numbers_}, EventKind::gaze);
  s.begin_test(0.0);
  EXPECT_FALSE(s.advance(select_on(numbers_, "1", 1000, EventKind::glance)));
  EXPECT_FALSE(s.advance(select_on(numbers_, "1", 1000, EventKind::progress)));
  EXPECT_TRUE(s.advance(select_on(numbers_, "1", 2000, EventKind::gaze)));
}

TEST_F(SessionTest, ForeignWidgetIsAProtocolError) {
  TrialSession s({numbers_});
  s.begin_test(0.0);
  try {
    s.advance(select_on(alphabets_, "A", 1000));
    FAIL() << "accepted a foreign widget";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::protocol);
  }
}

TEST_F(SessionTest, AdvanceOutsideATestIsAStateError) {
  TrialSession s({numbers_});
  EXPECT_THROW(s.advance(select_on(numbers_, "1", 0)), Error);
  s.begin_practice();
  EXPECT_EQ(s.phase(), SessionPhase::practice);
  EXPECT_EQ(s.active_layout()->name, LayoutName::numbers);
  EXPECT_THROW(s.advance(select_on(numbers_, "1", 0)), Error);
}

TEST_F(SessionTest, IncompleteLogIsAnError) {
  TrialSession s({alphabets_});
  s.begin_test(0.0);
  s.advance(select_on(alphabets_, "A", 1000));
  try {
    s.session_log();
    FAIL() << "incomplete session produced a log";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::incomplete_session);
  }
}

TEST_F(SessionTest, AmplitudeFromOneToNineIsTheKeypadDiagonal) {
  TrialSession s({numbers_});
  s.begin_test(0.0);
  double t = 0;
  for (const auto& label : trial_sequence(LayoutName::numbers)) s.advance(select_on(numbers_, label, t += 1000));
  const auto log = s.session_log();
  // Trial 11 goes from "1" to "9".
  ASSERT_EQ(log[11].target_label, "9");
  const Vec2 a = numbers_.at("1").rect.center();
  const Vec2 b = numbers_.at("9").rect.center();
  EXPECT_DOUBLE_EQ(log[11].amplitude_pt, std::hypot(b.x - a.x, b.y - a.y));
  EXPECT_DOUBLE_EQ(log[11].amplitude_pt, std::sqrt(2.0) * 204.0);
}

TEST_F(SessionTest, TwoTestsChainAndTotalThirtyFive) {
  TrialSession s({numbers_, alphabets_});
  s.begin_test(0.0);
  double t = 0;
  for (const auto& label : trial_sequence(LayoutName::numbers)) s.advance(select_on(numbers_, label, t += 900));
  EXPECT_EQ(s.phase(), SessionPhase::test2);
  EXPECT_EQ(s.test_start(), t);
  EXPECT_EQ(s.active_layout()->name, LayoutName::alphabets);
  const double test2_start = t;
  for (const auto& label : trial_sequence(LayoutName::alphabets)) s.advance(select_on(alphabets_, label, t += 800));
  ASSERT_TRUE(s.complete());
  const auto log = s.session_log();
  ASSERT_EQ(log.size(), 35u);
  EXPECT_EQ(log[20].test, 1);
  EXPECT_EQ(log[20].index, 0);
  EXPECT_EQ(log[20].movement_time_ms, 800.0);
  EXPECT_EQ(log[20].t_select - test2_start, 800.0);
  EXPECT_EQ(log[20].prev_center.x, 187.5);
}

TEST_F(SessionTest, AmplitudesDoNotDependOnTiming) {
  auto amplitudes = [&](double step) {
    TrialSession s({alphabets_});
    s.begin_test(0.0);
    double t = 0;
    std::vector<double> out;
    for (const auto& label : trial_sequence(LayoutName::alphabets)) {
      out.push_back(s.advance(select_on(alphabets_, label, t += step))->amplitude_pt);
    }
    return out;
  };
  EXPECT_EQ(amplitudes(1000), amplitudes(2173));
}

TEST(SessionConfigTest, Validation) {
  SessionConfig c;
  EXPECT_NO_THROW(c.validate());
  c.tests.clear();
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.dwell.glance_ms = 3000;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.dwell.select = EventKind::enter;
  EXPECT_THROW(c.validate(), Error);
}

}  // namespace
}  // namespace headpoint
