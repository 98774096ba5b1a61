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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "headpoint/trials.hpp"

namespace headpoint {

// Standard-deviation method constant: W_e = 4.133 * S_x.
inline constexpr double kEffectiveWidthFactor = 4.133;

struct SequenceStats {
  std::string participant;
  DistanceMode distance = DistanceMode::mid;
  LayoutName layout = LayoutName::numbers;
  int n_trials = 0;
  double sx_pt = 0.0;
  double we_pt = 0.0;
  double a_mean_pt = 0.0;
  double ide_bits = 0.0;
  double mt_mean_s = 0.0;
  double tp_bps = 0.0;
};

struct BoxStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct EigenSummary {
  Vec2 mean;
  std::array<double, 3> cov{};  // xx, xy, yy
  std::array<double, 2> eigenvalues{};  // descending
  std::array<Vec2, 2> eigenvectors{};
};

enum class StdDevKind { sample, population };

// Signed projection of (point - target) on the unit axis prev -> target.
double project_onto_axis(const ScreenPoint& prev_center, const ScreenPoint& target_center, const ScreenPoint& point);

struct EffectiveWidth {
  double sx = 0.0;
  double we = 0.0;
};

EffectiveWidth effective_width(std::span<const double> projections, StdDevKind kind = StdDevKind::sample);
double effective_id(double a_mean_pt, double we_pt);
double throughput(double ide_bits, double mt_mean_s);

/// A trial together with the sequence it belongs to.
struct TrialRow {
  std::string participant;
  DistanceMode distance = DistanceMode::mid;
  LayoutName layout = LayoutName::numbers;
  TrialRecord record;
};

enum class Grouping {
  per_sequence,  // (participant, distance, layout)
  pooled,        // (distance, layout) across participants; participant reported as "*"
  whole_test,    // everything in one group
};

struct SequenceReport {
  std::vector<SequenceStats> stats;
  std::vector<std::string> diagnostics;  // groups skipped for having < 2 trials
};

/**
 * Fitts evaluation per group. Each selection is projected on its own trial
 * axis, projections are pooled for S_x, then W_e -> ID_e -> TP with the
 * mean amplitude and the mean movement time in seconds. Output order is
 * (participant, distance, layout) regardless of input order.
 */
SequenceReport sequence_stats(std::span<const TrialRow> rows, Grouping grouping = Grouping::per_sequence,
                              StdDevKind kind = StdDevKind::sample);

// Quartiles by linear interpolation at (n - 1) * p on the sorted sample.
BoxStats box_stats(std::span<const double> values);

/**
 * Sample covariance (n - 1) of the points and its eigen-decomposition in
 * closed form. Eigenvectors are unit length with a non-negative x component
 * (non-negative y when x is zero).
 */
EigenSummary covariance_eigen(std::span<const Vec2> points);

// Sort key shared by every tabular output.
bool row_order(const TrialRow& a, const TrialRow& b);

// Six significant digits, shortest of fixed/exponent form, ties to even.
std::string format_real(double value);

void write_trials_csv(std::ostream& os, std::span<const TrialRow> rows);
void write_sequences_csv(std::ostream& os, std::span<const SequenceStats> stats);

struct EigenRow {
  LayoutName layout = LayoutName::numbers;
  std::string target;
  EigenSummary summary;
};

// Pools selection points per (layout, target) over all rows.
std::vector<EigenRow> eigen_by_target(std::span<const TrialRow> rows);
void write_eigen_csv(std::ostream& os, std::span<const EigenRow> rows);

struct BoxRow {
  LayoutName layout = LayoutName::numbers;
  DistanceMode distance = DistanceMode::mid;
  std::string metric;
  BoxStats box;
};

std::vector<BoxRow> box_rows(std::span<const SequenceStats> stats);
void write_boxes_csv(std::ostream& os, std::span<const BoxRow> rows);

}  // namespace headpoint
