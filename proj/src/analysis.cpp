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

#include "headpoint/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <tuple>

#include "headpoint/error.hpp"

namespace headpoint {

double project_onto_axis(const ScreenPoint& prev_center, const ScreenPoint& target_center, const ScreenPoint& point) {
  const double ax = target_center.x - prev_center.x;
  const double ay = target_center.y - prev_center.y;
  const double len = std::hypot(ax, ay);
  if (len == 0.0) throw Error(Errc::degenerate, "task axis has zero amplitude");
  return ((point.x - target_center.x) * ax + (point.y - target_center.y) * ay) / len;
}

EffectiveWidth effective_width(std::span<const double> projections, StdDevKind kind) {
  const size_t n = projections.size();
  if (n < 2) throw Error(Errc::degenerate, "effective width needs at least two projections");
  const double mean = std::accumulate(projections.begin(), projections.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : projections) ss += (v - mean) * (v - mean);
  const double denom = kind == StdDevKind::sample ? static_cast<double>(n - 1) : static_cast<double>(n);
  const double sx = std::sqrt(ss / denom);
  return {sx, kEffectiveWidthFactor * sx};
}

double effective_id(double a_mean_pt, double we_pt) {
  if (!(we_pt > 0.0)) throw Error(Errc::degenerate, "effective width must be positive");
  if (a_mean_pt < 0.0) throw Error(Errc::invalid_argument, "amplitude must be non-negative");
  return std::log2(a_mean_pt / we_pt + 1.0);
}

double throughput(double ide_bits, double mt_mean_s) {
  if (!(mt_mean_s > 0.0)) throw Error(Errc::degenerate, "movement time must be positive");
  return ide_bits / mt_mean_s;
}

bool row_order(const TrialRow& a, const TrialRow& b) {
  return std::tie(a.participant, a.distance, a.layout, a.record.test, a.record.index) <
         std::tie(b.participant, b.distance, b.layout, b.record.test, b.record.index);
}

SequenceReport sequence_stats(std::span<const TrialRow> rows, Grouping grouping, StdDevKind kind) {
  using Key = std::tuple<std::string, DistanceMode, LayoutName>;
  std::map<Key, std::vector<const TrialRow*>> groups;
  for (const TrialRow& r : rows) {
    Key key{r.participant, r.distance, r.layout};
    if (grouping != Grouping::per_sequence) std::get<0>(key) = "*";
    if (grouping == Grouping::whole_test) {
      std::get<1>(key) = DistanceMode::near;
      std::get<2>(key) = LayoutName::numbers;
    }
    groups[key].push_back(&r);
  }

  SequenceReport report;
  for (const auto& [key, members] : groups) {
    const auto& [participant, distance, layout] = key;
    std::string label = participant;
    if (grouping != Grouping::whole_test) {
      label += std::string("/") + to_string(distance) + "/" + to_string(layout);
    }
    if (members.size() < 2) {
      report.diagnostics.push_back(label + ": fewer than 2 trials, skipped");
      continue;
    }
    std::vector<double> proj;
    double a_sum = 0.0;
    double mt_sum = 0.0;
    for (const TrialRow* r : members) {
      const TrialRecord& t = r->record;
      a_sum += t.amplitude_pt;
      mt_sum += t.movement_time_ms;
      if (t.amplitude_pt > 0.0) proj.push_back(project_onto_axis(t.prev_center, t.target_center, t.selection_point));
    }
    try {
      SequenceStats s;
      s.participant = participant;
      s.distance = distance;
      s.layout = layout;
      s.n_trials = static_cast<int>(members.size());
      const auto ew = effective_width(proj, kind);
      s.sx_pt = ew.sx;
      s.we_pt = ew.we;
      s.a_mean_pt = a_sum / static_cast<double>(members.size());
      s.mt_mean_s = mt_sum / static_cast<double>(members.size()) / 1000.0;
      s.ide_bits = effective_id(s.a_mean_pt, s.we_pt);
      s.tp_bps = throughput(s.ide_bits, s.mt_mean_s);
      report.stats.push_back(std::move(s));
    } catch (const Error& e) {
      report.diagnostics.push_back(label + ": " + e.what() + ", skipped");
    }
  }
  return report;
}

BoxStats box_stats(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::invalid_argument, "box stats of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  auto quantile = [&](double p) {
    const double pos = p * static_cast<double>(v.size() - 1);
    const size_t lo = static_cast<size_t>(std::floor(pos));
    const size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return frac == 0.0 ? v[lo] : v[lo] + (v[hi] - v[lo]) * frac;
  };
  BoxStats b;
  b.min = v.front();
  b.max = v.back();
  b.q1 = quantile(0.25);
  b.median = quantile(0.5);
  b.q3 = quantile(0.75);
  b.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  return b;
}

namespace {

Vec2 canonical_sign(Vec2 v) {
  if (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)) return {-v.x, -v.y};
  return v;
}

}  // namespace

EigenSummary covariance_eigen(std::span<const Vec2> points) {
  const size_t n = points.size();
  if (n < 2) throw Error(Errc::degenerate, "covariance needs at least two points");
  EigenSummary s;
  for (const Vec2& p : points) {
    s.mean.x += p.x;
    s.mean.y += p.y;
  }
  s.mean.x /= static_cast<double>(n);
  s.mean.y /= static_cast<double>(n);
  double xx = 0.0, xy = 0.0, yy = 0.0;
  for (const Vec2& p : points) {
    const double dx = p.x - s.mean.x;
    const double dy = p.y - s.mean.y;
    xx += dx * dx;
    xy += dx * dy;
    yy += dy * dy;
  }
  const double denom = static_cast<double>(n - 1);
  const double a = xx / denom;
  const double b = xy / denom;
  const double c = yy / denom;
  s.cov = {a, b, c};

  const double half_trace = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), b);
  s.eigenvalues = {half_trace + radius, half_trace - radius};
  if (radius == 0.0) {
    s.eigenvectors = {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
    return s;
  }
  // Pick the better-conditioned of the two equivalent null-space forms.
  Vec2 v1 = a >= c ? Vec2{s.eigenvalues[0] - c, b} : Vec2{b, s.eigenvalues[0] - a};
  const double len = std::hypot(v1.x, v1.y);
  v1 = {v1.x / len, v1.y / len};
  s.eigenvectors = {canonical_sign(v1), canonical_sign(Vec2{-v1.y, v1.x})};
  return s;
}

std::string format_real(double value) {
  if (value == 0.0) return "0";
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

void write_trials_csv(std::ostream& os, std::span<const TrialRow> rows) {
  os << "participant,distance,layout,trial_index,target,amplitude_pt,mt_ms,sel_x,sel_y,proj_pt\n";
  for (const TrialRow& r : rows) {
    const TrialRecord& t = r.record;
    os << r.participant << ',' << to_string(r.distance) << ',' << to_string(r.layout) << ',' << t.index << ','
       << t.target_label << ',' << format_real(t.amplitude_pt) << ',' << format_real(t.movement_time_ms) << ','
       << format_real(t.selection_point.x) << ',' << format_real(t.selection_point.y) << ',';
    if (t.amplitude_pt > 0.0) os << format_real(project_onto_axis(t.prev_center, t.target_center, t.selection_point));
    os << '\n';
  }
}

void write_sequences_csv(std::ostream& os, std::span<const SequenceStats> stats) {
  os << "participant,distance,layout,n_trials,Sx_pt,We_pt,A_mean_pt,IDe_bits,MT_s,TP_bps\n";
  for (const SequenceStats& s : stats) {
    os << s.participant << ',' << to_string(s.distance) << ',' << to_string(s.layout) << ',' << s.n_trials << ','
       << format_real(s.sx_pt) << ',' << format_real(s.we_pt) << ',' << format_real(s.a_mean_pt) << ','
       << format_real(s.ide_bits) << ',' << format_real(s.mt_mean_s) << ',' << format_real(s.tp_bps) << '\n';
  }
}

std::vector<EigenRow> eigen_by_target(std::span<const TrialRow> rows) {
  std::map<std::pair<LayoutName, std::string>, std::vector<Vec2>> points;
  for (const TrialRow& r : rows) {
    const ScreenPoint& p = r.record.selection_point;
    points[{r.layout, r.record.target_label}].push_back({p.x, p.y});
  }
  std::vector<EigenRow> out;
  for (const auto& [key, pts] : points) {
    if (pts.size() < 2) continue;
    out.push_back({key.first, key.second, covariance_eigen(pts)});
  }
  return out;
}

void write_eigen_csv(std::ostream& os, std::span<const EigenRow> rows) {
  os << "layout,target,mean_x,mean_y,cov_xx,cov_xy,cov_yy,eig1,eig2,v1x,v1y\n";
  for (const EigenRow& r : rows) {
    const EigenSummary& e = r.summary;
    os << to_string(r.layout) << ',' << r.target << ',' << format_real(e.mean.x) << ',' << format_real(e.mean.y)
       << ',' << format_real(e.cov[0]) << ',' << format_real(e.cov[1]) << ',' << format_real(e.cov[2]) << ','
       << format_real(e.eigenvalues[0]) << ',' << format_real(e.eigenvalues[1]) << ','
       << format_real(e.eigenvectors[0].x) << ',' << format_real(e.eigenvectors[0].y) << '\n';
  }
}

std::vector<BoxRow> box_rows(std::span<const SequenceStats> stats) {
  std::map<std::pair<LayoutName, DistanceMode>, std::pair<std::vector<double>, std::vector<double>>> samples;
  for (const SequenceStats& s : stats) {
    auto& [tp, mt] = samples[{s.layout, s.distance}];
    tp.push_back(s.tp_bps);
    mt.push_back(s.mt_mean_s);
  }
  std::vector<BoxRow> out;
  for (const auto& [key, vals] : samples) {
    out.push_back({key.first, key.second, "TP_bps", box_stats(vals.first)});
    out.push_back({key.first, key.second, "MT_s", box_stats(vals.second)});
  }
  return out;
}

void write_boxes_csv(std::ostream& os, std::span<const BoxRow> rows) {
  os << "layout,distance,metric,min,q1,median,q3,max,mean\n";
  for (const BoxRow& r : rows) {
    os << to_string(r.layout) << ',' << to_string(r.distance) << ',' << r.metric << ',' << format_real(r.box.min)
       << ',' << format_real(r.box.q1) << ',' << format_real(r.box.median) << ',' << format_real(r.box.q3) << ','
       << format_real(r.box.max) << ',' << format_real(r.box.mean) << '\n';
  }
}

}  // namespace headpoint
