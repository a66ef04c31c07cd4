// ifc3 — sum-rate outer bounds for the three-user Gaussian interference channel
// Copyright (C) 2026 the ifc3 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "channel.hpp"
#include "classic_bounds.hpp"
#include "common.hpp"
#include "json_io.hpp"
#include "parallel.hpp"
#include "sampling.hpp"
#include "cooperation_bound.hpp"
#include "assignment_bound.hpp"

namespace ifc3 {

// Column order is also the tie-break order for the "tightest" label.
inline constexpr std::array<const char*, 5> kSweepBoundNames = {
    "kra", "etw", "th1", "th2", "mac"};

struct RunConfig {
  FamilySpec family;
  double alpha_start = 0.0;
  double alpha_stop = 1.6;
  double alpha_step = 0.01;
  std::array<bool, 5> enabled = {true, true, true, true, true};
  std::uint64_t seed = 0;
};

struct SweepRow {
  double alpha = 0.0;
  double p_db = 0.0;
  double r_sum = 0.0;
  std::array<double, 5> bound{};  // NaN when disabled
  std::array<double, 5> dof{};
  int tightest = -1;  // index into kSweepBoundNames
};

struct SweepTable {
  RunConfig config;
  std::vector<SweepRow> rows;
};

inline int sweep_point_count(const RunConfig& c) {
  if (!(c.alpha_step > 0.0) || c.alpha_stop < c.alpha_start - 1e-12)
    throw BadInput("alpha range must satisfy start <= stop, step > 0");
  return int(std::floor((c.alpha_stop - c.alpha_start) / c.alpha_step + 1e-9)) + 1;
}

// Degrees-of-freedom style normalization: bound over interference-free sum
// rate, clamped to 1.
inline double dof_ratio(double bound_bits, double r_sum) {
  return std::min(bound_bits / r_sum, 1.0);
}

inline SweepRow sweep_row(const RunConfig& cfg, int index) {
  SweepRow row;
  row.alpha = cfg.alpha_start + index * cfg.alpha_step;
  row.p_db = cfg.family.power_db;
  const ChannelMatrix ch = build_family(family_at_alpha(cfg.family, row.alpha));
  row.r_sum = single_user_rate(ch, 0) + single_user_rate(ch, 1) +
              single_user_rate(ch, 2);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  row.bound.fill(nan);
  if (cfg.enabled[0])
    row.bound[0] = composite_sum_rate(ch, TwoUserRule::Kramer).value_bits;
  if (cfg.enabled[1])
    row.bound[1] = composite_sum_rate(ch, TwoUserRule::Etw).value_bits;
  if (cfg.enabled[2]) row.bound[2] = th1_sum_rate(ch).value_bits;
  if (cfg.enabled[3]) row.bound[3] = th2_sum_rate(ch).value_bits;
  if (cfg.enabled[4])
    row.bound[4] = mac_bound(ch, sample_seed(cfg.seed, index)).value_bits;

  double best = std::numeric_limits<double>::infinity();
  for (int b = 0; b < 5; ++b) {
    row.dof[b] = cfg.enabled[b] ? dof_ratio(row.bound[b], row.r_sum) : nan;
    if (cfg.enabled[b] && row.bound[b] < best) best = row.bound[b];
  }
  for (int b = 0; b < 5; ++b) {
    if (cfg.enabled[b] && row.bound[b] <= best + 1e-9) {
      row.tightest = b;
      break;
    }
  }
  return row;
}

// Rows are independent and may be computed concurrently; assembly stays in
// alpha order.
inline SweepTable run_sweep(const RunConfig& cfg) {
  SweepTable table;
  table.config = cfg;
  const int n = sweep_point_count(cfg);
  table.rows.resize(n);
  parallel_for(n, [&](int i) { table.rows[i] = sweep_row(cfg, i); });
  return table;
}

//==============================================================================
// Output formats
//==============================================================================

namespace detail {

// Locale-independent, 12 significant digits: enough to make reruns
// byte-identical without printing noise digits.
inline std::string num12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

inline std::string sweep_csv(const SweepTable& t) {
  std::string out =
      "alpha,p_db,r_sum,kra,etw,th1,th2,mac,"
      "dof_kra,dof_etw,dof_th1,dof_th2,dof_mac,tightest\n";
  for (const SweepRow& r : t.rows) {
    out += detail::num12(r.alpha);
    out += ',';
    out += detail::num12(r.p_db);
    out += ',';
    out += detail::num12(r.r_sum);
    for (int b = 0; b < 5; ++b) {
      out += ',';
      out += detail::num12(r.bound[b]);
    }
    for (int b = 0; b < 5; ++b) {
      out += ',';
      out += detail::num12(r.dof[b]);
    }
    out += ',';
    out += r.tightest >= 0 ? kSweepBoundNames[r.tightest] : "none";
    out += '\n';
  }
  return out;
}

// Maximal alpha-intervals on which each bound carries the "tightest" label.
inline json crossovers_json(const SweepTable& t) {
  json intervals;
  for (const char* name : kSweepBoundNames) intervals[name] = json::array();
  int i = 0;
  const int n = int(t.rows.size());
  while (i < n) {
    const int label = t.rows[i].tightest;
    int j = i;
    while (j + 1 < n && t.rows[j + 1].tightest == label) ++j;
    if (label >= 0)
      intervals[kSweepBoundNames[label]].push_back(
          {t.rows[i].alpha, t.rows[j].alpha});
    i = j + 1;
  }
  return {{"family", family_name(t.config.family.family)},
          {"power_db", t.config.family.power_db},
          {"alpha_step", t.config.alpha_step},
          {"intervals", intervals}};
}

inline json sweep_json(const SweepTable& t) {
  json rows = json::array();
  for (const SweepRow& r : t.rows) {
    json row = {{"alpha", r.alpha},
                {"p_db", r.p_db},
                {"r_sum", r.r_sum},
                {"tightest",
                 r.tightest >= 0 ? kSweepBoundNames[r.tightest] : "none"}};
    for (int b = 0; b < 5; ++b) {
      row[kSweepBoundNames[b]] = r.bound[b];
      row[std::string("dof_") + kSweepBoundNames[b]] = r.dof[b];
    }
    rows.push_back(row);
  }
  return {{"family", family_to_json(t.config.family)},
          {"rows", rows},
          {"crossovers", crossovers_json(t)}};
}

}  // namespace ifc3
