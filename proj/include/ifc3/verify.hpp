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

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "classic_bounds.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "sampling.hpp"
#include "cooperation_bound.hpp"
#include "assignment_bound.hpp"

// Seeded randomized suites comparing each closed-form bound against its
// brute-force oracle.  Every sample is reproducible from (seed, index).

namespace ifc3 {

struct SuiteReport {
  std::string suite;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_dev = 0.0;  // worst |implementation - oracle|
  bool pass = false;
  nlohmann::json worst;  // instance attaining max_dev
  nlohmann::json extra;
  double seconds = 0.0;
};

namespace detail {

class SuiteTimer {
 public:
  SuiteTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json vec_json(const Eigen::VectorXcd& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v[i]));
  return a;
}

}  // namespace detail

// Worst-correlation closed form vs dense disk grid.
inline SuiteReport verify_lemma(int samples, std::uint64_t seed,
                                const oracle::GridSpec& spec = {}) {
  detail::SuiteTimer timer;
  SuiteReport rep{.suite = "lemma", .samples = samples, .seed = seed,
                  .tolerance = 1e-3};
  for (int i = 0; i < samples; ++i) {
    auto rng = seeded_rng(sample_seed(seed, i));
    const MisoPair pair = random_miso_pair(rng, i % 2 ? 3 : 2);
    const LemmaResult impl = lemma_min_mi(pair);
    const auto orc = oracle::grid_min_rho(
        [&](cd rho) { return lemma_mi_at_rho(pair, rho); }, spec);
    const double dev = std::abs(impl.value_bits - orc.value);
    // A closed-form minimum sitting above an evaluated grid point is a bug
    // regardless of grid resolution.
    const bool above = impl.value_bits > orc.value + 1e-9;
    if (dev > rep.max_dev || above) {
      rep.max_dev = std::max(dev, rep.max_dev);
      rep.worst = {{"index", i},
                   {"c1", detail::vec_json(pair.c1)},
                   {"c2", detail::vec_json(pair.c2)},
                   {"impl", impl.value_bits},
                   {"oracle", orc.value},
                   {"impl_above_grid_point", above}};
    }
    if (above) rep.max_dev = std::max(rep.max_dev, 1.0);
  }
  rep.pass = rep.max_dev <= rep.tolerance;
  rep.seconds = timer.seconds();
  return rep;
}

// Full case-tree bound vs per-ordering fine-grid scan; condition-boundary
// wins additionally checked against the band-restricted oracle.
inline SuiteReport verify_th1(int samples, std::uint64_t seed,
                              const oracle::GridSpec& spec = {}) {
  detail::SuiteTimer timer;
  SuiteReport rep{.suite = "th1", .samples = samples, .seed = seed,
                  .tolerance = 1e-3};
  int boundary_wins = 0;
  double boundary_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    auto rng = seeded_rng(sample_seed(seed, i));
    const ChannelMatrix ch = random_channel(rng);
    const BoundResult impl = th1_sum_rate(ch);

    double orc = std::numeric_limits<double>::infinity();
    for (const auto& pi : all_orderings()) {
      const ChannelMatrix chp = ch.relabeled(pi);
      const Th1Objective f(chp);
      const auto m = oracle::grid_min_rho([&](cd rho) { return f.at(rho); },
                                          spec);
      orc = std::min(orc, m.value);
    }
    const double dev = std::abs(impl.value_bits - orc);
    if (dev > rep.max_dev) {
      rep.max_dev = dev;
      rep.worst = {{"index", i},
                   {"channel", channel_to_json(ch)},
                   {"impl", impl.value_bits},
                   {"oracle", orc},
                   {"path", impl.detail["path"]}};
    }

    if (impl.detail["path"] == "condition_boundary") {
      ++boundary_wins;
      std::array<int, 3> pi;
      impl.detail["ordering"].get_to(pi);
      const ChannelMatrix chp = ch.relabeled(pi);
      const Th1Objective f(chp);
      const auto band = oracle::constrained_boundary_min(
          [&](cd rho) { return f.at(rho); },
          [&](cd rho) { return f.qf_gap(rho); },
          1e-3 * f.condition_scale(), spec);
      if (band.found)
        boundary_dev = std::max(boundary_dev,
                                std::abs(impl.value_bits - band.value));
    }
  }
  rep.extra = {{"boundary_wins", boundary_wins},
               {"boundary_max_dev", boundary_dev}};
  rep.pass = rep.max_dev <= rep.tolerance && boundary_dev <= rep.tolerance;
  rep.seconds = timer.seconds();
  return rep;
}

// Side-information bound vs exhaustive-assignment, per-term grid oracle; also
// tracks the smallest raw alignment parameter seen.
inline SuiteReport verify_th2(int samples, std::uint64_t seed,
                              const oracle::GridSpec& spec = {}) {
  detail::SuiteTimer timer;
  SuiteReport rep{.suite = "th2", .samples = samples, .seed = seed,
                  .tolerance = 1e-3};
  double q_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    auto rng = seeded_rng(sample_seed(seed, i));
    const ChannelMatrix ch = random_channel(rng);
    const BoundResult impl = th2_sum_rate(ch);

    double term[3][3];
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const RowVectors rv = row_vectors(ch, j, k);
        MisoPair p;
        p.c1 = rv.row;
        p.c2 = rv.masked;
        term[j][k] = oracle::grid_min_rho(
            [&](cd rho) { return lemma_mi_at_rho(p, rho); }, spec).value;
        const SideInfoTerm t = f_jk_term(ch, j, k);
        if (!t.zero_inner) q_min = std::min(q_min, t.q);
      }
    }
    double orc = std::numeric_limits<double>::infinity();
    for (const auto& pi : all_orderings())
      orc = std::min(orc, term[0][pi[0]] + term[1][pi[1]] + term[2][pi[2]]);

    const double dev = std::abs(impl.value_bits - orc);
    if (dev > rep.max_dev) {
      rep.max_dev = dev;
      rep.worst = {{"index", i},
                   {"channel", channel_to_json(ch)},
                   {"impl", impl.value_bits},
                   {"oracle", orc}};
    }
  }
  rep.extra = {{"q_min", q_min}};
  rep.pass = rep.max_dev <= rep.tolerance && q_min >= 1.0 - 1e-9;
  rep.seconds = timer.seconds();
  return rep;
}

// Joint-receiver bound optimizer vs dense real-correlation cube.
inline SuiteReport verify_mac(int samples, std::uint64_t seed,
                              double step = 0.02) {
  detail::SuiteTimer timer;
  SuiteReport rep{.suite = "mac", .samples = samples, .seed = seed,
                  .tolerance = 1e-2};
  bool start_bound_ok = true;
  for (int i = 0; i < samples; ++i) {
    auto rng = seeded_rng(sample_seed(seed, i));
    const ChannelMatrix ch = random_real_channel(rng);
    const BoundResult impl = mac_bound(ch, sample_seed(seed, i));

    const Eigen::Matrix3cd g = ch.gains() * ch.gains().adjoint();
    auto f = [&](double a, double b, double c) {
      Eigen::Matrix3cd sigma;
      sigma << cd(1, 0), cd(a, 0), cd(b, 0),
               cd(a, 0), cd(1, 0), cd(c, 0),
               cd(b, 0), cd(c, 0), cd(1, 0);
      const double ds = ifc3::detail::hermitian_det(sigma, 3);
      if (!(ds > 1e-14)) return std::numeric_limits<double>::infinity();
      const Eigen::Matrix3cd k = sigma + g;
      return to_bits(std::log(ifc3::detail::hermitian_det(k, 3)) -
                     std::log(ds));
    };
    const auto orc = oracle::grid_min_covariance(f, step);

    const double identity_value = f(0.0, 0.0, 0.0);
    if (impl.value_bits > identity_value) start_bound_ok = false;

    const double dev = std::abs(impl.value_bits - orc.value);
    if (dev > rep.max_dev) {
      rep.max_dev = dev;
      rep.worst = {{"index", i},
                   {"channel", channel_to_json(ch)},
                   {"impl", impl.value_bits},
                   {"oracle", orc.value},
                   {"oracle_at", {orc.r12, orc.r13, orc.r23}}};
    }
  }
  rep.extra = {{"never_exceeds_identity_start", start_bound_ok}};
  rep.pass = rep.max_dev <= rep.tolerance && start_bound_ok;
  rep.seconds = timer.seconds();
  return rep;
}

inline nlohmann::json suite_report_json(const SuiteReport& r) {
  return {{"suite", r.suite},     {"samples", r.samples},
          {"seed", r.seed},       {"tolerance", r.tolerance},
          {"max_dev", r.max_dev}, {"pass", r.pass},
          {"worst", r.worst},     {"extra", r.extra},
          {"seconds", r.seconds}};
}

}  // namespace ifc3
