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

#include <cmath>
#include <limits>

#include "common.hpp"
#include "gauss_info.hpp"

// Brute-force grid minimizers used as reference oracles by the test suite.
// Deliberately dumb: dense scan plus local grid shrinking, no derivative-free
// optimizer, no closed forms, so any algebra slip in the analytic paths shows
// up as a numeric disagreement.

namespace ifc3::oracle {

struct GridSpec {
  int radial = 512;
  int angular = 1024;
  int refine_rounds = 3;
  double margin = 1e-9;  // keep-out band inside the unit circle
};

struct DiskMin {
  cd rho{0.0, 0.0};
  double value = std::numeric_limits<double>::infinity();
};

namespace detail {

// Local square-grid shrink around an incumbent; objective may return +inf.
template <class F>
void refine_disk(F&& f, DiskMin& best, double window, int rounds,
                 double rmax) {
  constexpr int kSide = 8;
  for (int round = 0; round < rounds; ++round) {
    DiskMin local = best;
    for (int i = -kSide; i <= kSide; ++i) {
      for (int j = -kSide; j <= kSide; ++j) {
        cd rho = best.rho + cd(window * i / kSide, window * j / kSide);
        const double r = std::abs(rho);
        if (r > rmax) rho *= rmax / r;
        const double v = f(rho);
        if (v < local.value) {
          local.value = v;
          local.rho = rho;
        }
      }
    }
    best = local;
    window /= kSide;
  }
}

}  // namespace detail

// Minimum of f over the disk |rho| <= 1 - margin: polar scan, then local
// shrinking around the incumbent.
template <class F>
DiskMin grid_min_rho(F&& f, const GridSpec& spec = {}) {
  const double rmax = 1.0 - spec.margin;
  DiskMin best;
  for (int i = 0; i < spec.radial; ++i) {
    const double r = rmax * i / (spec.radial - 1);
    const int na = i == 0 ? 1 : spec.angular;
    for (int j = 0; j < na; ++j) {
      const double th = 2.0 * kPi * j / spec.angular;
      const cd rho = std::polar(r, th);
      const double v = f(rho);
      if (v < best.value) {
        best.value = v;
        best.rho = rho;
      }
    }
  }
  detail::refine_disk(f, best, rmax / (spec.radial - 1), spec.refine_rounds,
                      rmax);
  return best;
}

// Minimum of f over grid points near the zero set of `residual` (within
// `band`), same disk and refinement scheme.  `found` is false when no grid
// point lands in the band.
struct BandMin {
  cd rho{0.0, 0.0};
  double value = std::numeric_limits<double>::infinity();
  bool found = false;
};

template <class F, class G>
BandMin constrained_boundary_min(F&& f, G&& residual, double band,
                                 const GridSpec& spec = {}) {
  const double rmax = 1.0 - spec.margin;
  BandMin best;
  auto consider = [&](cd rho) {
    if (std::abs(residual(rho)) > band) return;
    const double v = f(rho);
    if (v < best.value) {
      best.value = v;
      best.rho = rho;
      best.found = true;
    }
  };
  for (int i = 0; i < spec.radial; ++i) {
    const double r = rmax * i / (spec.radial - 1);
    const int na = i == 0 ? 1 : spec.angular;
    for (int j = 0; j < na; ++j) consider(std::polar(r, 2.0 * kPi * j / spec.angular));
  }
  // The zero set can be thinner than the grid pitch, leaving the area scan
  // with only glancing band hits.  Walk each angular ray and bisect every
  // residual sign change: the located roots satisfy the same band membership,
  // densifying the kept set exactly where the constraint lives.
  for (int j = 0; j < spec.angular; ++j) {
    const double th = 2.0 * kPi * j / spec.angular;
    double r_prev = 0.0;
    double g_prev = residual(std::polar(0.0, th));
    for (int i = 1; i < spec.radial; ++i) {
      const double r = rmax * i / (spec.radial - 1);
      const double g = residual(std::polar(r, th));
      if ((g_prev < 0.0) != (g < 0.0)) {
        double lo = r_prev, hi = r;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          if ((residual(std::polar(mid, th)) < 0.0) == (g_prev < 0.0))
            lo = mid;
          else
            hi = mid;
        }
        consider(std::polar(0.5 * (lo + hi), th));
      }
      r_prev = r;
      g_prev = g;
    }
  }
  if (!best.found) return best;
  double window = rmax / (spec.radial - 1);
  constexpr int kSide = 8;
  for (int round = 0; round < spec.refine_rounds; ++round) {
    BandMin local = best;
    for (int i = -kSide; i <= kSide; ++i) {
      for (int j = -kSide; j <= kSide; ++j) {
        cd rho = best.rho + cd(window * i / kSide, window * j / kSide);
        const double r = std::abs(rho);
        if (r > rmax) rho *= rmax / r;
        if (std::abs(residual(rho)) > band) continue;
        const double v = f(rho);
        if (v < local.value) {
          local.value = v;
          local.rho = rho;
        }
      }
    }
    best = local;
    window /= kSide;
  }
  return best;
}

// Minimum of f(r12, r13, r23) over real unit-diagonal PSD correlations:
// dense cube scan with a PSD filter, then local shrinking.
struct CovMin {
  double r12 = 0.0, r13 = 0.0, r23 = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

template <class F>
CovMin grid_min_covariance(F&& f, double step = 0.02, int refine_rounds = 3) {
  CovMin best;
  auto consider = [&](double a, double b, double c) {
    if (!corr_psd(cd(a, 0), cd(b, 0), cd(c, 0), 1e-12)) return;
    const double v = f(a, b, c);
    if (v < best.value) {
      best.value = v;
      best.r12 = a;
      best.r13 = b;
      best.r23 = c;
    }
  };
  const int n = int(std::lround(2.0 / step));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        consider(-1.0 + i * step, -1.0 + j * step, -1.0 + k * step);

  double window = step;
  constexpr int kSide = 5;
  for (int round = 0; round < refine_rounds; ++round) {
    const CovMin center = best;
    for (int i = -kSide; i <= kSide; ++i)
      for (int j = -kSide; j <= kSide; ++j)
        for (int k = -kSide; k <= kSide; ++k)
          consider(center.r12 + window * i / kSide,
                   center.r13 + window * j / kSide,
                   center.r23 + window * k / kSide);
    window /= kSide;
  }
  return best;
}

}  // namespace ifc3::oracle
