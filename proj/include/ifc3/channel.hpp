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

#include <Eigen/Dense>

#include "common.hpp"

namespace ifc3 {

//==============================================================================
// Channel matrix in standard form
//==============================================================================
//
// Three transmit/receive pairs, unit input power, unit noise variance:
//
//   Y_i = sum_k H(i,k) X_k + Z_i,   E|X_k|^2 = 1,  Z_i ~ CN(0,1).
//
// Standard form: every diagonal (direct) gain is real and strictly positive.
// Any channel with nonzero direct gains can be brought to standard form by
// per-receiver phase rotation, which changes no achievable rate.  All bound
// computations assume and preserve this invariant.

class ChannelMatrix {
 public:
  // Rotates each row by the conjugate phase of its diagonal entry.  Rows whose
  // diagonal is already real positive are left untouched (exact idempotence).
  static ChannelMatrix standardize(const Eigen::Matrix3cd& raw) {
    Eigen::Matrix3cd m = raw;
    for (int i = 0; i < 3; ++i) {
      const cd d = m(i, i);
      if (d == cd(0.0, 0.0))
        throw ZeroDirectGain("direct gain (" + std::to_string(i) + "," +
                             std::to_string(i) + ") is zero");
      if (d.imag() == 0.0 && d.real() > 0.0) continue;
      const cd phasor = std::polar(1.0, -std::arg(d));
      m.row(i) *= phasor;
      m(i, i) = cd(std::abs(d), 0.0);
    }
    return ChannelMatrix(m);
  }

  // Accepts a matrix already in standard form; rejects anything else.
  static ChannelMatrix from_standard(const Eigen::Matrix3cd& m) {
    for (int i = 0; i < 3; ++i) {
      const cd d = m(i, i);
      if (!(d.real() > 0.0) || d.imag() != 0.0)
        throw ZeroDirectGain("matrix is not in standard form at (" +
                             std::to_string(i) + "," + std::to_string(i) + ")");
    }
    return ChannelMatrix(m);
  }

  const Eigen::Matrix3cd& gains() const { return h_; }
  cd operator()(int r, int c) const { return h_(r, c); }

  // Direct gain of user k (real, > 0).
  double direct(int k) const { return h_(k, k).real(); }

  // Simultaneous user relabeling: entry (a,b) of the result is (pi[a], pi[b])
  // of this matrix.  Preserves standard form.
  ChannelMatrix relabeled(const std::array<int, 3>& pi) const {
    Eigen::Matrix3cd m;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) m(a, b) = h_(pi[a], pi[b]);
    return ChannelMatrix(m);
  }

 private:
  explicit ChannelMatrix(const Eigen::Matrix3cd& m) : h_(m) {}
  Eigen::Matrix3cd h_;
};

// The six user relabelings.
inline const std::array<std::array<int, 3>, 6>& all_orderings() {
  static const std::array<std::array<int, 3>, 6> k = {{{0, 1, 2},
                                                       {0, 2, 1},
                                                       {1, 0, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {2, 1, 0}}};
  return k;
}

//==============================================================================
// Parametric channel families
//==============================================================================
//
// All families share the circulant template
//
//   H = sqrt(P) * [ 1   h1  h2
//                   h2  1   h1
//                   h1  h2  1  ]
//
// with P the common direct SNR.  The interference exponent alpha positions the
// cross-gain power on the SNR scale: INR = P^alpha, i.e. |h|^2 * P = P^alpha.

enum class Family {
  FullySymmetric,         // h2 forced equal to h1 (every cross link identical)
  CyclicSymmetric,        // h2 forced to zero (one-directional ring)
  MixedStrongVeryStrong,  // |h1|^2 >= 1 and |h2|^2 >= 1 + |h1|^2 + 1/P
  Custom,                 // h1, h2 free
};

struct FamilySpec {
  Family family = Family::Custom;
  double power_db = 20.0;
  cd h1{0.0, 0.0};
  cd h2{0.0, 0.0};
};

inline double power_linear(double power_db) {
  return std::pow(10.0, power_db / 10.0);
}

// Cross-gain magnitude placing INR at P^alpha when the direct SNR is P:
// |h| = P^((alpha-1)/2).  Undefined at P = 1 where the exponent scale
// collapses.
inline double alpha_to_cross_gain(double alpha, double power_db) {
  const double p = power_linear(power_db);
  const double lp = std::log(p);
  if (std::abs(lp) < 1e-12)
    throw DegeneratePower("alpha parametrization undefined at P = 1 (0 dB)");
  return std::exp(0.5 * (alpha - 1.0) * lp);
}

// Inverse of alpha_to_cross_gain on magnitudes.
inline double cross_gain_to_alpha(double mag, double power_db) {
  const double p = power_linear(power_db);
  const double lp = std::log(p);
  if (std::abs(lp) < 1e-12)
    throw DegeneratePower("alpha parametrization undefined at P = 1 (0 dB)");
  return 1.0 + 2.0 * std::log(mag) / lp;
}

inline ChannelMatrix build_family(const FamilySpec& spec) {
  if (!(spec.power_db > -300.0) || !std::isfinite(spec.power_db))
    throw InvalidFamilyParams("power_db out of range");
  const double p = power_linear(spec.power_db);
  const double s = std::sqrt(p);
  cd h1 = spec.h1;
  cd h2 = spec.h2;
  switch (spec.family) {
    case Family::FullySymmetric:
      h2 = h1;
      break;
    case Family::CyclicSymmetric:
      h2 = cd(0.0, 0.0);
      break;
    case Family::MixedStrongVeryStrong: {
      const double a1 = abs2(h1);
      const double a2 = abs2(h2);
      if (!(a1 >= 1.0) || !(a2 >= 1.0 + a1 + 1.0 / p))
        throw InvalidFamilyParams(
            "mixed strong/very-strong family requires |h1|^2 >= 1 and "
            "|h2|^2 >= 1 + |h1|^2 + 1/P");
      break;
    }
    case Family::Custom:
      break;
  }
  Eigen::Matrix3cd m;
  m << cd(1, 0), h1, h2,
       h2, cd(1, 0), h1,
       h1, h2, cd(1, 0);
  m *= s;
  return ChannelMatrix::from_standard(m);
}

// Sweep hook: rescale both cross gains to the common magnitude P^((alpha-1)/2)
// while preserving their phases; exact zeros stay zero.  The named symmetric
// families are the phase-zero instances of this map.
inline FamilySpec family_at_alpha(FamilySpec spec, double alpha) {
  if (spec.family == Family::MixedStrongVeryStrong)
    throw InvalidFamilyParams(
        "mixed strong/very-strong family is not alpha-parameterized");
  const double mag = alpha_to_cross_gain(alpha, spec.power_db);
  auto rescale = [mag](cd h) {
    const double a = std::abs(h);
    return a == 0.0 ? cd(0.0, 0.0) : cd(h * (mag / a));
  };
  if (spec.family == Family::FullySymmetric || spec.family == Family::CyclicSymmetric) {
    if (spec.h1 == cd(0.0, 0.0)) spec.h1 = cd(1.0, 0.0);
  }
  spec.h1 = rescale(spec.h1);
  spec.h2 = rescale(spec.h2);
  return spec;
}

}  // namespace ifc3
