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

#include <cstdint>
#include <random>

#include "channel.hpp"
#include "gauss_info.hpp"

// Deterministic sample generators for verification runs.  Every instance is
// reproducible from (master seed, index) so a failing sample can be rerun in
// isolation.

namespace ifc3 {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

inline cd random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  return std::polar(1.0, u(rng));
}

// Entry magnitudes uniform in [0, max_mag], phases uniform.
inline MisoPair random_miso_pair(std::mt19937_64& rng, int len,
                                 double max_mag = 10.0) {
  std::uniform_real_distribution<double> mag(0.0, max_mag);
  MisoPair p;
  p.c1.resize(len);
  p.c2.resize(len);
  for (int i = 0; i < len; ++i) {
    p.c1[i] = mag(rng) * random_phase(rng);
    p.c2[i] = mag(rng) * random_phase(rng);
  }
  return p;
}

// Standard-form channel: direct gains uniform in [0.5, 10], cross gains with
// uniform magnitude in [0, cross_max] and uniform phase.
inline ChannelMatrix random_channel(std::mt19937_64& rng,
                                    double cross_max = 5.0) {
  std::uniform_real_distribution<double> diag(0.5, 10.0);
  std::uniform_real_distribution<double> cross(0.0, cross_max);
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = i == j ? cd(diag(rng), 0.0) : cross(rng) * random_phase(rng);
  return ChannelMatrix::from_standard(m);
}

// Real-valued variant (signed cross gains).
inline ChannelMatrix random_real_channel(std::mt19937_64& rng,
                                         double cross_max = 5.0) {
  std::uniform_real_distribution<double> diag(0.5, 10.0);
  std::uniform_real_distribution<double> cross(-cross_max, cross_max);
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = cd(i == j ? diag(rng) : cross(rng), 0.0);
  return ChannelMatrix::from_standard(m);
}

// Channel whose third user neither causes nor sees interference.
inline ChannelMatrix random_decoupled_channel(std::mt19937_64& rng,
                                              double cross_max = 5.0) {
  std::uniform_real_distribution<double> diag(0.5, 10.0);
  std::uniform_real_distribution<double> cross(0.0, cross_max);
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  for (int i = 0; i < 3; ++i) m(i, i) = cd(diag(rng), 0.0);
  m(0, 1) = cross(rng) * random_phase(rng);
  m(1, 0) = cross(rng) * random_phase(rng);
  return ChannelMatrix::from_standard(m);
}

// Feasible (strictly PSD) noise correlation, rejection-sampled.
inline NoiseCorrelation random_noise_correlation(std::mt19937_64& rng,
                                                 double radius = 0.6) {
  std::uniform_real_distribution<double> mag(0.0, radius);
  for (;;) {
    NoiseCorrelation nc;
    nc.rho12 = mag(rng) * random_phase(rng);
    nc.rho13 = mag(rng) * random_phase(rng);
    nc.rho23 = mag(rng) * random_phase(rng);
    if (corr_det3(nc.rho12, nc.rho13, nc.rho23) > 1e-3) return nc;
  }
}

}  // namespace ifc3
