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
#include <complex>
#include <stdexcept>
#include <string>

namespace ifc3 {

using cd = std::complex<double>;

inline constexpr double kLn2 = 0.6931471805599453094;
inline constexpr double kPi = 3.1415926535897932385;

// All public rate values are in bits; complex circularly-symmetric
// convention throughout (log2(1+SNR), no 1/2 factor).
inline double to_bits(double nats) { return nats / kLn2; }

inline double sqr(double x) { return x * x; }
inline double abs2(cd z) { return z.real() * z.real() + z.imag() * z.imag(); }

// [x]^+
inline double pos(double x) { return x > 0.0 ? x : 0.0; }

//==============================================================================
// Error types
//==============================================================================

// A direct (diagonal) gain is exactly zero; the standard form is undefined.
struct ZeroDirectGain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Family parameters violate the family's validity region.
struct InvalidFamilyParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Power level makes the interference-exponent map degenerate (P = 1).
struct DegeneratePower : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A covariance that must be positive definite is numerically singular.
struct SingularCovariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pairwise noise correlation lies on or outside the unit circle.
struct BoundaryCorrelation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An analytic candidate correlation is undefined for this channel.
struct InapplicableCandidate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The equal-rate condition boundary does not intersect the feasible disk.
struct EmptyBoundary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed external input (files, CLI values).
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ifc3
