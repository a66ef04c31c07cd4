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

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include <Eigen/Dense>

#include "channel.hpp"
#include "common.hpp"

namespace ifc3 {

//==============================================================================
// Joint noise law
//==============================================================================
//
// Each receiver's noise is marginally CN(0,1); the capacity region depends on
// the marginals only, so the joint law across receivers is a free parameter
// that outer bounds may pick adversarially.  rho12 = E[Z1 conj(Z2)],
// rho13 = E[Z1 conj(Z3)], rho23 = E[Z2 conj(Z3)].

struct NoiseCorrelation {
  cd rho12{0.0, 0.0};
  cd rho13{0.0, 0.0};
  cd rho23{0.0, 0.0};
};

// det of the unit-diagonal Hermitian correlation matrix.
inline double corr_det3(cd r12, cd r13, cd r23) {
  return 1.0 - abs2(r12) - abs2(r13) - abs2(r23) +
         2.0 * (r12 * r23 * std::conj(r13)).real();
}

// PSD test via principal minors (unit diagonal, so 1x1 minors are trivial).
inline bool corr_psd(cd r12, cd r13, cd r23, double tol = 0.0) {
  return 1.0 - abs2(r12) >= -tol && 1.0 - abs2(r13) >= -tol &&
         1.0 - abs2(r23) >= -tol && corr_det3(r12, r13, r23) >= -tol;
}

//==============================================================================
// Conditional mutual information
//==============================================================================
//
// Small index sets over users {0,1,2}, stored as bit masks.

class UserSet {
 public:
  constexpr UserSet() = default;
  constexpr UserSet(std::initializer_list<int> users) {
    for (int u : users) mask_ |= 1u << u;
  }
  static constexpr UserSet all() { return UserSet{0, 1, 2}; }
  constexpr bool contains(int u) const { return (mask_ >> u) & 1u; }
  constexpr int count() const {
    return int((mask_ & 1u) + ((mask_ >> 1) & 1u) + ((mask_ >> 2) & 1u));
  }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr unsigned mask() const { return mask_; }
  constexpr bool intersects(UserSet o) const { return (mask_ & o.mask_) != 0; }

 private:
  unsigned mask_ = 0;
};

namespace detail {

// det of the leading n-by-n block, closed form.
inline double hermitian_det(const Eigen::Matrix3cd& k, int n) {
  if (n == 1) return k(0, 0).real();
  if (n == 2) return k(0, 0).real() * k(1, 1).real() - abs2(k(0, 1));
  return k(0, 0).real() * (k(1, 1).real() * k(2, 2).real() - abs2(k(1, 2))) -
         abs2(k(0, 1)) * k(2, 2).real() - abs2(k(0, 2)) * k(1, 1).real() +
         2.0 * (k(0, 1) * k(1, 2) * std::conj(k(0, 2))).real();
}

}  // namespace detail

// I(Y_A ; X_B | X_C) in bits for jointly Gaussian unit-power inputs, where A =
// `outputs`, B = `inputs`, C = `given`.  Inputs outside B and C are not known
// anywhere and act as additional noise.  With S the set of interfering inputs,
//
//   I = log2 det(K_noise + sum_{b in B} h_b h_b^H) - log2 det(K_noise),
//   K_noise = Sigma_A + sum_{d in S} h_d h_d^H,
//
// h_k = column k of H restricted to rows A, Sigma_A = noise correlation on A.
inline double conditional_mi(const ChannelMatrix& ch, UserSet outputs,
                             UserSet inputs, UserSet given,
                             const NoiseCorrelation& noise = {}) {
  if (outputs.empty() || inputs.empty())
    throw BadInput("conditional_mi: empty output or input set");
  if (inputs.intersects(given))
    throw BadInput("conditional_mi: input and conditioning sets overlap");

  int rows[3];
  int na = 0;
  for (int u = 0; u < 3; ++u)
    if (outputs.contains(u)) rows[na++] = u;

  const cd rc[3][3] = {
      {cd(1, 0), noise.rho12, noise.rho13},
      {std::conj(noise.rho12), cd(1, 0), noise.rho23},
      {std::conj(noise.rho13), std::conj(noise.rho23), cd(1, 0)}};

  Eigen::Matrix3cd kn = Eigen::Matrix3cd::Zero();
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) kn(a, b) = rc[rows[a]][rows[b]];

  const Eigen::Matrix3cd& h = ch.gains();
  auto add_column = [&](Eigen::Matrix3cd& k, int col) {
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b)
        k(a, b) += h(rows[a], col) * std::conj(h(rows[b], col));
  };

  for (int u = 0; u < 3; ++u)
    if (!inputs.contains(u) && !given.contains(u)) add_column(kn, u);

  Eigen::Matrix3cd kt = kn;
  for (int u = 0; u < 3; ++u)
    if (inputs.contains(u)) add_column(kt, u);

  const double dn = detail::hermitian_det(kn, na);
  const double dt = detail::hermitian_det(kt, na);
  if (!(dn > 0.0) || !(dt > 0.0))
    throw SingularCovariance("conditional_mi: covariance not positive definite");
  return to_bits(std::log(dt) - std::log(dn));
}

//==============================================================================
// Worst-case correlation across two MISO observations
//==============================================================================
//
// Two scalar observations of a common vector input x (E[x x^H] = I):
//
//   Y1 = c1^T x + Z1,   Y2 = c2^T x + Z2,   E[Z1 conj(Z2)] = rho.
//
// I(Y1; x | Y2) as a function of rho, and its minimum over the closed unit
// disk.  Writing a = |c1|^2, b = |c2|^2, m = sum_u c1[u] conj(c2[u]):
//
//   2^I = (1 + a - |m + rho|^2 / (1 + b)) / (1 - |rho|^2).

struct MisoPair {
  Eigen::VectorXcd c1, c2;
};

struct LemmaResult {
  double value_bits = 0.0;  // min over the disk
  cd rho_opt{0.0, 0.0};     // a minimizer (on the boundary iff t = 1)
  double t = 1.0;           // alignment parameter, >= 1 (1 when m = 0 too)
  bool zero_inner = false;  // c1 orthogonal to c2: rho = 0 by convention
};

namespace detail {

struct PairStats {
  double a, b, am;  // |c1|^2, |c2|^2, |m|
  cd m;
};

inline PairStats pair_stats(const MisoPair& p) {
  PairStats s{0.0, 0.0, 0.0, cd(0.0, 0.0)};
  for (Eigen::Index i = 0; i < p.c1.size(); ++i) {
    s.a += abs2(p.c1[i]);
    s.b += abs2(p.c2[i]);
    s.m += p.c1[i] * std::conj(p.c2[i]);
  }
  s.am = std::abs(s.m);
  return s;
}

}  // namespace detail

inline double lemma_mi_at_rho(const MisoPair& pair, cd rho) {
  const double nr = abs2(rho);
  if (nr >= 1.0)
    throw BoundaryCorrelation("lemma_mi_at_rho: |rho| must be < 1");
  const auto s = detail::pair_stats(pair);
  const double num = 1.0 + s.a - abs2(s.m + rho) / (1.0 + s.b);
  if (!(num > 0.0))
    throw SingularCovariance("lemma_mi_at_rho: degenerate joint covariance");
  return pos(to_bits(std::log(num) - std::log1p(-nr)));
}

// Minimum at rho = 0 (independent noises), closed form.
inline double rho_zero_mi(const MisoPair& pair) {
  const auto s = detail::pair_stats(pair);
  return pos(to_bits(std::log(1.0 + s.a - s.am * s.am / (1.0 + s.b))));
}

// Closed-form minimum over the disk.  With u = ((1+a)(1+b) - |m|^2 - 1)/2 the
// minimum value is log2(1 + u + sqrt(u^2 - |m|^2)) - log2(1 + b), attained at
//
//   rho* = e^{i arg m} * |m| / (u + sqrt(u^2 - |m|^2)),
//
// i.e. magnitude t - sqrt(t^2 - 1) with t = u/|m| >= 1 (Cauchy-Schwarz plus
// AM-GM; t = 1 exactly when the vectors are parallel with equal norms, which
// pushes rho* to the unit circle).  The u form avoids the 1/|m| blowup and is
// continuous into the orthogonal case m = 0, where rho = 0 is optimal and the
// value is log2(1 + a).
inline LemmaResult lemma_min_mi(const MisoPair& pair) {
  const auto s = detail::pair_stats(pair);
  LemmaResult r;
  if (s.am == 0.0) {
    r.value_bits = to_bits(std::log1p(s.a));
    r.rho_opt = cd(0.0, 0.0);
    r.t = 1.0;
    r.zero_inner = true;
    return r;
  }
  const double u = ((1.0 + s.a) * (1.0 + s.b) - s.am * s.am - 1.0) / 2.0;
  const double root = std::sqrt(std::max(u * u - s.am * s.am, 0.0));
  r.value_bits = pos(to_bits(std::log1p(u + root) - std::log1p(s.b)));
  r.t = std::max(u / s.am, 1.0);
  const double mag = s.am / (u + root);  // t - sqrt(t^2-1), stable form
  r.rho_opt = (s.m / s.am) * mag;
  return r;
}

}  // namespace ifc3
