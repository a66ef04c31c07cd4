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
#include <limits>

#include <json.hpp>

#include "channel.hpp"
#include "classic_bounds.hpp"
#include "common.hpp"
#include "gauss_info.hpp"

namespace ifc3 {

//==============================================================================
// Side-information sum-rate bound
//==============================================================================
//
// Receiver j's observation row r_j is paired with a genie observation built
// from receiver k's row with its own user's entry removed (that user's signal
// is what receiver k decodes, so the genie hands over everything else it
// hears).  Each pairing contributes the worst-correlation conditional rate
//
//   f(j, k) = min_{|rho|<=1} I(Y_j ; X | Y'_k),
//
// and the bound is the minimum over all one-to-one side-information
// assignments (permutations pi) of sum_k f(k, pi(k)).

struct RowVectors {
  Eigen::Vector3cd row;     // receiver j's gains
  Eigen::Vector3cd masked;  // receiver k's gains, entry k zeroed
};

inline RowVectors row_vectors(const ChannelMatrix& ch, int j, int k) {
  RowVectors rv;
  for (int u = 0; u < 3; ++u) {
    rv.row[u] = ch(j, u);
    rv.masked[u] = u == k ? cd(0.0, 0.0) : ch(k, u);
  }
  return rv;
}

struct SideInfoTerm {
  double value_bits = 0.0;
  double q = 1.0;           // alignment parameter as literally computed
  bool zero_inner = false;  // orthogonal rows: independent noise is optimal
};

// Literal closed form: with a = |r_j|^2, b = |r'_k|^2, m = <r_j, r'_k>,
//
//   q = ((1+a)(1+b) - |m|^2 - 1) / (2|m|),
//   f = log2( (1 + |m| (q + sqrt(q^2 - 1))) / (1 + b) ),
//
// falling back to log2(1 + a) when m = 0.  Kept as a spelled-out second route;
// lemma_min_mi computes the same quantity through its overflow-safe form and
// the suite pins the two against each other.
inline SideInfoTerm f_jk_term(const ChannelMatrix& ch, int j, int k) {
  const RowVectors rv = row_vectors(ch, j, k);
  double a = 0.0, b = 0.0;
  cd m(0.0, 0.0);
  for (int u = 0; u < 3; ++u) {
    a += abs2(rv.row[u]);
    b += abs2(rv.masked[u]);
    m += rv.row[u] * std::conj(rv.masked[u]);
  }
  const double am = std::abs(m);
  SideInfoTerm t;
  if (am == 0.0) {
    t.value_bits = to_bits(std::log1p(a));
    t.zero_inner = true;
    return t;
  }
  t.q = ((1.0 + a) * (1.0 + b) - am * am - 1.0) / (2.0 * am);
  const double q = std::max(t.q, 1.0);
  t.value_bits = pos(to_bits(
      std::log1p(am * (q + std::sqrt(q * q - 1.0))) - std::log1p(b)));
  return t;
}

inline double f_jk(const ChannelMatrix& ch, int j, int k) {
  return f_jk_term(ch, j, k).value_bits;
}

inline BoundResult th2_sum_rate(const ChannelMatrix& ch) {
  std::array<std::array<SideInfoTerm, 3>, 3> terms;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) terms[j][k] = f_jk_term(ch, j, k);

  BoundResult out;
  out.kind = BoundKind::Th2;
  out.value_bits = std::numeric_limits<double>::infinity();
  nlohmann::json sums = nlohmann::json::array();
  std::array<int, 3> best{0, 1, 2};
  for (const auto& pi : all_orderings()) {
    const double s = terms[0][pi[0]].value_bits + terms[1][pi[1]].value_bits +
                     terms[2][pi[2]].value_bits;
    sums.push_back({{"assignment", pi}, {"value_bits", s}});
    if (s < out.value_bits) {
      out.value_bits = s;
      best = pi;
    }
  }
  out.detail = {
      {"assignment", best},
      {"terms",
       {terms[0][best[0]].value_bits, terms[1][best[1]].value_bits,
        terms[2][best[2]].value_bits}},
      {"q",
       {terms[0][best[0]].q, terms[1][best[1]].q, terms[2][best[2]].q}},
      {"assignments", sums}};
  return out;
}

// Same assignment structure with the correlation pinned to zero; the gap to
// th2_sum_rate measures what the adversarial correlation buys and shrinks as
// the gains grow.
inline BoundResult th2_sum_rate_rho0(const ChannelMatrix& ch) {
  std::array<std::array<double, 3>, 3> terms;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const RowVectors rv = row_vectors(ch, j, k);
      MisoPair p;
      p.c1 = rv.row;
      p.c2 = rv.masked;
      terms[j][k] = rho_zero_mi(p);
    }
  }
  BoundResult out;
  out.kind = BoundKind::Th2;
  out.value_bits = std::numeric_limits<double>::infinity();
  std::array<int, 3> best{0, 1, 2};
  for (const auto& pi : all_orderings()) {
    const double s = terms[0][pi[0]] + terms[1][pi[1]] + terms[2][pi[2]];
    if (s < out.value_bits) {
      out.value_bits = s;
      best = pi;
    }
  }
  out.detail = {{"assignment", best}, {"independent_noise", true}};
  return out;
}

}  // namespace ifc3
