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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ifc3/classic_bounds.hpp"
#include "ifc3/oracle.hpp"

using namespace ifc3;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

ChannelMatrix symmetric_real(double direct, double cross) {
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = cd(i == j ? direct : cross, 0.0);
  return ChannelMatrix::from_standard(m);
}

ChannelMatrix diagonal(double d0, double d1, double d2) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 0) = cd(d0, 0);
  m(1, 1) = cd(d1, 0);
  m(2, 2) = cd(d2, 0);
  return ChannelMatrix::from_standard(m);
}

}  // namespace

TEST_CASE("single-user rates", "[classic]") {
  const ChannelMatrix ch = diagonal(1.0, std::sqrt(3.0), 3.0);
  CHECK(near(single_user_rate(ch, 0), 1.0, 1e-12));
  CHECK(near(single_user_rate(ch, 1), 2.0, 1e-12));
  CHECK(near(single_user_rate(ch, 2), std::log2(10.0), 1e-12));
}

TEST_CASE("two-user genie bound frozen values", "[classic]") {
  // Unit direct and cross gains: log2(1+1+1) + [log2(2/2)]^+ = log2 3.
  CHECK(near(kramer_2user(symmetric_real(1.0, 1.0), 0, 1), std::log2(3.0),
             1e-12));
  // Strong interference |h|^2 = 100: log2(102) + [log2(2/101)]^+ = log2 102.
  CHECK(near(kramer_2user(symmetric_real(1.0, 10.0), 0, 1), std::log2(102.0),
             1e-12));
}

TEST_CASE("two-user side-information bound frozen values", "[classic]") {
  // Unit gains: 2 log2(1 + 1 + 1/2).
  CHECK(near(etw_2user(symmetric_real(1.0, 1.0), 0, 1), 2.0 * std::log2(2.5),
             1e-12));
  // |h|^2 = 100: 2 log2(1 + 100 + 1/101).
  CHECK(near(etw_2user(symmetric_real(1.0, 10.0), 0, 1),
             2.0 * std::log2(101.0 + 1.0 / 101.0), 1e-12));
}

TEST_CASE("two-user bounds are symmetric in the pair", "[classic]") {
  auto rng = seeded_rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const ChannelMatrix ch = random_channel(rng);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        CHECK(near(kramer_2user(ch, i, j), kramer_2user(ch, j, i), 1e-12));
        CHECK(near(etw_2user(ch, i, j), etw_2user(ch, j, i), 1e-12));
      }
    }
  }
}

TEST_CASE("composite bound never exceeds the interference-free sum", "[classic]") {
  auto rng = seeded_rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const ChannelMatrix ch = random_channel(rng);
    const double free_sum = single_user_rate(ch, 0) + single_user_rate(ch, 1) +
                            single_user_rate(ch, 2);
    CHECK(composite_sum_rate(ch, TwoUserRule::Kramer).value_bits <=
          free_sum + 1e-12);
    CHECK(composite_sum_rate(ch, TwoUserRule::Etw).value_bits <=
          free_sum + 1e-12);
  }
}

TEST_CASE("composite bound reports the active term", "[classic]") {
  // No interference: every term equals r1+r2+r3 and the first wins.
  const ChannelMatrix none = diagonal(2.0, 3.0, 4.0);
  const BoundResult r = composite_sum_rate(none, TwoUserRule::Kramer);
  CHECK(near(r.value_bits, single_user_rate(none, 0) +
                               single_user_rate(none, 1) +
                               single_user_rate(none, 2), 1e-12));
  CHECK(r.detail["active"] == "r1+r2+r3");

  // Unit coupling between users 0 and 1 only: their pair bound log2(3) sits
  // below r1+r2 = 2, so the r3+r12 split wins.
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
  m(0, 1) = cd(1.0, 0.0);
  m(1, 0) = cd(1.0, 0.0);
  const ChannelMatrix pair = ChannelMatrix::from_standard(m);
  const BoundResult rp = composite_sum_rate(pair, TwoUserRule::Kramer);
  CHECK(rp.detail["active"] == "r3+r12");
  CHECK(near(rp.value_bits, kramer_2user(pair, 0, 1) + 1.0, 1e-12));
}

TEST_CASE("joint-receiver bound on the identity channel", "[classic]") {
  // G = I: by convexity of log2(1 + 1/x) the independent-noise point is the
  // exact minimum, 3 bits.
  const BoundResult r = mac_bound(diagonal(1.0, 1.0, 1.0));
  CHECK(near(r.value_bits, 3.0, 1e-9));

  // G = 3I: minimum 3 log2(4) = 6 bits.
  const BoundResult r3 = mac_bound(
      diagonal(std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0)));
  CHECK(near(r3.value_bits, 6.0, 1e-9));
}

TEST_CASE("joint-receiver bound never exceeds its independent-noise start",
          "[classic]") {
  auto rng = seeded_rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const ChannelMatrix ch = random_channel(rng);
    const Eigen::Matrix3cd k =
        Eigen::Matrix3cd::Identity() + ch.gains() * ch.gains().adjoint();
    const double at_identity = to_bits(std::log(k.determinant().real()));
    CHECK(mac_bound(ch, trial).value_bits <= at_identity + 1e-12);
  }
}

TEST_CASE("joint-receiver bound is deterministic for a fixed seed", "[classic]") {
  auto rng = seeded_rng(34);
  const ChannelMatrix ch = random_channel(rng);
  const BoundResult a = mac_bound(ch, 77);
  const BoundResult b = mac_bound(ch, 77);
  CHECK(a.value_bits == b.value_bits);
  CHECK(a.detail == b.detail);
}

TEST_CASE("joint-receiver bound matches a dense covariance scan", "[classic]") {
  auto rng = seeded_rng(35);
  const ChannelMatrix ch = random_real_channel(rng);
  const Eigen::Matrix3cd g = ch.gains() * ch.gains().adjoint();
  auto f = [&](double a, double b, double c) {
    Eigen::Matrix3cd sigma;
    sigma << cd(1, 0), cd(a, 0), cd(b, 0),
             cd(a, 0), cd(1, 0), cd(c, 0),
             cd(b, 0), cd(c, 0), cd(1, 0);
    const double ds = ifc3::detail::hermitian_det(sigma, 3);
    if (!(ds > 1e-14)) return std::numeric_limits<double>::infinity();
    return to_bits(std::log(ifc3::detail::hermitian_det(sigma + g, 3)) -
                   std::log(ds));
  };
  const auto orc = oracle::grid_min_covariance(f, 0.04);
  const BoundResult impl = mac_bound(ch, 5);
  CHECK(near(impl.value_bits, orc.value, 1e-2));
}
