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
#include <set>

#include "ifc3/channel.hpp"
#include "ifc3/sampling.hpp"

using namespace ifc3;
using Catch::Approx;

TEST_CASE("standardize rotates rows to a real positive diagonal", "[channel]") {
  Eigen::Matrix3cd raw;
  raw << cd(3.0, 4.0), cd(1.0, 1.0), cd(0.5, 0.0),
         cd(0.0, 2.0), cd(0.0, -5.0), cd(1.0, 0.0),
         cd(2.0, 0.0), cd(0.0, 0.0), cd(-7.0, 0.0);
  const ChannelMatrix ch = ChannelMatrix::standardize(raw);

  for (int i = 0; i < 3; ++i) {
    CHECK(ch(i, i).imag() == 0.0);
    CHECK(ch(i, i).real() > 0.0);
  }
  // |3+4i| = 5, |-5i| = 5, |-7| = 7.
  CHECK(ch.direct(0) == Approx(5.0));
  CHECK(ch.direct(1) == Approx(5.0));
  CHECK(ch.direct(2) == Approx(7.0));

  // Row phase rotation preserves every entry magnitude.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(ch(i, j)) == Approx(std::abs(raw(i, j))).margin(1e-12));
}

TEST_CASE("standardize is exactly idempotent", "[channel]") {
  auto rng = seeded_rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ChannelMatrix ch = random_channel(rng);
    const ChannelMatrix again = ChannelMatrix::standardize(ch.gains());
    // Bitwise: rows already in standard form are not touched.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(again(i, j) == ch(i, j));
  }
}

TEST_CASE("zero direct gain is rejected", "[channel]") {
  Eigen::Matrix3cd raw = Eigen::Matrix3cd::Identity();
  raw(1, 1) = cd(0.0, 0.0);
  CHECK_THROWS_AS(ChannelMatrix::standardize(raw), ZeroDirectGain);
  CHECK_THROWS_AS(ChannelMatrix::from_standard(raw), ZeroDirectGain);

  Eigen::Matrix3cd rotated = Eigen::Matrix3cd::Identity();
  rotated(0, 0) = cd(0.0, 1.0);  // standardizable but not standard
  CHECK_THROWS_AS(ChannelMatrix::from_standard(rotated), ZeroDirectGain);
  CHECK_NOTHROW(ChannelMatrix::standardize(rotated));
}

TEST_CASE("relabeling permutes users consistently", "[channel]") {
  auto rng = seeded_rng(12);
  const ChannelMatrix ch = random_channel(rng);
  const std::array<int, 3> pi = {2, 0, 1};
  const ChannelMatrix rel = ch.relabeled(pi);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(rel(a, b) == ch(pi[a], pi[b]));

  // Relabeling twice with the inverse permutation restores the original.
  const std::array<int, 3> inv = {1, 2, 0};
  const ChannelMatrix back = rel.relabeled(inv);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(back(a, b) == ch(a, b));
}

TEST_CASE("all_orderings enumerates the six permutations once", "[channel]") {
  std::set<std::array<int, 3>> seen;
  for (const auto& pi : all_orderings()) {
    CHECK((pi[0] != pi[1] && pi[1] != pi[2] && pi[0] != pi[2]));
    seen.insert(pi);
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("interference exponent maps to cross-gain magnitude", "[channel]") {
  // |h|^2 P = P^alpha.
  CHECK(alpha_to_cross_gain(1.0, 20.0) == Approx(1.0));
  CHECK(alpha_to_cross_gain(0.0, 20.0) == Approx(0.1));
  CHECK(alpha_to_cross_gain(2.0, 20.0) == Approx(10.0));
  CHECK(power_linear(20.0) == Approx(100.0));

  for (double alpha : {0.0, 0.3, 0.77, 1.0, 1.6}) {
    const double mag = alpha_to_cross_gain(alpha, 17.0);
    CHECK(cross_gain_to_alpha(mag, 17.0) == Approx(alpha).margin(1e-12));
  }

  CHECK_THROWS_AS(alpha_to_cross_gain(0.5, 0.0), DegeneratePower);
  CHECK_THROWS_AS(cross_gain_to_alpha(0.5, 0.0), DegeneratePower);
}

TEST_CASE("family construction follows the circulant template", "[channel]") {
  FamilySpec spec;
  spec.family = Family::Custom;
  spec.power_db = 20.0;
  spec.h1 = cd(0.3, 0.1);
  spec.h2 = cd(-0.2, 0.0);
  const ChannelMatrix ch = build_family(spec);
  const double s = 10.0;  // sqrt(100)
  CHECK(ch(0, 0) == cd(s, 0.0));
  CHECK(ch(0, 1) == s * spec.h1);
  CHECK(ch(0, 2) == s * spec.h2);
  CHECK(ch(1, 0) == s * spec.h2);
  CHECK(ch(1, 2) == s * spec.h1);
  CHECK(ch(2, 0) == s * spec.h1);
  CHECK(ch(2, 1) == s * spec.h2);

  spec.family = Family::FullySymmetric;
  const ChannelMatrix fs = build_family(spec);
  CHECK(fs(0, 2) == fs(0, 1));  // h2 forced equal to h1

  spec.family = Family::CyclicSymmetric;
  const ChannelMatrix cy = build_family(spec);
  CHECK(cy(0, 2) == cd(0.0, 0.0));
  CHECK(cy(1, 0) == cd(0.0, 0.0));
  CHECK(cy(2, 1) == cd(0.0, 0.0));
  CHECK(cy(0, 1) == s * spec.h1);
}

TEST_CASE("mixed strong/very-strong validity region is enforced", "[channel]") {
  FamilySpec spec;
  spec.family = Family::MixedStrongVeryStrong;
  spec.power_db = 20.0;

  spec.h1 = cd(1.0, 0.0);
  spec.h2 = cd(2.0, 0.0);  // |h2|^2 = 4 >= 1 + 1 + 0.01
  CHECK_NOTHROW(build_family(spec));

  spec.h1 = cd(0.5, 0.0);  // |h1|^2 < 1
  CHECK_THROWS_AS(build_family(spec), InvalidFamilyParams);

  spec.h1 = cd(1.0, 0.0);
  spec.h2 = cd(1.4, 0.0);  // |h2|^2 = 1.96 < 2.01
  CHECK_THROWS_AS(build_family(spec), InvalidFamilyParams);
}

TEST_CASE("alpha hook rescales magnitudes and preserves phases", "[channel]") {
  FamilySpec spec;
  spec.family = Family::Custom;
  spec.power_db = 20.0;
  spec.h1 = cd(0.3, 0.4);  // phase atan2(4,3)
  spec.h2 = cd(0.0, 0.0);

  const FamilySpec at = family_at_alpha(spec, 1.0);
  CHECK(std::abs(at.h1) == Approx(1.0));
  CHECK(std::arg(at.h1) == Approx(std::arg(spec.h1)));
  CHECK(at.h2 == cd(0.0, 0.0));  // exact zeros stay zero

  // Named symmetric families default the free gain so the sweep is nontrivial.
  FamilySpec named;
  named.family = Family::FullySymmetric;
  named.power_db = 20.0;
  const FamilySpec fs = family_at_alpha(named, 0.5);
  CHECK(std::abs(fs.h1) == Approx(alpha_to_cross_gain(0.5, 20.0)));

  named.family = Family::MixedStrongVeryStrong;
  CHECK_THROWS_AS(family_at_alpha(named, 0.5), InvalidFamilyParams);
}
