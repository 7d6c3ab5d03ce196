// Copyright 2026 The locfree Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "locfree/counting.hpp"
#include "locfree/explorer.hpp"
#include "oracles.hpp"

using namespace locfree;

TEST(Bfs, OneDimensionalSpheres) {
  const auto p = bfs_spheres(GroupSpec(Flavor::LF1, 3), 6, Dedup::Both);
  const std::vector<int> expected{1, 6, 26, 110, 466, 1974, 8362};
  ASSERT_EQ(p.mu_max(), 6);
  for (int mu = 0; mu <= 6; ++mu) EXPECT_EQ(p.sizes[mu], expected[static_cast<std::size_t>(mu)]);
  EXPECT_EQ(p.mismatches, 0u);
  EXPECT_GT(p.cross_checked, 0u);
  EXPECT_FALSE(p.truncated);
}

TEST(Bfs, SpheresMatchAssembledCounts) {
  for (int n = 1; n <= 5; ++n) {
    const auto p = bfs_spheres(GroupSpec(Flavor::LF1, n), 5, Dedup::Stack);
    for (int mu = 0; mu <= 5; ++mu)
      EXPECT_EQ(p.sizes[mu], assemble_count(Flavor::LF1, n, mu, true).value) << n << "," << mu;
  }
}

TEST(Bfs, SpheresMatchBruteForce) {
  for (const auto& spec : {GroupSpec(Flavor::LF1, 4), GroupSpec(Flavor::LF2, 1)}) {
    const auto p = bfs_spheres(spec, 3, Dedup::Rewrite);
    for (int mu = 0; mu <= 3; ++mu) EXPECT_EQ(p.sizes[mu], oracle::sphere_size(spec, mu));
  }
  const GroupSpec lf2(Flavor::LF2, 2);
  const auto p = bfs_spheres(lf2, 2, Dedup::Stack);
  EXPECT_EQ(p.sizes[2], oracle::sphere_size(lf2, 2));
}

TEST(Bfs, FreeSpheres) {
  const auto p = bfs_spheres(GroupSpec(Flavor::FREE1, 3), 6, Dedup::Stack);
  BigInt expect = 6;
  for (int mu = 1; mu <= 6; ++mu) {
    EXPECT_EQ(p.sizes[mu], expect);
    expect *= 5;
  }
}

TEST(Bfs, IdentityAndZeroDepth) {
  const auto p = bfs_spheres(GroupSpec(Flavor::LF2, 2), 0, Dedup::Stack);
  ASSERT_EQ(p.sizes.size(), 1u);
  EXPECT_EQ(p.sizes[0], 1);
  EXPECT_THROW(bfs_spheres(GroupSpec(Flavor::LF1, 2), -1, Dedup::Stack), std::invalid_argument);
}

TEST(Bfs, CapTruncatesWithMarker) {
  BfsOptions opt;
  opt.cap = 200;
  const auto p = bfs_spheres(GroupSpec(Flavor::LF1, 3), 6, opt);
  EXPECT_TRUE(p.truncated);
  EXPECT_EQ(p.mu_max(), 3);  // levels 0..3 fit, level 4 does not
  EXPECT_EQ(p.sizes[3], 110);
  EXPECT_THROW(enumerate_classes(GroupSpec(Flavor::LF1, 3), 5, 100), std::length_error);
}

TEST(Enumerate, Examples) {
  const GroupSpec s(Flavor::LF1, 2);
  EXPECT_EQ(enumerate_classes(s, 1).size(), 4u);
  EXPECT_EQ(enumerate_classes(s, 2).size(), 12u);
  const auto forms = enumerate_classes(GroupSpec(Flavor::LF1, 3), 3);
  EXPECT_EQ(forms.size(), 110u);
  EXPECT_TRUE(std::is_sorted(forms.begin(), forms.end()));
  EXPECT_EQ(std::adjacent_find(forms.begin(), forms.end()), forms.end());
  for (const auto& f : forms) EXPECT_EQ(f.length(), 3);
}

TEST(ZEff, FreeIsExact) {
  const auto br = empirical_z_eff(bfs_spheres(GroupSpec(Flavor::FREE1, 3), 6, Dedup::Stack));
  ASSERT_EQ(br.steps.size(), 5u);
  for (const auto& s : br.steps) {
    EXPECT_EQ(s.numerator, 5 * s.denominator);
    EXPECT_DOUBLE_EQ(s.z_eff, 6.0);
  }
  EXPECT_DOUBLE_EQ(br.limit_estimate, 6.0);
}

TEST(ZEff, ShortProfileIsAnError) {
  EXPECT_THROW(empirical_z_eff(bfs_spheres(GroupSpec(Flavor::LF1, 3), 1, Dedup::Stack)),
               std::invalid_argument);
}

TEST(ZEff, OneDimensionalRatiosFallTowardTheLimit) {
  // sphere ratio -> 1 + 2 lambda with lambda = 4 cos^2(pi / 8) - 1 for n = 6
  const double c = std::cos(std::numbers::pi / 8);
  const double limit = 2.0 + 2.0 * (4.0 * c * c - 1.0);
  const auto br = empirical_z_eff(bfs_spheres(GroupSpec(Flavor::LF1, 6), 7, Dedup::Stack));
  for (std::size_t k = 1; k < br.steps.size(); ++k) EXPECT_LT(br.steps[k].z_eff, br.steps[k - 1].z_eff);
  for (const auto& s : br.steps) EXPECT_GT(s.z_eff, limit);
  EXPECT_NEAR(br.limit_estimate, limit, 0.1);
}

TEST(DualOracle, Agreement) {
  const auto a = dual_oracle_check(GroupSpec(Flavor::LF1, 3), 6);
  EXPECT_TRUE(a.identical);
  const auto b = dual_oracle_check(GroupSpec(Flavor::LF2, 2), 4);
  EXPECT_TRUE(b.identical);
  const std::vector<int> lf2{1, 16, 180, 1848, 18492};
  for (int mu = 0; mu <= 4; ++mu) EXPECT_EQ(b.stack.sizes[mu], lf2[static_cast<std::size_t>(mu)]);
  const auto c = dual_oracle_check(GroupSpec(Flavor::FREE1, 3), 5);
  EXPECT_TRUE(c.identical);
  for (int mu = 0; mu <= 5; ++mu) EXPECT_EQ(c.stack.sizes[mu], free_count(Flavor::FREE1, 3, mu).value);
}

TEST(Dedup, ParseAndPrint) {
  for (Dedup d : {Dedup::Rewrite, Dedup::Stack, Dedup::Both}) EXPECT_EQ(parse_dedup(to_string(d)), d);
  EXPECT_THROW(parse_dedup("heap"), std::invalid_argument);
}
