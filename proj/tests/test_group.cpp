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

#include "locfree/group.hpp"
#include "oracles.hpp"

using namespace locfree;

TEST(GroupSpec, RankAndAlphabet) {
  EXPECT_EQ(GroupSpec(Flavor::LF1, 5).rank(), 5);
  EXPECT_EQ(GroupSpec(Flavor::LF1, 5).alphabet_size(), 10);
  EXPECT_EQ(GroupSpec(Flavor::LF2, 3).rank(), 18);
  EXPECT_EQ(GroupSpec(Flavor::FREE2, 2).alphabet_size(), 16);
  EXPECT_THROW(GroupSpec(Flavor::LF1, 0), std::invalid_argument);
}

TEST(GroupSpec, ColumnMajorSerial) {
  const GroupSpec s(Flavor::LF2, 3);
  const Generator g = s.generator(2, 3, Axis::Y);  // z = (3-1)*3 + 2 = 8
  EXPECT_EQ(s.serial(g), 8);
  EXPECT_EQ(s.axis(g), Axis::Y);
  EXPECT_EQ(g.id, 15);
  EXPECT_EQ(s.name(g), "y(2,3)");
  EXPECT_EQ(s.generator(Axis::X, 8).id, 14);
  const Site site = s.site(g);
  EXPECT_EQ(site.i, 2);
  EXPECT_EQ(site.j, 3);
}

TEST(GroupSpec, RoundTripEveryGenerator) {
  for (int n = 1; n <= 4; ++n) {
    const GroupSpec s(Flavor::LF2, n);
    for (int id = 0; id < s.rank(); ++id) {
      const Site site = s.site(Generator{id});
      EXPECT_EQ(s.generator(site.i, site.j, site.axis).id, id);
    }
  }
}

TEST(GroupSpec, DomainErrors) {
  const GroupSpec s1(Flavor::LF1, 3);
  EXPECT_THROW(s1.generator(0), std::domain_error);
  EXPECT_THROW(s1.generator(4), std::domain_error);
  EXPECT_THROW(s1.generator(1, 1, Axis::X), std::domain_error);
  EXPECT_THROW(commutes(s1, Generator{0}, Generator{3}), std::domain_error);
  const GroupSpec s2(Flavor::LF2, 2);
  EXPECT_THROW(s2.generator(3, 1, Axis::X), std::domain_error);
  EXPECT_THROW(s2.generator(Axis::Y, 5), std::domain_error);
}

TEST(Commutes, OneDimensional) {
  const GroupSpec s(Flavor::LF1, 3);
  EXPECT_TRUE(commutes(s, s.generator(1), s.generator(3)));
  EXPECT_FALSE(commutes(s, s.generator(2), s.generator(3)));
  EXPECT_FALSE(commutes(s, s.generator(1), s.generator(2)));
}

TEST(Commutes, TwoDimensional) {
  const GroupSpec s(Flavor::LF2, 3);
  EXPECT_FALSE(commutes(s, s.generator(1, 1, Axis::X), s.generator(2, 1, Axis::X)));
  EXPECT_TRUE(commutes(s, s.generator(1, 1, Axis::X), s.generator(1, 2, Axis::X)));
  EXPECT_TRUE(commutes(s, s.generator(1, 1, Axis::X), s.generator(3, 1, Axis::X)));
  EXPECT_FALSE(commutes(s, s.generator(1, 1, Axis::X), s.generator(1, 1, Axis::Y)));
  EXPECT_FALSE(commutes(s, s.generator(1, 1, Axis::Y), s.generator(1, 2, Axis::Y)));
  EXPECT_TRUE(commutes(s, s.generator(1, 1, Axis::Y), s.generator(2, 1, Axis::Y)));
  // x(i,j) fails to commute with y at (i,j), (i+1,j), (i,j-1), (i+1,j-1)
  const Generator x = s.generator(2, 2, Axis::X);
  EXPECT_FALSE(commutes(s, x, s.generator(3, 2, Axis::Y)));
  EXPECT_FALSE(commutes(s, x, s.generator(2, 1, Axis::Y)));
  EXPECT_FALSE(commutes(s, x, s.generator(3, 1, Axis::Y)));
  EXPECT_TRUE(commutes(s, x, s.generator(1, 2, Axis::Y)));
  EXPECT_TRUE(commutes(s, x, s.generator(2, 3, Axis::Y)));
}

TEST(Commutes, FreeNeverCommutes) {
  const GroupSpec s(Flavor::FREE1, 4);
  EXPECT_FALSE(commutes(s, Generator{0}, Generator{3}));
  EXPECT_TRUE(commutes(s, Generator{2}, Generator{2}));
}

TEST(Commutes, SymmetricReflexiveAndMatchesRelations) {
  for (Flavor f : {Flavor::LF1, Flavor::LF2, Flavor::FREE1, Flavor::FREE2}) {
    for (int n = 1; n <= 4; ++n) {
      const GroupSpec s(f, n);
      const Group group(s);
      for (int a = 0; a < s.rank(); ++a) {
        EXPECT_TRUE(commutes(s, Generator{a}, Generator{a}));
        for (int b = 0; b < s.rank(); ++b) {
          const bool c = commutes(s, Generator{a}, Generator{b});
          EXPECT_EQ(c, commutes(s, Generator{b}, Generator{a}));
          EXPECT_EQ(c, oracle::relation_commutes(s, a, b)) << to_string(f) << " n=" << n << " " << a << "," << b;
          EXPECT_EQ(c, group.commute(Generator{a}, Generator{b}));
        }
      }
    }
  }
}

TEST(Group, ColumnsShareExactlyForNonCommutingPairs) {
  const Group group(GroupSpec(Flavor::LF2, 3));
  const int r = group.rank();
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      if (a == b) continue;
      const auto& ca = group.columns(Generator{a});
      const auto& cb = group.columns(Generator{b});
      bool shared = false;
      for (int x : ca)
        for (int y : cb) shared = shared || x == y;
      EXPECT_EQ(shared, !group.commute(Generator{a}, Generator{b}));
    }
  }
}

TEST(Group, RejectsBadLetters) {
  const Group group(GroupSpec(Flavor::LF1, 3));
  EXPECT_THROW(group.check(Word{{Generator{5}, 1}}), std::domain_error);
  EXPECT_THROW(group.check(Word{{Generator{0}, 2}}), std::domain_error);
  EXPECT_NO_THROW(group.check(Word{{Generator{2}, -1}}));
}

TEST(Flavor, ParseAndPrint) {
  for (Flavor f : {Flavor::LF1, Flavor::LF2, Flavor::FREE1, Flavor::FREE2})
    EXPECT_EQ(parse_flavor(to_string(f)), f);
  EXPECT_THROW(parse_flavor("lf3"), std::invalid_argument);
}

TEST(Word, InverseReversesAndFlips) {
  const Word w{{Generator{0}, 1}, {Generator{2}, -1}};
  const Word inv = inverse(w);
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv[0].gen.id, 2);
  EXPECT_EQ(inv[0].sign, 1);
  EXPECT_EQ(inv[1].gen.id, 0);
  EXPECT_EQ(inv[1].sign, -1);
  EXPECT_EQ(letters(GroupSpec(Flavor::LF2, 2)).size(), 16u);
}
