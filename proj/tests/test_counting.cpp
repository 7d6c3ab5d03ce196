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

#include <functional>
#include <set>
#include <thread>

#include "locfree/counting.hpp"
#include "oracles.hpp"

using namespace locfree;

namespace {

// Rule-abiding 1D sequences of length m + 1, by direct enumeration of the
// three rules (1 -> 2; k -> below k or k + 1; n -> below n).
std::uint64_t count_sequences_1d(int n, int m) {
  std::function<std::uint64_t(int, int)> walk = [&](int k, int left) -> std::uint64_t {
    if (left == 0) return 1;
    std::uint64_t total = 0;
    for (int next = 1; next <= n; ++next) {
      const bool ok = (k == 1) ? next == 2 : (next < k || (next == k + 1 && k < n));
      if (ok) total += walk(next, left - 1);
    }
    return total;
  };
  std::uint64_t total = 0;
  for (int k = 1; k <= n; ++k) total += walk(k, m);
  return total;
}

// 2D sequences of length m + 1 where each step follows the recursion's
// predecessor sets, written out from the recursion terms.
std::uint64_t count_sequences_2d(int n, int m) {
  const int top = n * n;
  // state (axis, z) with axis 0 = x
  auto allowed = [&](int pa, int pz, int na, int nz) {
    if (pz > nz) return true;
    if (na == 0) return (pa == 0 && pz == nz - 1) || (pa == 1 && (pz == nz - n || pz == nz - n + 1 || pz == nz));
    return (pa == 1 && pz == nz - n) || (pa == 0 && (pz == nz - 1 || pz == nz));
  };
  std::function<std::uint64_t(int, int, int)> walk = [&](int a, int z, int left) -> std::uint64_t {
    if (left == 0) return 1;
    std::uint64_t total = 0;
    for (int nz = 1; nz <= top; ++nz)
      for (int na = 0; na < 2; ++na)
        if (allowed(a, z, na, nz)) total += walk(na, nz, left - 1);
    return total;
  };
  std::uint64_t total = 0;
  for (int z = 1; z <= top; ++z)
    for (int a = 0; a < 2; ++a) total += walk(a, z, m);
  return total;
}

BigInt pascal(int a, int b) {
  std::vector<BigInt> row{1};
  for (int r = 1; r <= a; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1, 1);
    for (int k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

}  // namespace

TEST(Successors1D, Examples) {
  EXPECT_EQ(allowed_successors_1d(1, 5), (std::vector<int>{2}));
  EXPECT_EQ(allowed_successors_1d(3, 5), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(allowed_successors_1d(5, 5), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_TRUE(allowed_successors_1d(1, 1).empty());
  EXPECT_THROW(allowed_successors_1d(0, 5), std::domain_error);
  EXPECT_THROW(allowed_successors_1d(6, 5), std::domain_error);
}

TEST(NormalOrder, Examples) {
  const GroupSpec s(Flavor::LF1, 3);
  auto g = [](std::initializer_list<int> ids) {
    std::vector<Generator> v;
    for (int i : ids) v.push_back(Generator{i - 1});
    return v;
  };
  EXPECT_TRUE(is_normal_order(s, g({2, 3, 1})));
  EXPECT_FALSE(is_normal_order(s, g({1, 3})));
  EXPECT_FALSE(is_normal_order(s, g({2, 2})));
  EXPECT_TRUE(is_normal_order(s, g({})));
  EXPECT_TRUE(is_normal_order(s, g({3})));
  EXPECT_TRUE(is_normal_order(GroupSpec(Flavor::FREE1, 3), g({1, 3, 1})));
}

TEST(Predecessors2D, Examples) {
  const GroupSpec s(Flavor::LF2, 2);
  auto ids = [](const std::vector<Generator>& v) {
    std::set<int> out;
    for (auto g : v) out.insert(g.id);
    return out;
  };
  // ids: x@z = 2(z-1), y@z = 2(z-1)+1
  EXPECT_EQ(ids(allowed_predecessors_2d(Axis::X, 1, 2)), (std::set<int>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(ids(allowed_predecessors_2d(Axis::Y, 1, 2)), (std::set<int>{0, 2, 3, 4, 5, 6, 7}));
  // x@4: x@3, y@2, y@3, y@4
  EXPECT_EQ(ids(allowed_predecessors_2d(Axis::X, 4, 2)), (std::set<int>{4, 3, 5, 7}));
  const int n = 5, top = 25;
  EXPECT_EQ(ids(allowed_predecessors_2d(Axis::X, top, n)),
            (std::set<int>{2 * (top - 2), 2 * (top - n - 1) + 1, 2 * (top - n) + 1, 2 * (top - 1) + 1}));
  EXPECT_THROW(allowed_predecessors_2d(Axis::X, 0, 2), std::domain_error);
  EXPECT_THROW(allowed_predecessors_2d(Axis::Y, 5, 2), std::domain_error);
}

TEST(Theta1D, SmallValues) {
  const auto t = theta_1d(3, 4);
  EXPECT_EQ(t.at(0), 3);
  EXPECT_EQ(t.at(1), 5);
  EXPECT_EQ(t.at(2), 8);
  EXPECT_EQ(t.at(3), 13);
  EXPECT_EQ(t.at(4), 21);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(theta_1d(n, 0).at(0), n);
  EXPECT_THROW(t.at(5), std::out_of_range);
}

TEST(Theta1D, MatchesEnumeration) {
  for (int n = 2; n <= 7; ++n) {
    const auto t = theta_1d(n, 6);
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(t.at(m), count_sequences_1d(n, m)) << n << "," << m;
  }
}

TEST(Theta2D, SmallValues) {
  const auto t = theta_2d(2, 5);
  const std::vector<int> expected{8, 45, 241, 1286, 6860};
  for (int m = 0; m < 5; ++m) EXPECT_EQ(t.at(m), expected[static_cast<std::size_t>(m)]);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(theta_2d(n, 0).at(0), 2 * n * n);
}

TEST(Theta2D, MatchesEnumerationAndIsMonotone) {
  for (int n = 2; n <= 3; ++n) {
    const auto t = theta_2d(n, 4);
    for (int m = 0; m <= 4; ++m) EXPECT_EQ(t.at(m), count_sequences_2d(n, m)) << n << "," << m;
    for (int m = 0; m < 4; ++m) EXPECT_GE(t.at(m + 1), t.at(m));
  }
}

TEST(ThetaFree, ClosedForm) {
  const auto t = theta(Flavor::FREE2, 2, 3);
  EXPECT_EQ(t.at(0), 8);
  EXPECT_EQ(t.at(3), 8 * 7 * 7 * 7);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(60, 30), pascal(60, 30));
  EXPECT_EQ(binomial(60, 30).str(), "118264581564861424");
}

TEST(AssembleCount, Examples) {
  EXPECT_EQ(assemble_count(Flavor::LF1, 3, 1, true).value, 6);
  EXPECT_EQ(assemble_count(Flavor::LF1, 3, 2, true).value, 26);
  EXPECT_EQ(assemble_count(Flavor::LF1, 3, 2, false).value, 20);
  EXPECT_EQ(assemble_count(Flavor::LF1, 3, 0, false).value, 1);
  EXPECT_EQ(assemble_count(Flavor::LF1, 3, 1, false).value, 0);
  EXPECT_THROW(assemble_count(Flavor::LF1, 3, -1, true), std::invalid_argument);
}

TEST(AssembleCount, AgreesWithBruteForceSpheres) {
  EXPECT_EQ(assemble_count(Flavor::LF1, 3, 2, true).value, oracle::sphere_size(GroupSpec(Flavor::LF1, 3), 2));
  EXPECT_EQ(assemble_count(Flavor::LF1, 3, 3, true).value, oracle::sphere_size(GroupSpec(Flavor::LF1, 3), 3));
  EXPECT_EQ(assemble_count(Flavor::LF1, 4, 3, true).value, oracle::sphere_size(GroupSpec(Flavor::LF1, 4), 3));
}

TEST(AssembleCount, FreeAssemblyEqualsClosedForm) {
  for (Flavor f : {Flavor::FREE1, Flavor::FREE2})
    for (int n = 1; n <= 3; ++n)
      for (int mu = 0; mu <= 6; ++mu)
        EXPECT_EQ(assemble_count(f, n, mu, true).value, free_count(f, n, mu).value);
}

TEST(FreeCount, Examples) {
  EXPECT_EQ(free_count(Flavor::FREE1, 3, 1).value, 6);
  EXPECT_EQ(free_count(Flavor::FREE1, 3, 3).value, 150);
  EXPECT_EQ(free_count(Flavor::FREE2, 2, 2).value, 240);
  EXPECT_EQ(free_count(Flavor::FREE2, 2, 0).value, 1);
  EXPECT_THROW(free_count(Flavor::LF1, 2, 2), std::invalid_argument);
}

TEST(AssembleCount, ExactForLargeArguments) {
  const auto v = assemble_count(Flavor::LF1, 200, 60, true).value;
  EXPECT_GT(v, 0);
  EXPECT_EQ(v.str().find('e'), std::string::npos);
  EXPECT_GT(v.str().size(), 40u);
}

TEST(ThetaCache, ExtendsAndIsThreadSafe) {
  ThetaCache cache;
  const auto a = cache.get(Flavor::LF1, 5, 3);
  EXPECT_EQ(a->m_max(), 3);
  const auto b = cache.get(Flavor::LF1, 5, 10);
  EXPECT_EQ(b->m_max(), 10);
  EXPECT_EQ(cache.get(Flavor::LF1, 5, 4)->m_max(), 10);
  std::vector<std::thread> threads;
  std::vector<BigInt> out(8);
  for (int k = 0; k < 8; ++k)
    threads.emplace_back([&, k] { out[k] = cache.get(Flavor::LF2, 3, 5 + k)->at(5); });
  for (auto& t : threads) t.join();
  for (const auto& v : out) EXPECT_EQ(v, theta_2d(3, 5).at(5));
}
