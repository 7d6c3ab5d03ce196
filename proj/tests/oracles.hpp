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

// Independent reference implementations used only by the tests. None of them
// call into the canonicalizers or the counting code.

#ifndef LOCFREE_TESTS_ORACLES_HPP
#define LOCFREE_TESTS_ORACLES_HPP

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "locfree/group.hpp"

namespace oracle {

using locfree::Generator;
using locfree::GroupSpec;
using locfree::Letter;
using locfree::Word;

// Commutation straight from the defining relations, written independently
// of locfree::commutes.
inline bool relation_commutes(const GroupSpec& spec, int g, int h) {
  if (g == h) return true;
  if (spec.free()) return false;
  if (!spec.two_dimensional()) return std::abs(g - h) >= 2;
  const int n = spec.n();
  auto decode = [n](int id, int& i, int& j) {
    const int z = id / 2 + 1;
    i = (z - 1) % n + 1;
    j = (z - 1) / n + 1;
  };
  int i1, j1, i2, j2;
  decode(g, i1, j1);
  decode(h, i2, j2);
  const bool gx = g % 2 == 0, hx = h % 2 == 0;
  if (gx && hx) return j1 != j2 || std::abs(i1 - i2) > 1;
  if (!gx && !hx) return i1 != i2 || std::abs(j1 - j2) > 1;
  if (!gx) {  // orient so that the x generator is first
    std::swap(i1, i2);
    std::swap(j1, j2);
  }
  const int di = i2 - i1, dj = j1 - j2;
  return !((di == 0 || di == 1) && (dj == 0 || dj == 1));
}

inline std::vector<int> encode(const Word& w) {
  std::vector<int> v;
  for (const auto& l : w) v.push_back(2 * l.gen.id + (l.sign > 0 ? 1 : 0));
  return v;
}

struct Closure {
  std::size_t min_length = 0;
  bool reaches_identity = false;
  std::size_t size = 0;
};

// Every word reachable by swapping adjacent commuting letters and deleting
// adjacent inverse pairs. In a right-angled Artin group this reaches a
// geodesic, so min_length is the irreducible length.
inline Closure closure(const GroupSpec& spec, const Word& w) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  const auto start = encode(w);
  seen.insert(start);
  queue.push_back(start);
  Closure c{start.size(), start.empty(), 0};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    c.min_length = std::min(c.min_length, cur.size());
    if (cur.empty()) c.reaches_identity = true;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const int a = cur[k], b = cur[k + 1];
      std::vector<int> next;
      if (a / 2 == b / 2 && a != b) {
        next = cur;
        next.erase(next.begin() + static_cast<long>(k), next.begin() + static_cast<long>(k) + 2);
      } else if (a / 2 != b / 2 && relation_commutes(spec, a / 2, b / 2)) {
        next = cur;
        std::swap(next[k], next[k + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  c.size = seen.size();
  return c;
}

inline bool equal_in_group(const GroupSpec& spec, const Word& a, const Word& b) {
  Word w = a;
  for (auto it = b.rbegin(); it != b.rend(); ++it) w.push_back(Letter{it->gen, -it->sign});
  return closure(spec, w).reaches_identity;
}

inline Word random_word(std::mt19937_64& rng, const GroupSpec& spec, int length) {
  Word w;
  for (int k = 0; k < length; ++k)
    w.push_back(Letter{Generator{static_cast<int>(rng() % static_cast<std::uint64_t>(spec.rank()))},
                       (rng() & 1) ? 1 : -1});
  return w;
}

// Number of distinct group elements of irreducible length exactly mu,
// by brute force over all words of length mu (closure-based).
inline std::size_t sphere_size(const GroupSpec& spec, int mu) {
  const int a = spec.alphabet_size();
  std::vector<Word> reps;
  std::vector<int> digits(static_cast<std::size_t>(mu), 0);
  for (;;) {
    Word w;
    for (int d : digits) w.push_back(Letter{Generator{d / 2}, d % 2 ? 1 : -1});
    if (closure(spec, w).min_length == static_cast<std::size_t>(mu)) {
      bool fresh = true;
      for (const auto& r : reps)
        if (equal_in_group(spec, r, w)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(w);
    }
    int k = 0;
    while (k < mu && ++digits[static_cast<std::size_t>(k)] == a) digits[static_cast<std::size_t>(k++)] = 0;
    if (k == mu) break;
  }
  return reps.size();
}

}  // namespace oracle

#endif  // LOCFREE_TESTS_ORACLES_HPP
