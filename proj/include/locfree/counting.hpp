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

// Exact counting of normal-order generator sequences and of distinct
// elements of a given irreducible length.

#ifndef LOCFREE_COUNTING_HPP
#define LOCFREE_COUNTING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "locfree/bigint.hpp"
#include "locfree/group.hpp"

namespace locfree {

// Sequence counts theta(m), m = 0..m_max, for sequences of m + 1 base
// generators in normal order, all starting generators summed.
struct CountTable {
  Flavor flavor = Flavor::LF1;
  int n = 0;
  std::vector<BigInt> values;
  // Counts at m_max split by final generator id (1D: f_x at x-1; 2D: a(z) at
  // 2(z-1), b(z) at 2(z-1)+1).
  std::vector<BigInt> final_state;

  int m_max() const { return static_cast<int>(values.size()) - 1; }

  const BigInt& at(int m) const {
    if (m < 0 || m > m_max()) throw std::out_of_range("count table index out of range");
    return values[static_cast<std::size_t>(m)];
  }
};

struct WordCount {
  Flavor flavor = Flavor::LF1;
  int n = 0;
  int mu = 0;
  BigInt value;
  bool include_m0 = true;
};

inline BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;
  }
  return r;
}

inline std::vector<int> allowed_successors_1d(int k, int n) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("generator index out of range");
  std::vector<int> out;
  if (k == 1) {
    if (n >= 2) out.push_back(2);
    return out;
  }
  for (int i = 1; i < k; ++i) out.push_back(i);
  if (k < n) out.push_back(k + 1);
  return out;
}

// Whether `prev` may directly precede `next` in a 2D normal-order sequence.
// x@z is preceded by x@z-1, y@z-n, y@z-n+1, y@z or anything at a larger
// serial; y@z by y@z-n, x@z-1, x@z or anything at a larger serial. Serials
// outside [1, n^2] do not exist.
inline bool precedes_2d(Axis prev_axis, int prev_z, Axis next_axis, int next_z, int n) {
  const int top = n * n;
  if (prev_z < 1 || prev_z > top || next_z < 1 || next_z > top)
    throw std::domain_error("serial out of range");
  if (prev_z > next_z) return true;
  const int d = next_z - prev_z;
  if (next_axis == Axis::X) {
    if (prev_axis == Axis::X) return d == 1;
    return d == n || d == n - 1 || d == 0;
  }
  if (prev_axis == Axis::Y) return d == n;
  return d == 1 || d == 0;
}

// Predecessor set of (axis, z) in the 2D recursion, as LF2 generators sorted by id.
inline std::vector<Generator> allowed_predecessors_2d(Axis axis, int z, int n) {
  if (n < 1 || z < 1 || z > n * n) throw std::domain_error("serial out of range");
  GroupSpec spec(Flavor::LF2, n);
  std::vector<Generator> out;
  for (int id = 0; id < spec.rank(); ++id) {
    Generator g{id};
    if (precedes_2d(spec.axis(g), spec.serial(g), axis, z, n)) out.push_back(g);
  }
  return out;
}

inline bool is_normal_order(const GroupSpec& spec, std::span<const Generator> seq) {
  for (auto g : seq) spec.check(g);
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const Generator a = seq[k - 1];
    const Generator b = seq[k];
    if (a == b) return false;
    switch (spec.flavor()) {
      case Flavor::FREE1:
      case Flavor::FREE2:
        break;
      case Flavor::LF1:
        if (!(b.id == a.id + 1 || b.id < a.id)) return false;
        break;
      case Flavor::LF2:
        if (!precedes_2d(spec.axis(a), spec.serial(a), spec.axis(b), spec.serial(b), spec.n()))
          return false;
        break;
    }
  }
  return true;
}

inline bool is_normal_order(const GroupSpec& spec, const std::vector<Generator>& seq) {
  return is_normal_order(spec, std::span<const Generator>(seq));
}

// theta(x, m+1) = theta(x-1, m) + sum_{y > x} theta(y, m), all-ones start,
// theta(0, m) = theta(n+1, m) = 0.
inline CountTable theta_1d(int n, int m_max) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
  CountTable t{Flavor::LF1, n, {}, {}};
  std::vector<BigInt> cur(static_cast<std::size_t>(n), BigInt(1));
  std::vector<BigInt> next(cur.size());
  t.values.reserve(static_cast<std::size_t>(m_max) + 1);
  t.values.push_back(BigInt(n));
  for (int m = 0; m < m_max; ++m) {
    BigInt suffix = 0;  // sum over y > x
    BigInt total = 0;
    for (int x = n - 1; x >= 0; --x) {
      next[x] = suffix;
      if (x > 0) next[x] += cur[x - 1];
      suffix += cur[x];
      total += next[x];
    }
    std::swap(cur, next);
    t.values.push_back(std::move(total));
  }
  t.final_state = std::move(cur);
  return t;
}

// a(z, m+1) = a(z-1) + b(z-n) + b(z-n+1) + b(z) + sum_{z' > z} (a + b)(z')
// b(z, m+1) = b(z-n) + a(z-1) + a(z) + sum_{z' > z} (a + b)(z')
// from a = b = 1; serials outside [1, n^2] contribute zero.
inline CountTable theta_2d(int n, int m_max) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
  const int top = n * n;
  CountTable t{Flavor::LF2, n, {}, {}};
  // index z in [0, top + 1]; 0 and top + 1 are the zero boundary.
  std::vector<BigInt> a(static_cast<std::size_t>(top) + 2, BigInt(1));
  std::vector<BigInt> b(a);
  a[0] = b[0] = a[top + 1] = b[top + 1] = 0;
  std::vector<BigInt> na(a.size()), nb(a.size());
  auto get = [top](const std::vector<BigInt>& v, int z) -> const BigInt& {
    static const BigInt zero = 0;
    return (z < 1 || z > top) ? zero : v[static_cast<std::size_t>(z)];
  };
  t.values.push_back(BigInt(2 * top));
  for (int m = 0; m < m_max; ++m) {
    BigInt suffix = 0;
    BigInt total = 0;
    for (int z = top; z >= 1; --z) {
      na[z] = get(a, z - 1) + get(b, z - n) + get(b, z - n + 1) + b[z] + suffix;
      nb[z] = get(b, z - n) + get(a, z - 1) + a[z] + suffix;
      suffix += a[z] + b[z];
      total += na[z] + nb[z];
    }
    std::swap(a, na);
    std::swap(b, nb);
    t.values.push_back(std::move(total));
  }
  t.final_state.reserve(static_cast<std::size_t>(2 * top));
  for (int z = 1; z <= top; ++z) {
    t.final_state.push_back(a[z]);
    t.final_state.push_back(b[z]);
  }
  return t;
}

// Sequences with no generator repeated twice in a row: r (r-1)^m.
inline CountTable theta_free(Flavor flavor, int n, int m_max) {
  GroupSpec spec(free_of(flavor), n);
  const long r = spec.rank();
  CountTable t{spec.flavor(), n, {}, {}};
  BigInt v = r;
  for (int m = 0; m <= m_max; ++m) {
    t.values.push_back(v);
    v *= r - 1;
  }
  return t;
}

inline CountTable theta(Flavor flavor, int n, int m_max) {
  switch (flavor) {
    case Flavor::LF1: return theta_1d(n, m_max);
    case Flavor::LF2: return theta_2d(n, m_max);
    default: return theta_free(flavor, n, m_max);
  }
}

// Tables computed once per (flavor, n) and extended when a larger m_max is
// requested. Safe for concurrent use.
class ThetaCache {
 public:
  std::shared_ptr<const CountTable> get(Flavor flavor, int n, int m_max) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = tables_[{flavor, n}];
    if (!slot || slot->m_max() < m_max)
      slot = std::make_shared<const CountTable>(theta(flavor, n, m_max));
    return slot;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<Flavor, int>, std::shared_ptr<const CountTable>> tables_;
};

inline ThetaCache& theta_cache() {
  static ThetaCache cache;
  return cache;
}

// sum_{m} 2^{m+1} C(mu-1, m) theta(m), m from 1 (or 0 with include_m0) to mu-1.
inline WordCount assemble_count(const CountTable& table, int mu, bool include_m0) {
  if (mu < 0) throw std::invalid_argument("mu must be non-negative");
  WordCount wc{table.flavor, table.n, mu, 0, include_m0};
  if (mu == 0) {
    wc.value = 1;
    return wc;
  }
  if (table.m_max() < mu - 1) throw std::out_of_range("count table too short for mu");
  BigInt pow2 = include_m0 ? 2 : 4;
  for (int m = include_m0 ? 0 : 1; m <= mu - 1; ++m) {
    wc.value += pow2 * binomial(mu - 1, m) * table.at(m);
    pow2 <<= 1;
  }
  return wc;
}

inline WordCount assemble_count(Flavor flavor, int n, int mu, bool include_m0) {
  auto table = theta_cache().get(flavor, n, std::max(mu - 1, 0));
  return assemble_count(*table, mu, include_m0);
}

// 2r (2r - 1)^{mu-1} for r base generators.
inline WordCount free_count(Flavor flavor, int n, int mu) {
  if (!is_free(flavor)) throw std::invalid_argument("free_count needs a free flavor");
  if (mu < 0) throw std::invalid_argument("mu must be non-negative");
  GroupSpec spec(flavor, n);
  WordCount wc{flavor, n, mu, 1, true};
  if (mu == 0) return wc;
  const long a = spec.alphabet_size();
  wc.value = a;
  for (int k = 1; k < mu; ++k) wc.value *= a - 1;
  return wc;
}

}  // namespace locfree

#endif  // LOCFREE_COUNTING_HPP
