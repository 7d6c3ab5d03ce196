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

// Alphabets, words and commutation rules for the 1+1 and 2+1 locally free
// groups and their free counterparts.

#ifndef LOCFREE_GROUP_HPP
#define LOCFREE_GROUP_HPP

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace locfree {

enum class Flavor { LF1, LF2, FREE1, FREE2 };

enum class Axis : std::uint8_t { X = 0, Y = 1 };

inline std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::LF1: return "lf1";
    case Flavor::LF2: return "lf2";
    case Flavor::FREE1: return "free1";
    case Flavor::FREE2: return "free2";
  }
  return "?";
}

inline Flavor parse_flavor(std::string_view s) {
  if (s == "lf1") return Flavor::LF1;
  if (s == "lf2") return Flavor::LF2;
  if (s == "free1") return Flavor::FREE1;
  if (s == "free2") return Flavor::FREE2;
  throw std::invalid_argument("unknown flavor '" + std::string(s) + "'");
}

inline bool is_2d(Flavor f) { return f == Flavor::LF2 || f == Flavor::FREE2; }
inline bool is_free(Flavor f) { return f == Flavor::FREE1 || f == Flavor::FREE2; }

// The locally free flavor sharing the alphabet of `f`.
inline Flavor locally_free_of(Flavor f) { return is_2d(f) ? Flavor::LF2 : Flavor::LF1; }
inline Flavor free_of(Flavor f) { return is_2d(f) ? Flavor::FREE2 : Flavor::FREE1; }

// A base generator, identified by a dense 0-based id.
//
// 1D: id = i - 1 for f_i.
// 2D: id = 2 (z - 1) + axis, with the column-major serial z = (j - 1) n + i.
// Comparing ids compares generators in normal order (serial first, then axis).
struct Generator {
  int id = 0;
  friend constexpr auto operator<=>(Generator, Generator) = default;
};

struct Site {
  int i = 1;
  int j = 1;
  Axis axis = Axis::X;
  friend constexpr bool operator==(const Site&, const Site&) = default;
};

class GroupSpec {
 public:
  GroupSpec(Flavor flavor, int n) : flavor_(flavor), n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
  }

  Flavor flavor() const { return flavor_; }
  int n() const { return n_; }
  bool two_dimensional() const { return is_2d(flavor_); }
  bool free() const { return is_free(flavor_); }

  // Number of base generators: n (1D) or 2 n^2 (2D).
  int rank() const { return two_dimensional() ? 2 * n_ * n_ : n_; }
  // Signed letters, inverses included.
  int alphabet_size() const { return 2 * rank(); }

  bool contains(Generator g) const { return g.id >= 0 && g.id < rank(); }

  Generator generator(int i) const {
    if (two_dimensional()) throw std::domain_error("1D index used on a 2D group");
    if (i < 1 || i > n_) throw std::domain_error("generator index out of range");
    return Generator{i - 1};
  }

  Generator generator(int i, int j, Axis axis) const {
    if (!two_dimensional()) throw std::domain_error("2D site used on a 1D group");
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::domain_error("generator site out of range");
    int z = (j - 1) * n_ + i;
    return Generator{2 * (z - 1) + static_cast<int>(axis)};
  }

  Generator generator(Axis axis, int serial) const {
    if (!two_dimensional()) throw std::domain_error("2D serial used on a 1D group");
    if (serial < 1 || serial > n_ * n_) throw std::domain_error("serial out of range");
    return Generator{2 * (serial - 1) + static_cast<int>(axis)};
  }

  // 1-based position in the normal order: index i (1D) or serial z (2D).
  int serial(Generator g) const {
    check(g);
    return two_dimensional() ? g.id / 2 + 1 : g.id + 1;
  }

  Axis axis(Generator g) const {
    check(g);
    return two_dimensional() && (g.id % 2) ? Axis::Y : Axis::X;
  }

  Site site(Generator g) const {
    if (!two_dimensional()) throw std::domain_error("site() on a 1D group");
    int z = serial(g);
    return Site{(z - 1) % n_ + 1, (z - 1) / n_ + 1, axis(g)};
  }

  std::string name(Generator g) const {
    if (!two_dimensional()) return "f" + std::to_string(serial(g));
    Site s = site(g);
    return std::string(s.axis == Axis::X ? "x" : "y") + "(" + std::to_string(s.i) + "," +
           std::to_string(s.j) + ")";
  }

  void check(Generator g) const {
    if (!contains(g)) throw std::domain_error("generator outside the alphabet");
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  Flavor flavor_;
  int n_;
};

// One letter of a word: a base generator raised to +1 or -1.
struct Letter {
  Generator gen;
  int sign = 1;

  Letter inverse() const { return Letter{gen, -sign}; }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// Every signed letter of the alphabet, ordered by (generator, sign).
inline std::vector<Letter> letters(const GroupSpec& spec) {
  std::vector<Letter> out;
  out.reserve(spec.alphabet_size());
  for (int id = 0; id < spec.rank(); ++id) {
    out.push_back(Letter{Generator{id}, -1});
    out.push_back(Letter{Generator{id}, +1});
  }
  return out;
}

// x-x: commute iff |j1-j2| > 0 or |i1-i2| > 1.
// y-y: the same rule with i and j exchanged.
// x-y: with the x generator first, commute iff i2-i1 not in {0,1} or
//      j1-j2 not in {0,1}.
inline bool sites_commute(const Site& a, const Site& b) {
  if (a == b) return true;
  if (a.axis == Axis::X && b.axis == Axis::X)
    return std::abs(a.j - b.j) > 0 || std::abs(a.i - b.i) > 1;
  if (a.axis == Axis::Y && b.axis == Axis::Y)
    return std::abs(a.i - b.i) > 0 || std::abs(a.j - b.j) > 1;
  const Site& x = a.axis == Axis::X ? a : b;
  const Site& y = a.axis == Axis::X ? b : a;
  int di = y.i - x.i;
  int dj = x.j - y.j;
  return !((di == 0 || di == 1) && (dj == 0 || dj == 1));
}

// True iff the defining relations let g and h commute. commutes(g, g) holds.
inline bool commutes(const GroupSpec& spec, Generator g, Generator h) {
  spec.check(g);
  spec.check(h);
  if (g == h) return true;
  switch (spec.flavor()) {
    case Flavor::FREE1:
    case Flavor::FREE2:
      return false;
    case Flavor::LF1:
      return std::abs(g.id - h.id) >= 2;
    case Flavor::LF2:
      return sites_commute(spec.site(g), spec.site(h));
  }
  return false;
}

// A group together with its precomputed commutation table.
class Group {
 public:
  explicit Group(GroupSpec spec) : spec_(spec), rank_(spec.rank()) {
    table_.assign(static_cast<std::size_t>(rank_) * rank_, 0);
    columns_.resize(rank_);
    for (int a = 0; a < rank_; ++a) columns_[a].push_back(a);
    num_columns_ = rank_;
    for (int a = 0; a < rank_; ++a) {
      for (int b = 0; b < rank_; ++b) {
        bool c = commutes(spec_, Generator{a}, Generator{b});
        table_[idx(a, b)] = c ? 1 : 0;
        if (a < b && !c) {
          columns_[a].push_back(num_columns_);
          columns_[b].push_back(num_columns_);
          ++num_columns_;
        }
      }
    }
  }

  const GroupSpec& spec() const { return spec_; }
  int rank() const { return rank_; }

  bool commute(Generator g, Generator h) const { return table_[idx(g.id, h.id)] != 0; }

  // Columns of a heap of pieces: one per generator and one per
  // non-commuting pair. Two generators share a column iff they are equal or
  // do not commute. columns(g) starts with g's own column, which is g.id.
  int num_columns() const { return num_columns_; }
  const std::vector<int>& columns(Generator g) const { return columns_[g.id]; }

  void check(const Word& w) const {
    for (const auto& l : w) {
      spec_.check(l.gen);
      if (l.sign != 1 && l.sign != -1) throw std::domain_error("letter sign must be +1 or -1");
    }
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * rank_ + b; }

  GroupSpec spec_;
  int rank_;
  std::vector<std::uint8_t> table_;
  std::vector<std::vector<int>> columns_;
  int num_columns_ = 0;
};

}  // namespace locfree

#endif  // LOCFREE_GROUP_HPP
