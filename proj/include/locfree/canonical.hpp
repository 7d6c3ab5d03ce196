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

// Canonical forms for elements of partially commutative groups.
//
// The canonical form of an element is its reduced syllable sequence that is
// lexicographically largest in generator order among all rearrangements
// allowed by the commutation relations. In 1D this is exactly the sequence
// obeying the local rules: f_1 is followed by f_2, f_k by f_{k+1} or a lower
// index, f_n by a lower index.
//
// Two unrelated algorithms compute it:
//   canonicalize_rewrite  fixpoint of a rewriting system on syllables;
//   canonicalize_stack    heap of pieces built on per-generator stacks.

#ifndef LOCFREE_CANONICAL_HPP
#define LOCFREE_CANONICAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "locfree/group.hpp"

namespace locfree {

struct Syllable {
  Generator gen;
  int exponent = 0;
  friend constexpr auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Ordered by (generator, exponent) pairs, lexicographically.
struct NormalForm {
  std::vector<Syllable> syllables;

  bool empty() const { return syllables.empty(); }
  std::size_t size() const { return syllables.size(); }

  // Irreducible length: sum of |exponent|.
  int length() const {
    int mu = 0;
    for (const auto& s : syllables) mu += std::abs(s.exponent);
    return mu;
  }

  std::vector<Generator> generators() const {
    std::vector<Generator> out;
    out.reserve(syllables.size());
    for (const auto& s : syllables) out.push_back(s.gen);
    return out;
  }

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& s : nf.syllables) {
      h = (h ^ static_cast<std::size_t>(s.gen.id)) * 1099511628211ull;
      h = (h ^ static_cast<std::size_t>(s.exponent + 0x4000)) * 1099511628211ull;
    }
    return h;
  }
};

inline Word expand(const NormalForm& nf) {
  Word w;
  w.reserve(nf.length());
  for (const auto& s : nf.syllables) {
    int sign = s.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(s.exponent); ++k) w.push_back(Letter{s.gen, sign});
  }
  return w;
}

inline std::string to_string(const GroupSpec& spec, const NormalForm& nf) {
  if (nf.empty()) return "e";
  std::string out;
  for (const auto& s : nf.syllables) {
    if (!out.empty()) out += ' ';
    out += spec.name(s.gen);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

namespace detail {

// Moves the syllable at `from` to position `to` (to < from).
inline void move_left(std::vector<Syllable>& syl, std::size_t from, std::size_t to) {
  std::rotate(syl.begin() + static_cast<std::ptrdiff_t>(to),
              syl.begin() + static_cast<std::ptrdiff_t>(from),
              syl.begin() + static_cast<std::ptrdiff_t>(from) + 1);
}

}  // namespace detail

// Rewriting system on syllables, applied until no rule fires:
//   merge   s_i ... s_j with equal generators and every syllable strictly
//           between commuting with it: s_j joins s_i (dropped if exponent 0);
//   order   s_i ... s_j with gen(s_i) < gen(s_j) and gen(s_j) commuting with
//           every syllable from s_i up to s_j: s_j moves in front of s_i.
// Both rules are compositions of commuting swaps and free cancellations.
// Merge shortens the syllable list; order makes the generator sequence
// lexicographically larger without changing its length, so the system
// terminates on the potential (syllable count, -lex rank).
inline NormalForm canonicalize_rewrite(const Group& group, const Word& w) {
  group.check(w);
  std::vector<Syllable> syl;
  syl.reserve(w.size());
  for (const auto& l : w) syl.push_back(Syllable{l.gen, l.sign});

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 1; j < syl.size(); ++j) {
      const Generator b = syl[j].gen;
      std::size_t target = j;
      bool merged = false;
      for (std::size_t i = j; i-- > 0;) {
        if (syl[i].gen == b) {
          syl[i].exponent += syl[j].exponent;
          syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(j));
          if (syl[i].exponent == 0) syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(i));
          merged = true;
          break;
        }
        if (!group.commute(syl[i].gen, b)) break;
        if (syl[i].gen < b) target = i;
      }
      if (merged) {
        changed = true;
        break;  // indices shifted; rescan
      }
      if (target < j) {
        detail::move_left(syl, j, target);
        changed = true;
      }
    }
  }
  return NormalForm{std::move(syl)};
}

// Heap of pieces. Every generator occupies its own column and one column
// per non-commuting partner (Group::columns), so two pieces overlap iff they
// cannot be swapped. An incoming letter merges into the last piece of its
// generator when that piece is still on top of all of its columns; otherwise
// it lands as a new piece on top of them. Cancelled pieces are dropped
// lazily. The normal form is read off the bottom of the heap, always taking
// the largest generator whose piece sits lowest in every column it covers.
inline NormalForm canonicalize_stack(const Group& group, const Word& w) {
  group.check(w);
  struct Piece {
    Generator gen;
    int exponent;
    bool alive;
  };
  std::vector<Piece> pieces;
  std::vector<std::vector<int>> stacks(static_cast<std::size_t>(group.num_columns()));
  auto top = [&](int c) -> int {
    auto& st = stacks[c];
    while (!st.empty() && !pieces[st.back()].alive) st.pop_back();
    return st.empty() ? -1 : st.back();
  };

  for (const auto& l : w) {
    const auto& cols = group.columns(l.gen);
    const int last = top(cols.front());
    bool exposed = last >= 0;
    for (std::size_t k = 1; exposed && k < cols.size(); ++k) exposed = top(cols[k]) == last;
    if (exposed) {
      Piece& p = pieces[last];
      p.exponent += l.sign;
      if (p.exponent == 0) p.alive = false;
      continue;
    }
    const int id = static_cast<int>(pieces.size());
    pieces.push_back(Piece{l.gen, l.sign, true});
    for (int c : cols) stacks[c].push_back(id);
  }

  // Read-off: `emitted` marks consumed pieces, `cursor` the bottom of each column.
  std::vector<char> emitted(pieces.size(), 0);
  std::vector<std::size_t> cursor(stacks.size(), 0);
  auto bottom = [&](int c) -> int {
    auto& st = stacks[c];
    auto& k = cursor[c];
    while (k < st.size() && (!pieces[st[k]].alive || emitted[st[k]])) ++k;
    return k < st.size() ? st[k] : -1;
  };

  NormalForm out;
  for (;;) {
    int best = -1;
    for (int g = group.rank() - 1; g >= 0 && best < 0; --g) {
      const int p = bottom(g);
      if (p < 0) continue;
      bool lowest = true;
      for (int c : group.columns(Generator{g})) {
        if (bottom(c) != p) {
          lowest = false;
          break;
        }
      }
      if (lowest) best = p;
    }
    if (best < 0) break;
    emitted[best] = 1;
    out.syllables.push_back(Syllable{pieces[best].gen, pieces[best].exponent});
  }
  return out;
}

inline NormalForm canonicalize_rewrite(const GroupSpec& spec, const Word& w) {
  return canonicalize_rewrite(Group(spec), w);
}

inline NormalForm canonicalize_stack(const GroupSpec& spec, const Word& w) {
  return canonicalize_stack(Group(spec), w);
}

inline NormalForm canonicalize(const Group& group, const Word& w) {
  return canonicalize_stack(group, w);
}

inline bool words_equal(const Group& group, const Word& a, const Word& b) {
  return canonicalize(group, a) == canonicalize(group, b);
}

inline bool words_equal(const GroupSpec& spec, const Word& a, const Word& b) {
  return words_equal(Group(spec), a, b);
}

inline int irreducible_length(const Group& group, const Word& w) {
  return canonicalize(group, w).length();
}

inline int irreducible_length(const GroupSpec& spec, const Word& w) {
  return irreducible_length(Group(spec), w);
}

}  // namespace locfree

#endif  // LOCFREE_CANONICAL_HPP
