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

// Brute-force Cayley graph exploration: spheres of the word metric grown
// level by level, with vertices glued whenever canonical forms agree.

#ifndef LOCFREE_EXPLORER_HPP
#define LOCFREE_EXPLORER_HPP

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "locfree/bigint.hpp"
#include "locfree/canonical.hpp"
#include "locfree/group.hpp"

namespace locfree {

enum class Dedup { Rewrite, Stack, Both };

inline std::string_view to_string(Dedup d) {
  switch (d) {
    case Dedup::Rewrite: return "rewrite";
    case Dedup::Stack: return "stack";
    case Dedup::Both: return "both";
  }
  return "?";
}

inline Dedup parse_dedup(std::string_view s) {
  if (s == "rewrite") return Dedup::Rewrite;
  if (s == "stack") return Dedup::Stack;
  if (s == "both") return Dedup::Both;
  throw std::invalid_argument("unknown dedup algorithm '" + std::string(s) + "'");
}

inline constexpr std::size_t kDefaultCap = 10'000'000;

// Default cap on stored canonical forms; LOCFREE_CAP overrides it.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("LOCFREE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

struct SphereProfile {
  GroupSpec spec;
  // sizes[mu] = number of elements of irreducible length mu.
  std::vector<BigInt> sizes;
  bool truncated = false;
  std::size_t cap = kDefaultCap;
  std::size_t peak_stored = 0;
  // With Dedup::Both: canonicalizations checked and disagreements seen.
  std::uint64_t cross_checked = 0;
  std::uint64_t mismatches = 0;

  int mu_max() const { return static_cast<int>(sizes.size()) - 1; }
};

struct BfsOptions {
  Dedup dedup = Dedup::Stack;
  std::size_t cap = default_cap();
  // Receives every completed level (mu, sorted canonical forms).
  std::function<void(int, const std::vector<NormalForm>&)> on_level;
};

class CanonicalLengthError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline NormalForm canonical_for(const Group& group, const Word& w, Dedup dedup,
                                SphereProfile& profile) {
  switch (dedup) {
    case Dedup::Rewrite: return canonicalize_rewrite(group, w);
    case Dedup::Stack: return canonicalize_stack(group, w);
    case Dedup::Both: {
      NormalForm a = canonicalize_rewrite(group, w);
      NormalForm b = canonicalize_stack(group, w);
      ++profile.cross_checked;
      if (a != b) ++profile.mismatches;
      return b;
    }
  }
  return {};
}

}  // namespace detail

// Grows the spheres up to mu_max by right-multiplying every element of the
// current sphere by every letter. Each product has length mu - 1 (dropped)
// or mu + 1 (kept, deduplicated by canonical form); anything else means the
// canonicalizer is broken and raises CanonicalLengthError. Exceeding the cap
// returns the completed levels with `truncated` set.
inline SphereProfile bfs_spheres(const GroupSpec& spec, int mu_max, const BfsOptions& opt = {}) {
  if (mu_max < 0) throw std::invalid_argument("mu_max must be non-negative");
  Group group(spec);
  const auto alphabet = letters(spec);
  SphereProfile profile{spec, {BigInt(1)}, false, opt.cap, 1, 0, 0};

  std::vector<NormalForm> frontier{NormalForm{}};
  if (opt.on_level) opt.on_level(0, frontier);
  for (int mu = 0; mu < mu_max; ++mu) {
    std::unordered_set<NormalForm, NormalFormHash> next;
    for (const auto& nf : frontier) {
      Word w = expand(nf);
      w.push_back(Letter{});
      for (const auto& l : alphabet) {
        w.back() = l;
        NormalForm c = detail::canonical_for(group, w, opt.dedup, profile);
        const int len = c.length();
        if (len == mu - 1) continue;
        if (len != mu + 1)
          throw CanonicalLengthError("letter multiplication moved length " + std::to_string(mu) +
                                     " to " + std::to_string(len));
        next.insert(std::move(c));
        if (frontier.size() + next.size() > opt.cap) {
          profile.truncated = true;
          profile.peak_stored = std::max(profile.peak_stored, frontier.size() + next.size());
          return profile;
        }
      }
    }
    profile.peak_stored = std::max(profile.peak_stored, frontier.size() + next.size());
    frontier.assign(next.begin(), next.end());
    std::sort(frontier.begin(), frontier.end());
    profile.sizes.emplace_back(frontier.size());
    if (opt.on_level) opt.on_level(mu + 1, frontier);
  }
  return profile;
}

inline SphereProfile bfs_spheres(const GroupSpec& spec, int mu_max, Dedup dedup) {
  BfsOptions opt;
  opt.dedup = dedup;
  return bfs_spheres(spec, mu_max, opt);
}

// All canonical forms of irreducible length mu, sorted.
inline std::vector<NormalForm> enumerate_classes(const GroupSpec& spec, int mu,
                                                 std::size_t cap = default_cap()) {
  std::vector<NormalForm> out;
  BfsOptions opt;
  opt.cap = cap;
  opt.on_level = [&](int level, const std::vector<NormalForm>& forms) {
    if (level == mu) out = forms;
  };
  SphereProfile p = bfs_spheres(spec, mu, opt);
  if (p.truncated) throw std::length_error("enumeration exceeds the stored-form cap");
  return out;
}

struct BranchingReport {
  GroupSpec spec;
  struct Step {
    int mu = 0;
    BigInt numerator;    // sphere(mu + 1)
    BigInt denominator;  // sphere(mu)
    double z_eff = 0.0;  // numerator / denominator + 1
  };
  std::vector<Step> steps;
  double limit_estimate = 0.0;
};

// z_eff(mu) = sphere(mu+1) / sphere(mu) + 1 for mu >= 1.
inline BranchingReport empirical_z_eff(const SphereProfile& profile) {
  if (profile.mu_max() < 2)
    throw std::invalid_argument("z_eff needs sphere sizes up to mu = 2 at least");
  BranchingReport r{profile.spec, {}, 0.0};
  for (int mu = 1; mu < profile.mu_max(); ++mu) {
    const auto& a = profile.sizes[static_cast<std::size_t>(mu) + 1];
    const auto& b = profile.sizes[static_cast<std::size_t>(mu)];
    r.steps.push_back({mu, a, b, ratio_of(a, b) + 1.0});
  }
  r.limit_estimate = r.steps.back().z_eff;
  return r;
}

struct DualOracleReport {
  SphereProfile rewrite;
  SphereProfile stack;
  bool identical = false;
  double rewrite_seconds = 0.0;
  double stack_seconds = 0.0;
};

inline DualOracleReport dual_oracle_check(const GroupSpec& spec, int mu_max,
                                          std::size_t cap = default_cap()) {
  using Clock = std::chrono::steady_clock;
  auto run = [&](Dedup d, double& seconds) {
    BfsOptions opt;
    opt.dedup = d;
    opt.cap = cap;
    auto t0 = Clock::now();
    SphereProfile p = bfs_spheres(spec, mu_max, opt);
    seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return p;
  };
  DualOracleReport r{SphereProfile{spec, {}, false, cap, 0, 0, 0},
                     SphereProfile{spec, {}, false, cap, 0, 0, 0}, false, 0.0, 0.0};
  r.rewrite = run(Dedup::Rewrite, r.rewrite_seconds);
  r.stack = run(Dedup::Stack, r.stack_seconds);
  r.identical = r.rewrite.sizes == r.stack.sizes && r.rewrite.truncated == r.stack.truncated;
  return r;
}

}  // namespace locfree

#endif  // LOCFREE_EXPLORER_HPP
