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

// Run configuration for the command-line tool.
//
// Precedence is command-line flag > config file > default. A config file is
// flat text, one `key = value` per line; blank lines and lines starting with
// '#' are ignored. Keys are the long flag names without dashes:
//
//   flavor = lf1          n = 3            n-range = 2:4
//   mu = 5                mu-range = 1:7   m-max = 200
//   include-m0 = true     tol = 1e-10      cap = 10000000
//   format = csv          out = result.csv seed = 20260101
//   dedup = both          quick = false    golden-dir = tests/golden
//
// Unknown keys are rejected.

#ifndef LOCFREE_CONFIG_HPP
#define LOCFREE_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "locfree/explorer.hpp"
#include "locfree/group.hpp"
#include "locfree/table.hpp"

namespace locfree {

// Bad flags, values or config files. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;

  std::vector<int> values() const {
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k) v.push_back(k);
    return v;
  }
};

inline Range parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("range '" + s + "' is not of the form a:b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
    Range r{std::stoi(a, &used_a), std::stoi(b, &used_b)};
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(s);
    if (r.lo > r.hi) throw UsageError("range '" + s + "' is empty");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("range '" + s + "' is not of the form a:b");
  }
}

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct RunConfig {
  std::string command;
  Flavor flavor = Flavor::LF1;
  int n = 3;
  std::optional<Range> n_range;
  int mu = 4;
  std::optional<Range> mu_range;
  int m_max = 200;
  bool include_m0 = true;
  double tol = 1e-10;
  std::size_t cap = default_cap();
  Format format = Format::Csv;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  Dedup dedup = Dedup::Both;
  bool quick = false;
  std::string golden_dir;

  std::vector<int> ns() const { return n_range ? n_range->values() : std::vector<int>{n}; }
  std::vector<int> mus() const { return mu_range ? mu_range->values() : std::vector<int>{mu}; }
  int mu_hi() const { return mu_range ? mu_range->hi : mu; }

  void validate() const {
    for (int v : ns())
      if (v < 1) throw UsageError("n must be positive");
    for (int v : mus())
      if (v < 0) throw UsageError("mu must be non-negative");
    if (m_max < 0) throw UsageError("m-max must be non-negative");
    if (!(tol > 0.0)) throw UsageError("tol must be positive");
    if (cap == 0) throw UsageError("cap must be positive");
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError("key '" + key + "' expects a boolean, got '" + v + "'");
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  std::istringstream is(v);
  T out{};
  if (!(is >> out) || !is.eof()) throw UsageError("key '" + key + "' has a bad value '" + v + "'");
  return out;
}

}  // namespace detail

// Applies one setting by long-flag name.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "flavor") cfg.flavor = parse_flavor(value);
    else if (key == "n") cfg.n = detail::parse_number<int>(key, value);
    else if (key == "n-range") cfg.n_range = parse_range(value);
    else if (key == "mu") cfg.mu = detail::parse_number<int>(key, value);
    else if (key == "mu-range") cfg.mu_range = parse_range(value);
    else if (key == "m-max") cfg.m_max = detail::parse_number<int>(key, value);
    else if (key == "include-m0") cfg.include_m0 = detail::parse_bool(key, value);
    else if (key == "tol") cfg.tol = detail::parse_number<double>(key, value);
    else if (key == "cap") cfg.cap = detail::parse_number<std::size_t>(key, value);
    else if (key == "format") cfg.format = parse_format(value);
    else if (key == "out") cfg.out = value;
    else if (key == "seed") cfg.seed = detail::parse_number<std::uint64_t>(key, value);
    else if (key == "dedup") cfg.dedup = parse_dedup(value);
    else if (key == "quick") cfg.quick = detail::parse_bool(key, value);
    else if (key == "golden-dir") cfg.golden_dir = value;
    else throw UsageError("unknown config key '" + key + "'");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + " has no '='");
    out.emplace_back(detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)));
  }
  return out;
}

inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  for (const auto& [k, v] : parse_config_text(ss.str())) apply_setting(cfg, k, v);
}

}  // namespace locfree

#endif  // LOCFREE_CONFIG_HPP
