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

// Closed-form large-n, large-mu growth laws, evaluated in log scale, and the
// tables that set them against exact counts.

#ifndef LOCFREE_ASYMPTOTICS_HPP
#define LOCFREE_ASYMPTOTICS_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "locfree/bigint.hpp"
#include "locfree/counting.hpp"
#include "locfree/group.hpp"

namespace locfree {

struct AsymptoticValue {
  std::string formula;
  int n = 0;
  int arg = 0;  // m or mu
  double log_value = 0.0;
  std::string note;

  // exp(log_value), or +inf when it does not fit in a double.
  double value() const {
    return log_value < std::log(std::numeric_limits<double>::max())
               ? std::exp(log_value)
               : std::numeric_limits<double>::infinity();
  }
};

namespace detail {

// ln(16 pi^2 / ln^4 2)
inline double log_prefactor_1d() {
  const double l2 = std::numbers::ln2;
  return std::log(16.0 * std::numbers::pi * std::numbers::pi / (l2 * l2 * l2 * l2));
}

inline void require_n(int n, int least) {
  if (n < least) throw std::domain_error("n too small for the asymptotic formula");
}

}  // namespace detail

// theta_n(m) ~ (16 pi^2 / ln^4 2) 2^n / n^3 3^m
inline AsymptoticValue theta_asymptotic_1d(int n, int m) {
  detail::require_n(n, 1);
  const double log_n = std::log(static_cast<double>(n));
  return {"theta1d", n, m,
          detail::log_prefactor_1d() + n * std::numbers::ln2 - 3.0 * log_n + m * std::log(3.0),
          "n >> 1, m >> 1; prefactor regime-limited"};
}

// V1(n, mu) ~ (32 pi^2 / ln^4 2) 2^n / n^3 7^{mu-1}
inline AsymptoticValue v1_asymptotic(int n, int mu) {
  detail::require_n(n, 1);
  const double log_n = std::log(static_cast<double>(n));
  return {"v1", n, mu,
          std::log(2.0) + detail::log_prefactor_1d() + n * std::numbers::ln2 - 3.0 * log_n +
              (mu - 1) * std::log(7.0),
          "n >> 1, mu >> 1; prefactor regime-limited"};
}

// V2(n, mu) ~ (32 n^2 / pi^2) (2n / ln n)^{mu-1}
inline AsymptoticValue v2_asymptotic(int n, int mu) {
  detail::require_n(n, 2);
  const double nn = n;
  return {"v2", n, mu,
          std::log(32.0 * nn * nn / (std::numbers::pi * std::numbers::pi)) +
              (mu - 1) * std::log(2.0 * nn / std::log(nn)),
          "n >> 1, mu >> 1"};
}

// b(z, m) ~ (4 / pi) sin(pi z / (n^2 + 1)) (n / ln n)^m
inline double b_profile_2d(int n, int z, int m) {
  detail::require_n(n, 2);
  const double nn = n;
  return 4.0 / std::numbers::pi * std::sin(std::numbers::pi * z / (nn * nn + 1.0)) *
         std::pow(nn / std::log(nn), m);
}

// Pearson correlation between b(z, m) / max_z b of the exact recursion and
// the sine profile sin(pi z / (n^2 + 1)), z = 1..n^2.
inline double b_shape_correlation(int n, int m) {
  detail::require_n(n, 2);
  const CountTable t = theta_2d(n, m);
  const int top = n * n;
  std::vector<double> exact, model;
  BigInt peak = 0;
  for (int z = 1; z <= top; ++z) peak = std::max(peak, t.final_state[2 * (z - 1) + 1]);
  for (int z = 1; z <= top; ++z) {
    exact.push_back(ratio_of(t.final_state[2 * (z - 1) + 1], peak));
    model.push_back(std::sin(std::numbers::pi * z / (top + 1.0)));
  }
  const double k = static_cast<double>(top);
  double mx = 0, my = 0;
  for (int i = 0; i < top; ++i) {
    mx += exact[i];
    my += model[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < top; ++i) {
    sxy += (exact[i] - mx) * (model[i] - my);
    sxx += (exact[i] - mx) * (exact[i] - mx);
    syy += (model[i] - my) * (model[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

struct GrowthExponents {
  double f1 = 0.0;  // ln 7
  double f2 = 0.0;  // 2n / ln n
};

inline GrowthExponents growth_exponents(int n) {
  detail::require_n(n, 2);
  return {std::log(7.0), 2.0 * n / std::log(static_cast<double>(n))};
}

// Limiting sphere ratio plus one.
inline double z_eff_closed(Flavor flavor, int n) {
  switch (flavor) {
    case Flavor::LF1: return 8.0;
    case Flavor::LF2: return growth_exponents(n).f2 + 1.0;
    case Flavor::FREE1: return 2.0 * n;
    case Flavor::FREE2: return 4.0 * n * n;
  }
  return 0.0;
}

// One row of an exact-versus-asymptotic comparison. Growth-rate agreement is
// ratio_of_ratios -> 1; the prefactor (log_diff) is only reported.
struct ComparisonRow {
  int n = 0;
  int arg = 0;
  double log_exact = 0.0;
  double log_asymptotic = 0.0;
  double log_diff = 0.0;
  double exact_ratio = 0.0;       // exact(arg + 1) / exact(arg)
  double asymptotic_ratio = 0.0;  // formula(arg + 1) / formula(arg)
  double ratio_of_ratios = 0.0;
};

inline std::vector<ComparisonRow> compare_theta_1d(int n_lo, int n_hi, int m_lo, int m_hi) {
  std::vector<ComparisonRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto t = theta_1d(n, m_hi + 1);
    for (int m = m_lo; m <= m_hi; ++m) {
      ComparisonRow r;
      r.n = n;
      r.arg = m;
      r.log_exact = log_of(t.at(m));
      r.log_asymptotic = theta_asymptotic_1d(n, m).log_value;
      r.log_diff = r.log_exact - r.log_asymptotic;
      r.exact_ratio = ratio_of(t.at(m + 1), t.at(m));
      r.asymptotic_ratio =
          std::exp(theta_asymptotic_1d(n, m + 1).log_value - r.log_asymptotic);
      r.ratio_of_ratios = r.exact_ratio / r.asymptotic_ratio;
      rows.push_back(r);
    }
  }
  return rows;
}

// Exact assembled counts (include_m0) against V1 or V2.
inline std::vector<ComparisonRow> compare_word_counts(Flavor flavor, int n_lo, int n_hi,
                                                      int mu_lo, int mu_hi) {
  if (flavor != Flavor::LF1 && flavor != Flavor::LF2)
    throw std::invalid_argument("comparison needs lf1 or lf2");
  auto formula = [flavor](int n, int mu) {
    return flavor == Flavor::LF1 ? v1_asymptotic(n, mu) : v2_asymptotic(n, mu);
  };
  std::vector<ComparisonRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto t = theta(flavor, n, mu_hi);
    for (int mu = mu_lo; mu <= mu_hi; ++mu) {
      const BigInt exact = assemble_count(t, mu, true).value;
      const BigInt exact_next = assemble_count(t, mu + 1, true).value;
      ComparisonRow r;
      r.n = n;
      r.arg = mu;
      r.log_exact = log_of(exact);
      r.log_asymptotic = formula(n, mu).log_value;
      r.log_diff = r.log_exact - r.log_asymptotic;
      r.exact_ratio = ratio_of(exact_next, exact);
      r.asymptotic_ratio = std::exp(formula(n, mu + 1).log_value - r.log_asymptotic);
      r.ratio_of_ratios = r.exact_ratio / r.asymptotic_ratio;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace locfree

#endif  // LOCFREE_ASYMPTOTICS_HPP
