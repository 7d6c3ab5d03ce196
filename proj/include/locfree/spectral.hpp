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

// Growth rates as spectra: the transfer operators behind the sequence
// counts, power iteration, the periodic-boundary closed form in 1D and the
// root analysis of the 2D characteristic polynomial.

#ifndef LOCFREE_SPECTRAL_HPP
#define LOCFREE_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locfree/group.hpp"

namespace locfree {

// The linear map advancing per-final-generator counts by one letter. It is
// the nonnegative matrix of the counting recursion: 1D on x in [1, n], 2D on
// (axis, z) stored at 2(z-1) + axis, free flavors on every base generator.
class TransferOperator {
 public:
  TransferOperator(Flavor flavor, int n) : flavor_(flavor), n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
  }

  Flavor flavor() const { return flavor_; }
  int n() const { return n_; }

  std::size_t dimension() const {
    return static_cast<std::size_t>(is_2d(flavor_) ? 2 * n_ * n_ : n_);
  }

  void apply(std::span<const double> in, std::span<double> out) const {
    if (in.size() != dimension() || out.size() != dimension())
      throw std::invalid_argument("vector size does not match the operator");
    switch (flavor_) {
      case Flavor::LF1: apply_1d(in, out); break;
      case Flavor::LF2: apply_2d(in, out); break;
      default: apply_free(in, out); break;
    }
  }

 private:
  // (Tv)(x) = v(x-1) + sum_{y > x} v(y)
  void apply_1d(std::span<const double> in, std::span<double> out) const {
    double suffix = 0.0;
    for (int x = n_ - 1; x >= 0; --x) {
      out[x] = suffix + (x > 0 ? in[x - 1] : 0.0);
      suffix += in[x];
    }
  }

  void apply_2d(std::span<const double> in, std::span<double> out) const {
    const int top = n_ * n_;
    auto a = [&](int z) { return z >= 1 && z <= top ? in[2 * (z - 1)] : 0.0; };
    auto b = [&](int z) { return z >= 1 && z <= top ? in[2 * (z - 1) + 1] : 0.0; };
    double suffix = 0.0;
    for (int z = top; z >= 1; --z) {
      out[2 * (z - 1)] = a(z - 1) + b(z - n_) + b(z - n_ + 1) + b(z) + suffix;
      out[2 * (z - 1) + 1] = b(z - n_) + a(z - 1) + a(z) + suffix;
      suffix += a(z) + b(z);
    }
  }

  void apply_free(std::span<const double> in, std::span<double> out) const {
    double total = 0.0;
    for (double v : in) total += v;
    for (std::size_t g = 0; g < in.size(); ++g) out[g] = total - in[g];
  }

  Flavor flavor_;
  int n_;
};

struct SpectralReport {
  double lambda = 0.0;
  int iterations = 0;
  // ||T v - lambda v||_inf / ||v||_inf at return.
  double residual = 0.0;
  bool converged = false;
  std::vector<double> eigenvector;  // scaled to max entry 1
};

// Power iteration from the all-ones vector, lambda estimated as
// sum(T v) / sum(v).
inline SpectralReport dominant_eigenvalue(const TransferOperator& op, double tol,
                                          int max_iter = 5'000'000) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t dim = op.dimension();
  std::vector<double> v(dim, 1.0), w(dim, 0.0);
  SpectralReport r;
  for (int it = 1; it <= max_iter; ++it) {
    op.apply(v, w);
    double sv = 0.0, sw = 0.0, vmax = 0.0, wmax = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      sv += v[i];
      sw += w[i];
      vmax = std::max(vmax, std::abs(v[i]));
      wmax = std::max(wmax, std::abs(w[i]));
    }
    if (wmax == 0.0) throw std::runtime_error("transfer operator annihilated the iterate");
    const double lambda = sw / sv;
    double res = 0.0;
    for (std::size_t i = 0; i < dim; ++i) res = std::max(res, std::abs(w[i] - lambda * v[i]));
    res /= vmax;
    for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / wmax;
    r.lambda = lambda;
    r.iterations = it;
    r.residual = res;
    if (res < tol) {
      r.converged = true;
      break;
    }
  }
  r.eigenvector = std::move(v);
  return r;
}

// lambda_k = 4 cos^2(pi k / (n+1)) - 1 and
// alpha_k(x) = sin(pi k x / (n+1)) / (2 cos(pi k / (n+1)))^x
// of the periodic-boundary 1D problem.
struct ClosedForm1D {
  int n = 0;
  int k = 0;
  double lambda = 0.0;
  // 2 cos(pi k / (n+1)) vanishes: alpha_k is undefined and lambda is -1.
  bool singular = false;

  double alpha(int x) const {
    if (singular) throw std::domain_error("eigenvector undefined where 2cos vanishes");
    const double theta = std::numbers::pi * k / (n + 1);
    return std::sin(theta * x) / std::pow(2.0 * std::cos(theta), x);
  }
};

inline ClosedForm1D eigen_closed_form_1d(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("need 1 <= k <= n");
  ClosedForm1D c{n, k, 0.0, false};
  if (2 * k == n + 1) {
    c.singular = true;
    c.lambda = -1.0;
    return c;
  }
  const double cs = std::cos(std::numbers::pi * k / (n + 1));
  c.lambda = 4.0 * cs * cs - 1.0;
  return c;
}

namespace detail {

// p^e for p in (0, 1] via exp(e log p); log1p keeps p close to 1 accurate.
inline double power_of(double p, double e) {
  if (p <= 0.0) throw std::domain_error("power of a non-positive base");
  const double lp = p > 0.5 ? std::log1p(p - 1.0) : std::log(p);
  return std::exp(e * lp);
}

}  // namespace detail

// Left-hand side of the full root equation for p_k.
inline double p_polynomial_residual(int n, int k, double p) {
  const double d = static_cast<double>(n) * n + 1.0;
  const double pi = std::numbers::pi;
  const double s1 = std::sin(pi * k / d);
  const double s2 = std::sin(2.0 * pi * k / d);
  const double sn = std::sin(pi * k * n / d);
  const double c1 = std::cos(pi * k / d);
  return s1 * detail::power_of(p, n + 1) + s2 * detail::power_of(p, n) -
         s1 * detail::power_of(p, n - 1) - sn * p * p + 2.0 * c1 * sn * p - sn;
}

// lambda_k from a root p_k of the full equation.
inline double lambda_from_root(int n, int k, double p) {
  const double d = static_cast<double>(n) * n + 1.0;
  const double pi = std::numbers::pi;
  const double s1 = std::sin(pi * k / d);
  return 1.0 / (p * p) - 1.0 -
         detail::power_of(p, -n) * std::sin(pi * k * (n - 1) / d) / s1 +
         detail::power_of(p, -n - 1.0) * std::sin(pi * k * n / d) / s1;
}

// p^{n+1} + 2 p^n - p^{n-1} - n (p - 1)^2, the k = 1, large-n reduction.
inline double p1_polynomial(int n, double p) {
  const double q = p - 1.0;
  return detail::power_of(p, n - 1) * (p * p + 2.0 * p - 1.0) - n * q * q;
}

inline double p1_polynomial_derivative(int n, double p) {
  return (n + 1.0) * detail::power_of(p, n) + 2.0 * n * detail::power_of(p, n - 1) -
         (n - 1.0) * detail::power_of(p, n - 2) - 2.0 * n * (p - 1.0);
}

struct P1Root {
  int n = 0;
  double p = 0.0;
  double residual = 0.0;  // |p1_polynomial(n, p)|
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

inline constexpr int kP1GridPoints = 1000;

// Smallest root of p1_polynomial in (0, 1]. The grid k / 1000, k = 1..1000,
// includes p = 1 where the polynomial equals 2; the first sign change is
// bisected and then polished by Newton steps kept inside the bracket.
inline P1Root solve_p1(int n, double tol = 1e-12) {
  if (n < 3) throw std::domain_error("solve_p1 needs n >= 3");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  double lo = 0.0, hi = 0.0;
  double f_lo = -static_cast<double>(n);  // value at p -> 0+
  bool found = false;
  for (int k = 1; k <= kP1GridPoints; ++k) {
    const double p = static_cast<double>(k) / kP1GridPoints;
    const double f = p1_polynomial(n, p);
    if ((f_lo < 0.0) != (f < 0.0) || f == 0.0) {
      hi = p;
      found = true;
      break;
    }
    lo = p;
    f_lo = f;
  }
  if (!found) throw std::runtime_error("no sign change of the p1 polynomial on the grid");

  P1Root r{n, 0.0, 0.0, lo, hi};
  double a = lo, b = hi;
  for (int it = 0; it < 200 && b - a > 0.0; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double f = p1_polynomial(n, mid);
    if (f == 0.0) {
      a = b = mid;
      break;
    }
    if ((f < 0.0) == (f_lo < 0.0)) a = mid; else b = mid;
  }
  double p = 0.5 * (a + b);
  for (int it = 0; it < 5; ++it) {
    const double df = p1_polynomial_derivative(n, p);
    if (df == 0.0) break;
    const double step = p - p1_polynomial(n, p) / df;
    if (step < a || step > b) break;
    p = step;
  }
  r.p = p;
  r.residual = std::abs(p1_polynomial(n, p));
  if (r.residual > tol)
    throw std::runtime_error("p1 root not resolved to tolerance (residual " +
                             std::to_string(r.residual) + ")");
  return r;
}

struct Lambda1 {
  int n = 0;
  double p1 = 0.0;
  double lambda1 = 0.0;
  double scaled = 0.0;  // lambda1 ln n / n
  double residual = 0.0;
};

// lambda_1 = p^-2 - 1 + n p^{-n-1} - (n-1) p^{-n} at p = solve_p1(n).
inline Lambda1 lambda1_2d(int n, double tol = 1e-12) {
  const P1Root root = solve_p1(n, tol);
  const double p = root.p;
  const double inv_pn = detail::power_of(p, -static_cast<double>(n));
  // n/p - (n-1) = (n (1-p) + p) / p
  const double tail = inv_pn * ((n * (1.0 - p) + p) / p);
  Lambda1 l{n, p, 1.0 / (p * p) - 1.0 + tail, 0.0, root.residual};
  l.scaled = l.lambda1 * std::log(static_cast<double>(n)) / n;
  return l;
}

// Dominant eigenvalue of the exact 2n^2-dimensional operator.
inline SpectralReport transfer_2d_growth(int n, double tol, int max_iter = 5'000'000) {
  return dominant_eigenvalue(TransferOperator(Flavor::LF2, n), tol, max_iter);
}

}  // namespace locfree

#endif  // LOCFREE_SPECTRAL_HPP
