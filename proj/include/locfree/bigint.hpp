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

#ifndef LOCFREE_BIGINT_HPP
#define LOCFREE_BIGINT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace locfree {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Natural logarithm of a positive integer, exact to double rounding.
inline double log_of(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log of a non-positive integer");
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 1000;
  BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

// a / b as a double, for operands of any size with comparable magnitude.
inline double ratio_of(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("ratio with zero denominator");
  if (a == 0) return 0.0;
  const unsigned bits = std::max(boost::multiprecision::msb(a), boost::multiprecision::msb(b)) + 1;
  if (bits <= 1000) return a.convert_to<double>() / b.convert_to<double>();
  const unsigned shift = bits - 1000;
  BigInt sa = a >> shift;
  BigInt sb = b >> shift;
  if (sb == 0) return std::exp(log_of(a) - log_of(b));
  return sa.convert_to<double>() / sb.convert_to<double>();
}

}  // namespace locfree

#endif  // LOCFREE_BIGINT_HPP
