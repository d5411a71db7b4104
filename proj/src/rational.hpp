// This file is part of relsc, a small-cancellation verification workbench.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELSC_RATIONAL_HPP
#define RELSC_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace relsc {

// Exact arithmetic for the small-cancellation parameters (mu, lambda, c)
// and for quasi-geodesic margins. int64 components are ample at desk scale.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p", "p/q", or a decimal like "0.55" (converted exactly).
Rational parse_rational(const std::string& text);

// floor(r) as an integer.
std::int64_t floor_rational(const Rational& r);

// Least integer >= r.
std::int64_t ceil_rational(const Rational& r);

}  // namespace relsc

#endif  // RELSC_RATIONAL_HPP
