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

#include "rational.hpp"

#include <cctype>
#include <cstdlib>

namespace relsc {

namespace {

std::int64_t parse_int(const std::string& s) {
  if (s.empty()) fail(ErrorCode::SyntaxError, "empty integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::SyntaxError, "bad integer '" + s + "'");
  }
  if (pos != s.size()) fail(ErrorCode::SyntaxError, "bad integer '" + s + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::SyntaxError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.empty() || tail.size() > 15)
      fail(ErrorCode::SyntaxError, "bad decimal '" + text + "'");
    for (char ch : tail)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail(ErrorCode::SyntaxError, "bad decimal '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    std::int64_t whole = head.empty() || head == "-" ? 0 : parse_int(head);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    std::int64_t frac = parse_int(tail);
    Rational r(std::llabs(whole), 1);
    r += Rational(frac, den);
    return negative ? -r : r;
  }
  return Rational(parse_int(text), 1);
}

std::int64_t floor_rational(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_rational(const Rational& r) {
  return -floor_rational(-r);
}

}  // namespace relsc
