// Copyright 2026 The conicstab Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace conicstab {

// All arithmetic in this library is exact. No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const Integer& n) { return n.sign(); }

inline Rational rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(p, q);
}

// Accepts "p", "-p", "p/q" with nonzero q. Anything else is rejected.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + text + "' (expected p or p/q)");
  };
  std::size_t i = 0;
  std::size_t sign_begin = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '+') sign_begin = 1;  // cpp_int rejects a leading '+'
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail();
  Integer p(text.substr(sign_begin, i - sign_begin));
  Integer q(1);
  if (i < text.size()) {
    if (text[i] != '/') return fail();
    std::size_t den_begin = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return fail();
    q = Integer(text.substr(den_begin));
    if (q == 0) throw std::invalid_argument("malformed rational '" + text + "' (zero denominator)");
  }
  return Rational(p, q);
}

inline std::string format_rational(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline const Rational& min_rational(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max_rational(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace conicstab
