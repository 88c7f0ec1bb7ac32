// Copyright 2026 The wks Authors
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

#ifndef WKS_RATIONAL_HPP_
#define WKS_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wks {

using Rational = mpq_class;

// Accepts "p", "p/q" and finite decimals ("0.25", "-1.5e-3"). Decimals are
// read as the exact value of the nearest double, so values written by
// `to_decimal_string` round-trip bit-for-bit.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_rational_string(const Rational& value);

// Shortest decimal that round-trips through double.
std::string to_decimal_string(const Rational& value);

// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double value);

// Smallest-denominator rational within `tolerance` of `value` whose
// denominator is at most `max_denominator`; falls back to the exact double.
Rational snap_double(double value, long max_denominator, double tolerance);

inline double to_double(const Rational& value) { return value.get_d(); }

Rational floor_rational(const Rational& value);
Rational ceil_rational(const Rational& value);

}  // namespace wks

#endif  // WKS_RATIONAL_HPP_
