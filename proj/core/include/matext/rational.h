// Copyright 2026 The Authors.
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


#ifndef MATEXT_RATIONAL_H_
#define MATEXT_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace matext {

using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string ToString(const Rational& q);
// Accepts "p", "-p", "p/q" and plain decimals such as "1.25".
Rational ParseRational(std::string_view text);

// Closest fraction to x with denominator at most max_den, found by
// continued fractions.
Rational Rationalize(double x, std::int64_t max_den);

double ToDouble(const Rational& q);

}  // namespace matext

#endif  // MATEXT_RATIONAL_H_
