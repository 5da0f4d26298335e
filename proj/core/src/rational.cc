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

#include "matext/rational.h"

#include <cmath>
#include <stdexcept>

namespace matext {

std::string ToString(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t places = s.size() - dot - 1;
    Rational q;
    if (q.get_num().set_str(digits, 10) != 0) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    q.get_den() = den;
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

Rational Rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  const bool neg = x < 0;
  double v = std::fabs(x);
  // Convergents h/k.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(frac);
    if (a > 9.0e15) break;
    const mpz_class ai = static_cast<long>(a);
    mpz_class h2 = ai * h1 + h0;
    mpz_class k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const double rest = frac - a;
    if (rest < 1e-15) break;
    frac = 1.0 / rest;
  }
  if (k1 == 0) return Rational(0);
  Rational q(neg ? mpz_class(-h1) : h1, k1);
  q.canonicalize();
  return q;
}

double ToDouble(const Rational& q) { return q.get_d(); }

}  // namespace matext
