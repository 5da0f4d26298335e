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

#include "matext/subset.h"

#include <cctype>
#include <stdexcept>

namespace matext {

std::vector<int> Points(Mask a) {
  std::vector<int> out;
  while (a) {
    out.push_back(LowestPoint(a));
    a &= a - 1;
  }
  return out;
}

Mask FromPoints(const std::vector<int>& points) {
  Mask m = 0;
  for (int p : points) {
    if (p < 0 || p >= kMaxPoints) {
      throw std::invalid_argument("point index out of range: " +
                                  std::to_string(p));
    }
    m |= Bit(p);
  }
  return m;
}

std::string ToString(Mask a) {
  std::string s = "{";
  bool first = true;
  for (int p : Points(a)) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

Mask ParseMask(const std::string& text) {
  std::vector<int> pts;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isdigit(c)) {
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v >= kMaxPoints) {
          throw std::invalid_argument("point index out of range in '" + text + "'");
        }
        ++i;
      }
      pts.push_back(v);
    } else if (c == '{' || c == '}' || c == ',' || std::isspace(c)) {
      ++i;
    } else {
      throw std::invalid_argument("cannot parse subset '" + text + "'");
    }
  }
  return FromPoints(pts);
}

}  // namespace matext
