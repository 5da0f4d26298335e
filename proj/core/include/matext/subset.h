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

#ifndef MATEXT_SUBSET_H_
#define MATEXT_SUBSET_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matext {

// A subset of a ground set {0, ..., n-1} with n <= kMaxPoints.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 16;

inline constexpr Mask Bit(int i) { return Mask{1} << i; }
inline constexpr Mask FullMask(int n) { return n >= 32 ? ~Mask{0} : Bit(n) - 1; }
inline constexpr int Size(Mask a) { return std::popcount(a); }
inline constexpr bool IsSubset(Mask a, Mask b) { return (a & ~b) == 0; }
inline constexpr bool Contains(Mask a, int i) { return (a >> i) & 1u; }

// Lowest set position; undefined for the empty set.
inline int LowestPoint(Mask a) { return std::countr_zero(a); }

std::vector<int> Points(Mask a);
Mask FromPoints(const std::vector<int>& points);

// "{0,1,2}" style rendering and its inverse. Parsing also accepts
// whitespace or comma separated indices without braces.
std::string ToString(Mask a);
Mask ParseMask(const std::string& text);

// Calls fn(s) for every subset s of a, including the empty set and a itself,
// in decreasing numeric order.
template <typename Fn>
void ForEachSubset(Mask a, Fn&& fn) {
  Mask s = a;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & a;
  }
}

}  // namespace matext

#endif  // MATEXT_SUBSET_H_
