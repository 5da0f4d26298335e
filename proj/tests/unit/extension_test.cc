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


#include <gtest/gtest.h>

#include <set>

#include "matext/catalog.h"
#include "matext/extension.h"

namespace matext {
namespace {

// Every family of flats that passes IsModularCut, by brute force.
std::set<std::vector<Mask>> AllCuts(const Matroid& m) {
  const auto& flats = m.flats();
  std::set<std::vector<Mask>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << flats.size()); ++pick) {
    std::vector<Mask> family;
    for (std::size_t i = 0; i < flats.size(); ++i) {
      if ((pick >> i) & 1) family.push_back(flats[i]);
    }
    if (IsModularCut(m, family)) out.insert(family);
  }
  return out;
}

std::set<std::vector<Mask>> Enumerated(CutEnumerator& e) {
  std::set<std::vector<Mask>> out;
  while (auto c = e.Next()) out.insert(c->flats());
  return out;
}

TEST(Extension, GeneratedCutIsModular) {
  const Matroid v = Vamos();
  const ModularCut c = GenerateCut(v, {0b00000011, 0b00001100});
  EXPECT_TRUE(IsModularCut(v, c.flats()));
  EXPECT_TRUE(c.contains(0b00001111));
  for (Mask g : c.minimal()) EXPECT_TRUE(c.contains(g));
}

TEST(Extension, ExtendByPointRestrictsToBase) {
  const Matroid v = Vamos();
  const ModularCut c = GenerateCut(v, {0b00110011});
  const PointExtension e = ExtendByPoint(v, c);
  EXPECT_EQ(e.result.size(), 9);
  EXPECT_TRUE(VerifyMatroidAxioms(e.result).ok);
  EXPECT_EQ(Delete(e.result, Bit(8)).matroid, v);
  EXPECT_EQ(e.result.rank(0b00110011 | Bit(8)), 3);
  EXPECT_EQ(e.result.rank(0b00001111 | Bit(8)), 4);
}

TEST(Extension, LoopCutRejected) {
  const Matroid u = Uniform(2, 3);
  const ModularCut all(u, u.flats());
  EXPECT_TRUE(all.is_loop_cut());
  EXPECT_THROW(ExtendByPoint(u, all), std::invalid_argument);
}

TEST(Extension, EnumeratorMatchesBruteForce) {
  for (const Matroid& m : {Uniform(2, 3), Uniform(2, 4), Uniform(3, 4),
                           RandomSparsePaving(5, 3, 1)}) {
    std::set<std::vector<Mask>> expect;
    for (const auto& f : AllCuts(m)) {
      if (!ModularCut(m, f).is_loop_cut()) expect.insert(f);
    }
    CutEnumerator e(m, {}, 1 << 30, true);
    EXPECT_EQ(Enumerated(e), expect);
    EXPECT_FALSE(e.truncated());
  }
}

TEST(Extension, AllFlatsScopeIsComplete) {
  const Matroid m = RandomSparsePaving(6, 3, 4);
  CutEnumerator all(m, {}, 1 << 30);
  const auto every = Enumerated(all);
  for (Mask f : m.flats(1)) {
    std::set<std::vector<Mask>> expect;
    for (const auto& c : every) {
      if (ModularCut(m, c).contains(f)) expect.insert(c);
    }
    CutEnumerator through(m, {f}, 1 << 30, false, CutScope::kAllFlats);
    EXPECT_EQ(Enumerated(through), expect) << ToString(f);
  }
}

TEST(Extension, BudgetTruncates) {
  CutEnumerator e(Vamos(), {}, 3);
  EXPECT_TRUE(e.truncated());
}

TEST(Extension, ChainExtendAddsPoints) {
  const Matroid v = Vamos();
  const Matroid two = ChainExtend(v, {{0b00000011}, {0b00000011 | Bit(8)}});
  EXPECT_EQ(two.size(), 10);
  EXPECT_TRUE(VerifyMatroidAxioms(two).ok);
}

}  // namespace
}  // namespace matext
