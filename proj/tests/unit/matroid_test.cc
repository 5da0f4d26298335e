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

#include <sstream>

#include "matext/catalog.h"
#include "matext/matroid.h"
#include "matext/subset.h"

namespace matext {
namespace {

TEST(Subset, ParseAndFormat) {
  EXPECT_EQ(ParseMask("{0,2,5}"), Bit(0) | Bit(2) | Bit(5));
  EXPECT_EQ(ParseMask("0 2 5"), ParseMask("{0,2,5}"));
  EXPECT_EQ(ToString(Bit(1) | Bit(3)), "{1,3}");
  EXPECT_EQ(FromPoints(Points(0b101101)), 0b101101u);
}

TEST(Subset, ForEachSubsetVisitsAll) {
  int count = 0;
  ForEachSubset(0b10110, [&](Mask s) {
    EXPECT_TRUE(IsSubset(s, 0b10110));
    ++count;
  });
  EXPECT_EQ(count, 8);
}

TEST(Matroid, UniformRanks) {
  const Matroid u = Uniform(2, 4);
  EXPECT_EQ(u.rank(), 2);
  EXPECT_EQ(u.rank(Bit(0)), 1);
  EXPECT_EQ(u.rank(0b0111), 2);
  EXPECT_TRUE(VerifyMatroidAxioms(u).ok);
  EXPECT_EQ(u.flats(1).size(), 4u);
}

TEST(Matroid, BuiltinsSatisfyAxioms) {
  const Catalog c = Catalog::WithBuiltins();
  for (const std::string& name : c.Names()) {
    EXPECT_TRUE(VerifyMatroidAxioms(c.Get(name)).ok) << name;
  }
}

TEST(Matroid, DualIsInvolution) {
  const Matroid v = Vamos();
  EXPECT_EQ(Dual(Dual(v)), v);
  EXPECT_EQ(Dual(v).rank(), v.size() - v.rank());
}

TEST(Matroid, TicTacToeRelations) {
  const Matroid isd = SelfDual510();
  EXPECT_TRUE(isd.is_sparse_paving());
  EXPECT_EQ(Dual(isd), isd);
  EXPECT_EQ(Delete(isd, Bit(9)).matroid, TicTacToe());
  EXPECT_EQ(Contract(isd, Bit(9)).matroid, TicTacToeDual());
  EXPECT_EQ(TicTacToe().circuit_hyperplanes().size(), 8u);
}

TEST(Matroid, ClosureAndFlats) {
  const Matroid v = Vamos();
  EXPECT_EQ(v.closure(Bit(0) | Bit(1) | Bit(2)), 0b1111u);
  for (Mask f : v.flats()) EXPECT_EQ(v.closure(f), f);
  EXPECT_EQ(v.flat_index(0b0111), -1);
}

TEST(Matroid, ModularPairs) {
  const Matroid v = Vamos();
  // Two circuit-hyperplanes meeting in a pair form a nonmodular pair only
  // when their union has smaller rank than the sum predicts.
  EXPECT_TRUE(IsModularPair(v, 0b00001111, 0b00110011));
  EXPECT_FALSE(IsModularPair(v, 0b00000011, 0b00001100));
  EXPECT_EQ(MutualRank(v, 0b00000011, 0b00001100), 1);
}

TEST(Catalog, FormatParseRoundTrip) {
  const Catalog c = Catalog::WithBuiltins();
  std::string text;
  for (const std::string& n : c.Names()) text += FormatCatalogEntry(n, c.Get(n), "note");
  std::istringstream in(text);
  const auto entries = ParseCatalog(in);
  ASSERT_EQ(entries.size(), c.Names().size());
  for (const auto& e : entries) {
    EXPECT_EQ(e.matroid, c.Get(e.name));
    EXPECT_EQ(e.comment, "note");
  }
}

TEST(Catalog, LookupIgnoresCase) {
  const Catalog c = Catalog::WithBuiltins();
  EXPECT_EQ(c.Get("vamos"), Vamos());
  EXPECT_EQ(c.Get("u3_5"), Uniform(3, 5));
  EXPECT_THROW(c.Get("nope"), std::invalid_argument);
}

TEST(Catalog, RandomSparsePavingIsDeterministic) {
  const Matroid a = RandomSparsePaving(8, 4, 7);
  const Matroid b = RandomSparsePaving(8, 4, 7);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.is_sparse_paving());
  EXPECT_TRUE(VerifyMatroidAxioms(a).ok);
  EXPECT_LE(RandomSparsePaving(8, 4, 7, 3).circuit_hyperplanes().size(), 3u);
}

TEST(Catalog, MalformedInputThrows) {
  std::istringstream bad("matroid x n=3 r=2 form=bases\n0 5\n");
  EXPECT_THROW(ParseCatalog(bad), std::invalid_argument);
}

}  // namespace
}  // namespace matext
