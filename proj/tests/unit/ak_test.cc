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

#include "matext/ak.h"
#include "matext/catalog.h"
#include "matext/sequence_io.h"

namespace matext {
namespace {

AKSequence KnownDualRefutation() {
  return {{StepKind::kAk, 0b000011011, 0b011000000, "a"},
          {StepKind::kAk, 0b000110110, 0b110000000, "b"},
          {StepKind::kAk, 0b11000000111, 0b000101000, "c"}};
}

TEST(Ak, ValidateSequenceErrors) {
  const Matroid v = Vamos();
  EXPECT_THROW(ValidateSequence(v, {{StepKind::kAk, 0, 1, ""}}),
               std::invalid_argument);
  EXPECT_THROW(ValidateSequence(v, {{StepKind::kAk, Bit(8), 1, ""}}),
               std::invalid_argument);
  AKSequence seven(7, {StepKind::kAk, 1, 2, ""});
  EXPECT_THROW(ValidateSequence(v, seven), std::invalid_argument);
  EXPECT_NO_THROW(ValidateSequence(v, {{StepKind::kAk, 3, 12, ""},
                                       {StepKind::kAk, Bit(8) | 1, 2, ""}}));
}

TEST(Ak, RedefiningAPointThrows) {
  PolymatroidLP lp(4);
  lp.AddShannonBlock();
  AkConstraints(lp, 3, 0b011, 0b100, {0b011});
  EXPECT_THROW(AkConstraints(lp, 3, 0b001, 0b100, {0b001}), std::logic_error);
  EXPECT_THROW(CiConstraints(lp, 3, 0b001, 0b100), std::logic_error);
}

TEST(Ak, AutomorphismGroupOfDualTicTacToe) {
  const auto g = Automorphisms(TicTacToeDual());
  EXPECT_EQ(g.size(), 8u);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(g[0][i], i);
}

TEST(Ak, KnownDualSequenceIsInfeasible) {
  const Matroid m = TicTacToeDual();
  const SequenceReport r = CheckSequence(m, KnownDualRefutation());
  ASSERT_EQ(r.outcome.status, LPStatus::kInfeasible);
  std::string why;
  EXPECT_TRUE(CheckCertificate(BuildSequenceLP(m, KnownDualRefutation()),
                               r.outcome, &why))
      << why;
  EXPECT_EQ(r.rows_per_step.size(), 3u);
}

TEST(Ak, ClosureRowsDoNotChangeStatus) {
  const Matroid m = TicTacToeDual();
  SequenceLPOptions plain;
  plain.closure_rows = false;
  const AKSequence all = KnownDualRefutation();
  const AKSequence two(all.begin(), all.begin() + 2);
  EXPECT_EQ(CheckSequence(m, two).outcome.status,
            CheckSequence(m, two, plain).outcome.status);
}

// On a feasible single-pair LP the auxiliary point carries exactly the
// mutual rank of the pair.
TEST(Ak, FeasiblePointHasMutualRank) {
  const Matroid m = TicTacToeDual();
  int feasible = 0;
  for (Mask x : m.flats()) {
    for (Mask y : m.flats()) {
      if (x == y || IsModularPair(m, x, y)) continue;
      if (feasible >= 25) break;
      const SequenceReport r = CheckSequence(m, {{StepKind::kAk, x, y, ""}});
      if (r.outcome.status != LPStatus::kFeasible) continue;
      ++feasible;
      EXPECT_EQ(r.outcome.point[Bit(m.size())], MutualRank(m, x, y));
    }
  }
  EXPECT_GT(feasible, 0);
}

TEST(Ak, FilterTagsAreSound) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Matroid m = RandomSparsePaving(7, 3 + seed % 2, seed + 40);
    for (Mask x : m.flats()) {
      for (Mask y : m.flats()) {
        if (x == y || IsModularPair(m, x, y)) continue;
        if (!AkPairFilter(m, x, y)) continue;
        EXPECT_EQ(CheckSequence(m, {{StepKind::kAk, x, y, ""}}).outcome.status,
                  LPStatus::kFeasible);
      }
    }
  }
}

// No subset of the ground set satisfies both AK conditions for a
// nonmodular pair.
TEST(Ak, InGroundAkSetNeedsModularity) {
  for (const Matroid& m : {RandomSparsePaving(6, 3, 5), Vamos()}) {
    for (Mask x : m.flats()) {
      for (Mask y : m.flats()) {
        if (x == y) continue;
        bool found = false;
        ForEachSubset(m.ground(), [&](Mask z) {
          if (found || m.rank(x | z) != m.rank(x)) return;
          bool ak2 = true;
          ForEachSubset(x, [&](Mask s) {
            ak2 = ak2 && m.rank(s | z) - m.rank(z) == m.rank(s | y) - m.rank(y);
          });
          found = ak2;
        });
        EXPECT_EQ(found, IsModularPair(m, x, y)) << ToString(x) << ToString(y);
      }
    }
  }
}

// A point that is AK information for both orders is common information,
// so the two-sided LP and the CI LP agree.
TEST(Ak, BothOrdersMatchCommonInformation) {
  const Matroid m = RandomSparsePaving(6, 3, 5);
  int nonmodular = 0;
  for (Mask x : m.flats(2)) {
    for (Mask y : m.flats(2)) {
      if (x >= y || IsModularPair(m, x, y)) continue;
      ++nonmodular;
      const int z = m.size();
      PolymatroidLP lp(m.size() + 1);
      lp.AddShannonBlock();
      PinMatroid(lp, m);
      std::vector<Mask> sx, sy;
      ForEachSubset(x, [&](Mask s) { if (s) sx.push_back(s); });
      ForEachSubset(y, [&](Mask s) { if (s) sy.push_back(s); });
      AkConstraints(lp, z, x, y, sx);
      const int zb = static_cast<int>(Bit(z));
      lp.AddRow({{static_cast<int>(y) | zb, 1}, {static_cast<int>(y), -1}},
                Sense::kEq, 0, RowTag::kAk1);
      for (Mask s : sy) {
        lp.AddRow({{static_cast<int>(s) | zb, 1},
                   {zb, -1},
                   {static_cast<int>(s | x), -1},
                   {static_cast<int>(x), 1}},
                  Sense::kEq, 0, RowTag::kAk2);
      }
      const LPStatus both = Solve(lp).status;
      const LPStatus ci = CheckSequence(m, {{StepKind::kCi, x, y, ""}}).outcome.status;
      EXPECT_EQ(both == LPStatus::kInfeasible, ci == LPStatus::kInfeasible)
          << ToString(x) << ToString(y);
    }
  }
  EXPECT_GT(nonmodular, 0);
}

TEST(Ak, CiFeasibilityImpliesAkBothOrders) {
  const Matroid m = RandomSparsePaving(7, 3, 8);
  int tried = 0;
  for (Mask x : m.flats(2)) {
    for (Mask y : m.flats(2)) {
      if (x >= y || IsModularPair(m, x, y) || tried >= 10) continue;
      ++tried;
      const auto ci = CheckSequence(m, {{StepKind::kCi, x, y, ""}}).outcome.status;
      if (ci == LPStatus::kInfeasible) continue;
      EXPECT_NE(CheckSequence(m, {{StepKind::kAk, x, y, ""}}).outcome.status,
                LPStatus::kInfeasible);
      EXPECT_NE(CheckSequence(m, {{StepKind::kAk, y, x, ""}}).outcome.status,
                LPStatus::kInfeasible);
    }
  }
}

TEST(Ak, ModularMatroidsPass) {
  const AKResult r = IsKAk(Uniform(2, 4), 1);
  EXPECT_EQ(r.verdict, Verdict::kTrue);
  EXPECT_EQ(r.lps_solved, 0);
}

TEST(Ak, DualTicTacToeIsOneAk) {
  const AKResult r = CheckOneAk(TicTacToeDual());
  EXPECT_EQ(r.verdict, Verdict::kTrue);
  EXPECT_FALSE(r.pairs.empty());
}

TEST(Ak, BudgetMakesSearchInconclusive) {
  AKOptions o;
  o.budget = 3;
  const AKResult r = IsKAk(TicTacToeDual(), 2, o);
  EXPECT_EQ(r.verdict, Verdict::kInconclusive);
  EXPECT_TRUE(r.truncated);
  EXPECT_THROW(IsKAk(TicTacToeDual(), 0), std::invalid_argument);
}

TEST(SequenceIo, RoundTripWithNames) {
  const Matroid m = TicTacToeDual();
  const AKSequence seq = KnownDualRefutation();
  const std::string text = SequenceToJson(seq, m);
  const AKSequence back = SequenceFromJson(text, m);
  ASSERT_EQ(back.size(), seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EXPECT_EQ(back[i].x, seq[i].x);
    EXPECT_EQ(back[i].y, seq[i].y);
    EXPECT_EQ(back[i].name, seq[i].name);
  }
  EXPECT_EQ(NamedSet(seq[2].x, PointNames(m, seq)), "{0,1,2,a,b}");
}

TEST(SequenceIo, RejectsBadFiles) {
  const Matroid m = TicTacToeDual();
  EXPECT_THROW(SequenceFromJson(R"([{"z":"a","X":["b"],"Y":[1]}])", m),
               std::invalid_argument);
  EXPECT_THROW(SequenceFromJson(
                   R"([{"z":"a","X":[0],"Y":[1]},{"z":"a","X":[0],"Y":[2]}])", m),
               std::invalid_argument);
  EXPECT_THROW(SequenceFromJson(R"([{"kind":"XX","X":[0],"Y":[1]}])", m),
               std::invalid_argument);
  EXPECT_THROW(SequenceFromJson("not json", m), std::invalid_argument);
}

}  // namespace
}  // namespace matext
