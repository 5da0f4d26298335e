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

#include <random>

#include "matext/lp.h"
#include "matext/lp_io.h"

namespace matext {
namespace {

bool SatisfiesElemental(int n, const std::vector<Rational>& f) {
  for (std::size_t i = 0; i < ShannonRowCount(n); ++i) {
    if (RowActivity(ShannonRow(n, i), f) < 0) return false;
  }
  return true;
}

// Monotonicity and submodularity over all pairs of subsets.
bool SatisfiesShannon(int n, const std::vector<Rational>& f) {
  const Mask full = FullMask(n);
  for (Mask a = 0; a <= full; ++a) {
    for (Mask b = 0; b <= full; ++b) {
      if (IsSubset(a, b) && f[a] > f[b]) return false;
      if (f[a] + f[b] < f[a | b] + f[a & b]) return false;
    }
  }
  return true;
}

TEST(Lp, ElementalRowCount) {
  EXPECT_EQ(ShannonRowCount(3), 3u * 2 + 3);
  EXPECT_EQ(ShannonRowCount(4), 6u * 4 + 4);
  EXPECT_EQ(ShannonBlock(4).size(), ShannonRowCount(4));
}

TEST(Lp, ElementalBlockMatchesShannonOnThreePoints) {
  const int n = 3;
  std::vector<Rational> f(8, 0);
  // Every vector with values 0..2 on the seven nonempty subsets.
  for (int code = 0; code < 2187; ++code) {
    int c = code;
    for (Mask a = 1; a < 8; ++a) {
      f[a] = c % 3;
      c /= 3;
    }
    EXPECT_EQ(SatisfiesElemental(n, f), SatisfiesShannon(n, f)) << code;
  }
}

TEST(Lp, ElementalBlockMatchesShannonOnFourPointsSampled) {
  const int n = 4;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(0, 3);
  std::vector<Rational> f(16, 0);
  for (int trial = 0; trial < 20000; ++trial) {
    for (Mask a = 1; a < 16; ++a) f[a] = Size(a) + val(rng);
    EXPECT_EQ(SatisfiesElemental(n, f), SatisfiesShannon(n, f));
  }
}

PolymatroidLP TwoPointInfeasible() {
  PolymatroidLP lp(2);
  lp.AddShannonBlock();
  lp.AddRow({{0b01, 1}}, Sense::kEq, 1, RowTag::kRankPin);
  lp.AddRow({{0b11, 1}}, Sense::kEq, Rational(1, 2), RowTag::kRankPin);
  return lp;
}

TEST(Lp, InfeasibleHasFarkasCertificate) {
  const PolymatroidLP lp = TwoPointInfeasible();
  for (bool exact : {false, true}) {
    SolveOptions o;
    o.exact_only = exact;
    const LPOutcome out = Solve(lp, o);
    EXPECT_EQ(out.status, LPStatus::kInfeasible);
    std::string why;
    EXPECT_TRUE(CheckCertificate(lp, out, &why)) << why;
  }
}

TEST(Lp, OptimumMatchesOnBothPaths) {
  PolymatroidLP lp(3, {"v"});
  lp.AddShannonBlock();
  lp.AddRow({{0b001, 1}}, Sense::kEq, 1, RowTag::kAccess);
  lp.AddRow({{0b011, 1}, {0b010, -1}}, Sense::kEq, 0, RowTag::kAccess);
  lp.AddRow({{0b101, 1}, {0b100, -1}}, Sense::kEq, 0, RowTag::kAccess);
  const int v = lp.extra_var(0);
  lp.AddRow({{v, 1}}, Sense::kGe, 0, RowTag::kObjLink);
  lp.AddRow({{v, 1}, {0b010, -1}}, Sense::kGe, 0, RowTag::kObjLink);
  lp.AddRow({{v, 1}, {0b100, -1}}, Sense::kGe, 0, RowTag::kObjLink);
  lp.SetObjective(PolymatroidLP::Goal::kMinimize, {{v, 1}});
  SolveOptions exact;
  exact.exact_only = true;
  const LPOutcome a = Solve(lp);
  const LPOutcome b = Solve(lp, exact);
  ASSERT_EQ(a.status, LPStatus::kOptimal);
  ASSERT_EQ(b.status, LPStatus::kOptimal);
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(b.value, 1);
  EXPECT_TRUE(CheckCertificate(lp, a));
  EXPECT_TRUE(CheckCertificate(lp, b));
}

TEST(Lp, UnboundedDetected) {
  PolymatroidLP lp(2);
  lp.AddShannonBlock();
  lp.SetObjective(PolymatroidLP::Goal::kMaximize, {{0b11, 1}});
  const LPOutcome out = Solve(lp);
  EXPECT_EQ(out.status, LPStatus::kUnbounded);
  EXPECT_TRUE(CheckCertificate(lp, out));
}

TEST(Lp, TamperedCertificateRejected) {
  const PolymatroidLP lp = TwoPointInfeasible();
  LPOutcome out = Solve(lp);
  ASSERT_FALSE(out.multipliers.empty());
  out.multipliers[0].second *= 2;
  EXPECT_FALSE(CheckCertificate(lp, out));
  out.status = LPStatus::kFeasible;
  EXPECT_FALSE(CheckCertificate(lp, out));
}

TEST(Lp, SolveIsDeterministic) {
  const PolymatroidLP lp = TwoPointInfeasible();
  const std::string first = OutcomeToJson(Solve(lp));
  for (int i = 0; i < 10; ++i) EXPECT_EQ(OutcomeToJson(Solve(lp)), first);
}

TEST(LpIo, RoundTrip) {
  PolymatroidLP lp = TwoPointInfeasible();
  lp.SetObjective(PolymatroidLP::Goal::kMinimize, {{0b10, Rational(3, 7)}});
  const std::string text = LPToJson(lp);
  EXPECT_EQ(LPToJson(LPFromJson(text)), text);
  const LPOutcome out = Solve(lp);
  const std::string cert = OutcomeToJson(out);
  const LPOutcome back = OutcomeFromJson(cert);
  EXPECT_EQ(OutcomeToJson(back), cert);
  EXPECT_TRUE(CheckCertificate(LPFromJson(text), back));
  EXPECT_EQ(ContentHash(text), ContentHash(text));
  EXPECT_EQ(ContentHash(text).size(), 16u);
  EXPECT_NE(ContentHash(text), ContentHash(cert));
}

TEST(LpIo, MalformedInputThrows) {
  EXPECT_THROW(LPFromJson("{"), std::invalid_argument);
  EXPECT_THROW(LPFromJson(R"({"schema":"other"})"), std::invalid_argument);
  EXPECT_THROW(OutcomeFromJson(R"({"status":"maybe"})"), std::invalid_argument);
}

}  // namespace
}  // namespace matext
