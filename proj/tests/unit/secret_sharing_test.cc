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

#include "matext/catalog.h"
#include "matext/secret_sharing.h"

namespace matext {
namespace {

TEST(SecretSharing, UniformPortIsThreshold) {
  const PortSpec s = Port(Uniform(2, 3), 0);
  EXPECT_EQ(s.access.participants, 0b110u);
  EXPECT_EQ(s.access.min_authorized, std::vector<Mask>({0b110}));
  EXPECT_EQ(MaximalForbidden(s.access), std::vector<Mask>({0b010, 0b100}));
}

TEST(SecretSharing, ThresholdMaximalForbidden) {
  const AccessStructure a = MakeAccessStructure(4, 0, {0b0110, 0b1010, 0b1100});
  EXPECT_EQ(MaximalForbidden(a), std::vector<Mask>({0b0010, 0b0100, 0b1000}));
  EXPECT_TRUE(IsAuthorized(a, 0b1110));
  EXPECT_FALSE(IsAuthorized(a, 0b0100));
}

TEST(SecretSharing, DegeneratePortsRejected) {
  // Point 2 is a coloop of U(2,2) + a loop at point 3 in this construction.
  const Matroid m = Matroid::FromBases(4, {0b0011, 0b0101, 0b0110});
  EXPECT_THROW(Port(m, 3), std::invalid_argument);
  const Matroid c = Matroid::FromBases(3, {0b011, 0b101});
  EXPECT_THROW(Port(c, 0), std::invalid_argument);
  EXPECT_THROW(Port(Uniform(2, 3), 5), std::invalid_argument);
}

TEST(SecretSharing, AccessValidation) {
  EXPECT_THROW(MakeAccessStructure(3, 0, {0b011}), std::invalid_argument);
  EXPECT_THROW(MakeAccessStructure(3, 0, {0b110, 0b010}), std::invalid_argument);
  EXPECT_THROW(MakeAccessStructure(3, 4, {0b110}), std::invalid_argument);
  const AccessStructure a = MakeAccessStructure(4, 0, {0b0110, 0b1010});
  const AccessStructure b = AccessFromJson(AccessToJson(a));
  EXPECT_EQ(b.min_authorized, a.min_authorized);
  EXPECT_EQ(b.dealer, a.dealer);
}

TEST(SecretSharing, IdealPortBoundIsOne) {
  const BoundResult r = SsBound(Port(Uniform(2, 3), 0).access, {});
  EXPECT_EQ(r.sigma_lower, 1);
  EXPECT_TRUE(CheckCertificate(r.lp, r.certificate));
}

TEST(SecretSharing, NormalizationScalesOptimum) {
  const AccessStructure a = Port(Vamos(), 0).access;
  BoundOptions two;
  two.normalization = 2;
  const BoundResult r1 = SsBound(a, {});
  const BoundResult r2 = SsBound(a, {}, two);
  EXPECT_EQ(r2.certificate.value, 2 * r1.certificate.value);
  EXPECT_EQ(r1.sigma_lower, r2.sigma_lower);
}

TEST(SecretSharing, MoreStepsNeverLowerTheBound) {
  const AccessStructure a = Port(Vamos(), 0).access;
  const AKSequence steps = {{StepKind::kAk, 0b00110011, 0b11000000, ""},
                            {StepKind::kAk, 0b00001111, 0b11000000, ""}};
  Rational last = 0;
  for (std::size_t k = 0; k <= steps.size(); ++k) {
    const AKSequence prefix(steps.begin(), steps.begin() + k);
    const BoundResult r = SsBound(a, prefix);
    EXPECT_TRUE(CheckCertificate(r.lp, r.certificate));
    EXPECT_GE(r.sigma_lower, last);
    EXPECT_GE(r.sigma_lower, 1);
    last = r.sigma_lower;
  }
}

TEST(SecretSharing, MatroidRankSatisfiesItsPort) {
  const Matroid v = Vamos();
  const PortSpec s = Port(v, 0);
  const PolymatroidLP lp = BuildBoundLP(s.access, {});
  std::vector<Rational> point(lp.var_limit(), 0);
  for (Mask a = 1; a <= v.ground(); ++a) point[a] = v.rank(a);
  point[lp.extra_var(0)] = 1;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const Row row = lp.row(i);
    const Rational act = RowActivity(row, point);
    if (row.sense == Sense::kEq) {
      EXPECT_EQ(act, row.rhs) << i;
    } else if (row.sense == Sense::kGe) {
      EXPECT_GE(act, row.rhs) << i;
    }
  }
}

TEST(SecretSharing, AdvisorIsReproducible) {
  const PortSpec s = Port(Uniform(3, 5), 0);
  const auto a = AkSetAdvisor(s, 5);
  const auto b = AkSetAdvisor(s, 5);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.size(), 5u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].bound, b[i].bound);
    EXPECT_EQ(a[i].bound, 1);
  }
}

TEST(SecretSharing, StepLimitEnforced) {
  const AccessStructure a = Port(Vamos(), 0).access;
  const AKSequence seven(7, {StepKind::kAk, 0b11, 0b1100, ""});
  EXPECT_THROW(SsBound(a, seven), std::invalid_argument);
}

}  // namespace
}  // namespace matext
