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


#ifndef MATEXT_SECRET_SHARING_H_
#define MATEXT_SECRET_SHARING_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matext/ak.h"
#include "matext/lp.h"
#include "matext/matroid.h"
#include "matext/rational.h"

namespace matext {

// Access structure on points 0..n_points-1: the dealer plus participants,
// generated by an antichain of minimal authorized sets.
struct AccessStructure {
  int n_points = 0;
  int dealer = 0;
  Mask participants = 0;
  std::vector<Mask> min_authorized;
};

// Validates the antichain and the participant sets; throws
// std::invalid_argument otherwise.
AccessStructure MakeAccessStructure(int n_points, int dealer,
                                    std::vector<Mask> min_authorized);

// {"points": n, "dealer": p, "min_authorized": [[...], ...]}
AccessStructure AccessFromJson(const std::string& text);
std::string AccessToJson(const AccessStructure& a);

struct PortSpec {
  Matroid matroid;
  AccessStructure access;
};

// Port of m at the dealer point: minimal X with r(X + p) = r(X). Throws
// std::invalid_argument for a loop or coloop dealer.
PortSpec Port(const Matroid& m, int dealer);

bool IsAuthorized(const AccessStructure& a, Mask x);
// Maximal subsets of the participants that contain no authorized set.
std::vector<Mask> MaximalForbidden(const AccessStructure& a);

struct BoundOptions {
  Rational normalization = 1;  // value of f(dealer)
};

struct BoundResult {
  Rational sigma_lower = 0;
  PolymatroidLP lp;
  LPOutcome certificate;
  std::vector<std::pair<Mask, Mask>> ak_sets_used;
};

// The bound LP: minimize v subject to v >= f(x) for every participant,
// f(dealer) = normalization, f(A + dealer) = f(A) for minimal authorized A,
// f(B + dealer) = f(B) + f(dealer) for maximal forbidden B, the elemental
// block, and AK rows over every subset of X for each step. Steps introduce
// points n_points, n_points + 1, ... Throws std::runtime_error when the LP
// is not optimal.
PolymatroidLP BuildBoundLP(const AccessStructure& a, const AKSequence& steps,
                           const BoundOptions& options = {});
BoundResult SsBound(const AccessStructure& a, const AKSequence& steps,
                    const BoundOptions& options = {});

struct AdvisorEntry {
  Mask x = 0;
  Mask y = 0;
  Rational bound = 0;
};

// Ranks single-step AK pairs by the bound they give, best first; ties keep
// candidate order. At most `budget` candidates are solved.
std::vector<AdvisorEntry> AkSetAdvisor(
    const AccessStructure& a, const std::vector<std::pair<Mask, Mask>>& candidates,
    std::int64_t budget);
// Candidates are the nonmodular pairs of flats of the matroid in
// (rank sum, mask) order.
std::vector<AdvisorEntry> AkSetAdvisor(const PortSpec& spec,
                                       std::int64_t budget);

}  // namespace matext

#endif  // MATEXT_SECRET_SHARING_H_
