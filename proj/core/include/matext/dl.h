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

#ifndef MATEXT_DL_H_
#define MATEXT_DL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matext/extension.h"
#include "matext/matroid.h"

namespace matext {

enum class Verdict { kTrue, kFalse, kInconclusive };
std::string ToString(Verdict v);

// Structural results that guarantee a quasi-intersection.
enum class DLTag { kLine, kHyperplane, kCircuitUnion, kRankSum };
std::string ToString(DLTag t);

// The unique flat T of `host` with r(T u X) = r(X) such that, for every flat
// X' of the base matroid inside X, T lies in cl(X') exactly when
// r(Y | X') = r(Y | X). `host` is either the base matroid or an extension of
// it whose first points are the base points.
std::optional<Mask> FindQuasiIntersection(const Matroid& host,
                                          const std::vector<Mask>& base_flats_in_x,
                                          Mask x, Mask y);

// Quasi-intersection of the flats (x, y) inside m itself.
std::optional<Mask> QuasiIntersectionIn(const Matroid& m, Mask x, Mask y);

// Minimal flats X' of x with r(Y | X') = r(Y | X); DL2 forces T into each.
std::vector<Mask> DLAnchors(const Matroid& m, Mask x, Mask y);

// Guarantee for a nonmodular pair of flats, or nothing.
std::optional<DLTag> DLPairFilter(const Matroid& m, Mask x, Mask y);

struct DLPairReport {
  enum class Status {
    kModular,
    kGuaranteed,
    kWitnessInGround,
    kWitnessByExtension,
    kRefuted,
    kInconclusive
  };
  Mask x = 0;
  Mask y = 0;
  Status status = Status::kModular;
  std::optional<DLTag> tag;
  Mask witness = 0;
  // Generators of the modular cut of the witnessing single-point extension.
  std::vector<Mask> cut_generators;
  int depth_used = 0;
};
std::string ToString(DLPairReport::Status s);

struct DLOptions {
  std::int64_t budget = 20000;  // cut generations per enumeration
  bool use_filters = true;
  // Record every pair, not only the ones that needed work.
  bool report_all_pairs = false;
};

struct DLResult {
  Verdict verdict = Verdict::kTrue;
  std::vector<DLPairReport> pairs;
  std::optional<DLPairReport> refuting_pair;
};

// Recursive DL check over ordered pairs of flats, in ascending
// r(X) + r(Y) then mask order. A pair passes at depth 1 when its
// quasi-intersection exists in m or in a single-point extension whose cut
// contains the DL anchors; at depth d > 1 the witnessing matroid must itself
// pass at depth d - 1.
DLResult IsKDL(const Matroid& m, int depth, const DLOptions& options = {});

// The pair-level check of IsKDL without filters; used to confirm a
// refuting pair on its own.
DLPairReport CheckDLPair(const Matroid& m, Mask x, Mask y, int depth,
                         const DLOptions& options = {});

struct RankFourEquivalence {
  bool dl_exists = false;
  bool ak_matroid_exists = false;
};

// For a rank-4 matroid, a hyperplane x and a line y forming a nonmodular
// pair: whether a quasi-intersection exists (in m or a single-point
// extension) and, independently, whether a single-point extension is an AK
// extension for (x, y).
RankFourEquivalence DLAKEquivRank4(const Matroid& m, Mask x, Mask y,
                                   std::int64_t budget = 1000000);

// Whether the single-point extension `ext` (new point = last index) makes
// that point an AK-information of (x, y): r(x + z) = r(x) and
// r(X' + z) - r(z) = r(X' + y) - r(y) for every flat X' of the base inside x.
bool IsMatroidAKExtension(const Matroid& base, const Matroid& ext, Mask x,
                          Mask y);

}  // namespace matext

#endif  // MATEXT_DL_H_
