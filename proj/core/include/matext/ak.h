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


#ifndef MATEXT_AK_H_
#define MATEXT_AK_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matext/dl.h"
#include "matext/lp.h"
#include "matext/matroid.h"

namespace matext {

enum class StepKind { kAk, kCi };
std::string ToString(StepKind k);

// One auxiliary point. Step i of a sequence over a matroid on n points
// introduces point n + i; x and y may use matroid points and the points of
// earlier steps.
struct AKStep {
  StepKind kind = StepKind::kAk;
  Mask x = 0;
  Mask y = 0;
  std::string name;  // optional display name of the new point
};
using AKSequence = std::vector<AKStep>;

// Throws std::invalid_argument when a step references a later point, a set
// is empty, or the extended ground set exceeds the LP cap.
void ValidateSequence(const Matroid& m, const AKSequence& seq);
void ValidateSequence(int n_points, const AKSequence& seq);

enum class AKTag {
  kModular,
  kXYCircuit,
  kXLine,
  kYHyperplane,
  kTwoHyperplanes,
  kSparseRankSum,
  kGeResolved,
};
std::string ToString(AKTag t);

// Chain of single-point extensions that makes (cl x, cl y) modular, found by
// repeatedly adding a point on both closures. Each entry holds the
// generators of one cut. False means the surrogate did not apply, not that
// the pair fails.
bool GeHeuristic(const Matroid& m, Mask x, Mask y, int budget,
                 std::vector<std::vector<Mask>>* chain = nullptr);

// Tag of a result that guarantees an AK extension for the pair of flats.
std::optional<AKTag> AkPairFilter(const Matroid& m, Mask x, Mask y,
                                  bool use_ge = false, int ge_budget = 6);

// Rows for z = AK(x, y): f(xz) - f(x) = 0 and, for each x' in subsets_of_x,
// f(x'z) - f(z) - f(x'y) + f(y) = 0. Throws std::logic_error when z already
// serves another step.
void AkConstraints(PolymatroidLP& lp, int z, Mask x, Mask y,
                   const std::vector<Mask>& subsets_of_x);
// Rows for z = CI(x, y): f(xz) = f(x), f(yz) = f(y),
// f(z) = f(x) + f(y) - f(xy).
void CiConstraints(PolymatroidLP& lp, int z, Mask x, Mask y);

struct SequenceLPOptions {
  // Adds implied equalities f(A) = f(B) for closures B of A that the other
  // rows force; they shrink the problem without changing its feasible set.
  bool closure_rows = true;
  // Uses every subset of x in the second AK condition even when x lies in
  // the matroid, where its flats suffice.
  bool ak2_all_subsets = false;
};

// The closure used for the implied rows, over the extended ground set.
Mask ForcedClosure(const Matroid& m, const AKSequence& seq, Mask a);

PolymatroidLP BuildSequenceLP(const Matroid& m, const AKSequence& seq,
                              const SequenceLPOptions& options = {});

struct SequenceReport {
  LPOutcome outcome;
  std::size_t shannon_rows = 0;
  std::size_t pin_rows = 0;
  std::size_t closure_rows = 0;
  std::vector<std::size_t> rows_per_step;
};

SequenceReport CheckSequence(const Matroid& m, const AKSequence& seq,
                             const SequenceLPOptions& options = {});

struct AKPairReport {
  enum class Status { kModular, kGuaranteed, kLpFeasible, kLpInfeasible };
  Mask x = 0;
  Mask y = 0;
  Status status = Status::kModular;
  std::optional<AKTag> tag;
};
std::string ToString(AKPairReport::Status s);

struct AKOptions {
  std::int64_t budget = 5000;  // LP solves
  int threads = 1;
  // Kind of every step in searched sequences. CI steps are symmetric, so
  // only pairs with x < y are tried, and the AK guarantee filters are off.
  StepKind kind = StepKind::kAk;
  bool use_filters = true;
  bool use_ge = false;
  int ge_budget = 6;
  // Scan every pair at depth one instead of stopping at the first failure.
  bool scan_all_pairs = false;
  // Called after every LP solve with the sequence and its status.
  std::function<void(const AKSequence&, LPStatus)> on_lp;
};

struct AKResult {
  Verdict verdict = Verdict::kTrue;
  std::vector<AKPairReport> pairs;  // depth-one scan
  std::optional<AKSequence> refutation;
  LPOutcome certificate;
  std::int64_t lps_solved = 0;
  bool truncated = false;
};

// Depth-one scan over ordered nonmodular pairs of flats.
AKResult CheckOneAk(const Matroid& m, const AKOptions& options = {});

// Iterative deepening up to max_depth. A sequence of length d >= 2 picks a
// proper flat F (up to automorphism), d - 1 base pairs whose auxiliary
// points ForcedClosure puts in the closure of F, and ends with
// AK(F + those points, Y) for a flat Y of rank at most k - 2 that is not
// inside F and forms a nonmodular pair with F. Base pairs are the
// nonmodular flat pairs that the filters do not settle.
AKResult SearchRefutation(const Matroid& m, int max_depth,
                          const AKOptions& options = {});

// Depth one, then the refutation search for deeper sequences.
AKResult IsKAk(const Matroid& m, int depth, const AKOptions& options = {});

// Rank-preserving permutations, capped at `limit` elements (identity first).
std::vector<std::vector<int>> Automorphisms(const Matroid& m,
                                            std::size_t limit = 5040);

}  // namespace matext

#endif  // MATEXT_AK_H_
