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


#ifndef MATEXT_PSM_H_
#define MATEXT_PSM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "matext/dl.h"
#include "matext/matroid.h"

namespace matext {

// Flats x, y, z with x covering x∩z, y covering y∩z and
// r(x∩y) - r(x∩y∩z) > 1; a = x∩y∩z.
struct PseudoTriple {
  Mask x = 0;
  Mask y = 0;
  Mask z = 0;
  Mask a = 0;
  bool operator==(const PseudoTriple&) const = default;
};

// The three conditions on flats x, y, z.
bool ValidateTriple(const Matroid& m, Mask x, Mask y, Mask z);

// Visits pseudotriples lazily. Each unordered triple of distinct flats is
// tried with each member in the z position; every valid orientation is
// visited once. Stops early when `visit` returns false.
void ForEachPsmTriple(const Matroid& m,
                      const std::function<bool(const PseudoTriple&)>& visit);
std::vector<PseudoTriple> GetPsmTriples(const Matroid& m);

// True when some single-point extension puts a point in x, y and z outside
// cl(a): a is not in the modular cut generated by {x, y, z}.
bool TripleHasExtension(const Matroid& m, const PseudoTriple& t);

// False on the first pseudotriple without such an extension.
bool BaseCheckPsm(const Matroid& m);

struct PsmOptions {
  std::int64_t budget = 20000;  // cut generations per enumeration
};

// One extension tried for the refuting triple and the triple that failed
// in it one level down.
struct PsmBranch {
  std::vector<Mask> cut_generators;
  std::optional<PseudoTriple> failing_triple;
};

struct PsmResult {
  Verdict verdict = Verdict::kTrue;
  std::optional<PseudoTriple> refuting_triple;
  std::vector<PsmBranch> branches;
  std::int64_t triples_checked = 0;
  std::int64_t extensions_tried = 0;
  bool truncated = false;
};

// depth 1 is BaseCheckPsm. At depth d > 1 every pseudotriple needs a
// single-point extension with the new point in x, y, z, raising the rank
// of a, that passes at depth d - 1. Inconclusive when an enumeration ran out
// of budget or a matroid reached the point limit before a decision.
PsmResult RecursivePsm(const Matroid& m, int depth,
                       const PsmOptions& options = {});

// The per-triple step of RecursivePsm; used to confirm a refuting triple
// on its own. Throws std::invalid_argument when t is not a pseudotriple.
Verdict CheckPsmTriple(const Matroid& m, const PseudoTriple& t, int depth,
                       const PsmOptions& options = {});

}  // namespace matext

#endif  // MATEXT_PSM_H_
