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


// Solver internals shared by lp.cc, dual_simplex.cc and exact_simplex.cc.

#ifndef MATEXT_SRC_LP_INTERNAL_H_
#define MATEXT_SRC_LP_INTERNAL_H_

#include <optional>
#include <utility>
#include <vector>

#include "matext/lp.h"

namespace matext::internal {

using SparseRow = std::vector<std::pair<int, Rational>>;

// Global index of the elemental row for the pair {i, j} and a set a that
// avoids both points.
std::size_t ElementalIndex(int n, int i, int j, Mask a);
// Global index of f(Q) - f(Q - i) >= 0.
std::size_t MonotoneIndex(int n, int i);

// Some solution of the sparse system, with free columns set to zero, or
// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> SolveSparseSystem(
    int num_cols, const std::vector<SparseRow>& rows,
    const std::vector<Rational>& rhs);

// Floating-point dual simplex whose final basis is certified in exact
// arithmetic. Returns false when the LP is outside its scope (no elemental
// block, a negative cost, or a variable without a derivable lower bound) or
// when the basis could not be certified.
bool SolveWithFloatBasis(const PolymatroidLP& lp, const SolveOptions& options,
                         LPOutcome* out);

// Dense rational two-phase simplex with Bland's rule.
LPOutcome SolveDenseExact(const PolymatroidLP& lp, const SolveOptions& options);

}  // namespace matext::internal

#endif  // MATEXT_SRC_LP_INTERNAL_H_
