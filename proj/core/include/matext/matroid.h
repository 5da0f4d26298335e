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

#ifndef MATEXT_MATROID_H_
#define MATEXT_MATROID_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "matext/subset.h"

namespace matext {

// A matroid on at most kMaxPoints points. The rank function is tabulated at
// construction, so rank queries are O(1). Copies share state; instances are
// immutable and safe to query concurrently.
class Matroid {
 public:
  enum class Form { kBases, kCircuitHyperplanes };

  // The empty matroid on zero points.
  Matroid();

  static Matroid FromBases(int n, std::vector<Mask> bases);
  static Matroid SparsePaving(int n, int rank,
                              std::vector<Mask> circuit_hyperplanes);
  // Builds from a full rank table indexed by mask. The defining family is
  // chosen automatically: circuit-hyperplanes when the table is sparse
  // paving, otherwise bases.
  static Matroid FromRankTable(int n, std::vector<std::uint8_t> ranks);

  int size() const;
  int rank() const;
  Mask ground() const { return FullMask(size()); }

  int rank(Mask a) const;
  Mask closure(Mask a) const;
  bool is_flat(Mask a) const;

  // All flats sorted by (rank, mask).
  const std::vector<Mask>& flats() const;
  // Flats of one rank, sorted by mask.
  const std::vector<Mask>& flats(int rank_level) const;
  // Position of a flat in flats(), or -1 when a is not a flat.
  int flat_index(Mask a) const;
  // Flats contained in a, sorted by (rank, mask).
  std::vector<Mask> flats_below(Mask a) const;

  Form form() const;
  // Bases (kBases) or circuit-hyperplanes (kCircuitHyperplanes), sorted.
  const std::vector<Mask>& defining_family() const;
  bool is_sparse_paving() const { return form() == Form::kCircuitHyperplanes; }
  std::vector<Mask> bases() const;
  // Circuit-hyperplanes, computed for either form.
  std::vector<Mask> circuit_hyperplanes() const;
  bool is_circuit(Mask a) const;

  const std::vector<std::uint8_t>& rank_table() const;

  // Same ground size and identical rank functions.
  bool operator==(const Matroid& other) const;
  bool operator!=(const Matroid& other) const { return !(*this == other); }

  struct Impl;

 private:
  explicit Matroid(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Result of deleting or contracting points: the minor and, for each new point
// index, the original index it came from.
struct Minor {
  Matroid matroid;
  std::vector<int> original_index;
};

Matroid Dual(const Matroid& m);
Minor Delete(const Matroid& m, Mask b);
Minor Contract(const Matroid& m, Mask b);
// Restriction to the points of a, relabelled densely.
Minor Restrict(const Matroid& m, Mask a);
// Renames points: new point perm[i] plays the role of old point i.
Matroid Relabel(const Matroid& m, const std::vector<int>& perm);

// r(x) + r(y) == r(x u y) + r(x n y). Both arguments must be flats.
bool IsModularPair(const Matroid& m, Mask x, Mask y);
// r(x) + r(y) - r(x u y); the rank of the common information of a pair.
int MutualRank(const Matroid& m, Mask x, Mask y);

struct AxiomReport {
  bool ok = true;
  std::string violation;
};

// Exhaustively checks normalisation, unit increase, monotonicity and
// submodularity. Submodularity is checked in its local form
// r(Ai) + r(Aj) >= r(Aij) + r(A), which is equivalent to the global one.
AxiomReport VerifyMatroidAxioms(const Matroid& m);

// Uniform matroid U_{k,n}.
Matroid Uniform(int rank, int n);

}  // namespace matext

#endif  // MATEXT_MATROID_H_
