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

#ifndef MATEXT_EXTENSION_H_
#define MATEXT_EXTENSION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matext/matroid.h"

namespace matext {

// A family of flats of a host matroid. Instances built by GenerateCut are
// modular cuts by construction; others can be checked with IsModularCut.
class ModularCut {
 public:
  ModularCut(Matroid host, std::vector<Mask> flats);

  const Matroid& host() const { return host_; }
  // Sorted by (rank, mask), as in Matroid::flats().
  const std::vector<Mask>& flats() const { return flats_; }
  bool contains(Mask flat) const;
  std::size_t size() const { return flats_.size(); }
  bool empty() const { return flats_.empty(); }
  // The inclusion-minimal members; they generate the cut.
  std::vector<Mask> minimal() const;
  // True when the cut holds the closure of the empty set, i.e. the new point
  // would be a loop.
  bool is_loop_cut() const;

  bool operator==(const ModularCut& o) const { return flats_ == o.flats_; }

 private:
  Matroid host_;
  std::vector<Mask> flats_;
  std::vector<std::uint64_t> bits_;  // indexed by Matroid::flat_index
};

// Checks upward closure and closure under intersections of modular pairs.
bool IsModularCut(const Matroid& m, const std::vector<Mask>& family,
                  std::string* why = nullptr);

// Smallest modular cut containing every generator.
ModularCut GenerateCut(const Matroid& m, const std::vector<Mask>& generators);

struct PointExtension {
  Matroid base;
  int new_point = 0;
  ModularCut cut;
  Matroid result;
};

// Adds point n to m: r(A + e) = r(A) when cl(A) is in the cut, r(A) + 1
// otherwise. Loop cuts are rejected.
PointExtension ExtendByPoint(const Matroid& m, const ModularCut& cut);

// Which flats may be added as generators beyond must_contain.
enum class CutScope { kAboveRequired, kAllFlats };

// Modular cuts containing every flat of must_contain, in ascending size.
// With kAboveRequired, cuts come from generating sets built of flats above
// some must_contain member (all flats when must_contain is empty); with
// kAllFlats every cut containing must_contain is reached. Generators are
// explored in ascending rank order. `budget` caps the number of cut generations; when it runs out the
// enumeration stops and truncated() reports it. Loop cuts are never yielded;
// the empty cut is yielded first only when allow_empty is set and
// must_contain is empty.
class CutEnumerator {
 public:
  CutEnumerator(const Matroid& m, std::vector<Mask> must_contain,
                std::int64_t budget, bool allow_empty = false,
                CutScope scope = CutScope::kAboveRequired);

  std::optional<ModularCut> Next();
  bool truncated() const { return truncated_; }
  std::size_t count() const { return cuts_.size(); }

 private:
  std::vector<ModularCut> cuts_;
  std::size_t pos_ = 0;
  bool truncated_ = false;
};

// Applies one single-point extension per generator list; each list names
// flats of the matroid built so far.
Matroid ChainExtend(const Matroid& m,
                    const std::vector<std::vector<Mask>>& chain);

}  // namespace matext

#endif  // MATEXT_EXTENSION_H_
