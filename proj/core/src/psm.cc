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


#include "matext/psm.h"

#include <stdexcept>

#include "matext/extension.h"

namespace matext {

namespace {

bool Covers(const Matroid& m, Mask upper, Mask lower) {
  return IsSubset(lower, upper) && m.rank(lower) + 1 == m.rank(upper);
}

}  // namespace

bool ValidateTriple(const Matroid& m, Mask x, Mask y, Mask z) {
  return Covers(m, x, x & z) && Covers(m, y, y & z) &&
         m.rank(x & y) - m.rank(x & y & z) > 1;
}

void ForEachPsmTriple(const Matroid& m,
                      const std::function<bool(const PseudoTriple&)>& visit) {
  const std::vector<Mask>& f = m.flats();
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Mask orient[3][3] = {{f[i], f[j], f[k]},
                                   {f[i], f[k], f[j]},
                                   {f[k], f[j], f[i]}};
        for (const auto& o : orient) {
          if (!ValidateTriple(m, o[0], o[1], o[2])) continue;
          if (!visit({o[0], o[1], o[2], o[0] & o[1] & o[2]})) return;
        }
      }
    }
  }
}

std::vector<PseudoTriple> GetPsmTriples(const Matroid& m) {
  std::vector<PseudoTriple> out;
  ForEachPsmTriple(m, [&](const PseudoTriple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool TripleHasExtension(const Matroid& m, const PseudoTriple& t) {
  return !GenerateCut(m, {t.x, t.y, t.z}).contains(t.a);
}

bool BaseCheckPsm(const Matroid& m) {
  bool ok = true;
  ForEachPsmTriple(m, [&](const PseudoTriple& t) {
    ok = TripleHasExtension(m, t);
    return ok;
  });
  return ok;
}

namespace {

class PsmSearch {
 public:
  explicit PsmSearch(const PsmOptions& options) : options_(options) {}

  // record: fill the result's refutation details at this level.
  Verdict Run(const Matroid& m, int depth, PsmResult* record) {
    Verdict verdict = Verdict::kTrue;
    ForEachPsmTriple(m, [&](const PseudoTriple& t) {
      ++triples_;
      const Verdict v = CheckTriple(m, t, depth, record);
      if (v == Verdict::kFalse) {
        verdict = Verdict::kFalse;
        if (record) record->refuting_triple = t;
        if (!record) failing_ = t;
        return false;
      }
      if (v == Verdict::kInconclusive) verdict = Verdict::kInconclusive;
      return true;
    });
    return verdict;
  }

  Verdict Triple(const Matroid& m, const PseudoTriple& t, int depth) {
    return CheckTriple(m, t, depth, nullptr);
  }

  std::int64_t triples() const { return triples_; }
  std::int64_t extensions() const { return extensions_; }
  bool truncated() const { return truncated_; }

 private:
  Verdict CheckTriple(const Matroid& m, const PseudoTriple& t, int depth,
                      PsmResult* record) {
    if (depth == 1) {
      return TripleHasExtension(m, t) ? Verdict::kTrue : Verdict::kFalse;
    }
    if (m.size() >= kMaxPoints) {
      truncated_ = true;
      return Verdict::kInconclusive;
    }
    std::vector<PsmBranch> branches;
    bool open = false;
    CutEnumerator cuts(m, {t.x, t.y, t.z}, options_.budget, false,
                       CutScope::kAllFlats);
    while (auto cut = cuts.Next()) {
      if (cut->contains(t.a)) continue;
      ++extensions_;
      const Matroid n = ExtendByPoint(m, *cut).result;
      failing_.reset();
      const Verdict v = Run(n, depth - 1, nullptr);
      if (v == Verdict::kTrue) return Verdict::kTrue;
      if (v == Verdict::kInconclusive) open = true;
      if (record) branches.push_back({cut->minimal(), failing_});
    }
    if (cuts.truncated()) {
      truncated_ = true;
      open = true;
    }
    if (open) return Verdict::kInconclusive;
    if (record) record->branches = std::move(branches);
    return Verdict::kFalse;
  }

  PsmOptions options_;
  std::optional<PseudoTriple> failing_;
  std::int64_t triples_ = 0;
  std::int64_t extensions_ = 0;
  bool truncated_ = false;
};

}  // namespace

PsmResult RecursivePsm(const Matroid& m, int depth, const PsmOptions& options) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  PsmResult result;
  PsmSearch search(options);
  result.verdict = search.Run(m, depth, &result);
  result.triples_checked = search.triples();
  result.extensions_tried = search.extensions();
  result.truncated = search.truncated();
  return result;
}

Verdict CheckPsmTriple(const Matroid& m, const PseudoTriple& t, int depth,
                       const PsmOptions& options) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (!m.is_flat(t.x) || !m.is_flat(t.y) || !m.is_flat(t.z) ||
      !ValidateTriple(m, t.x, t.y, t.z) || t.a != (t.x & t.y & t.z)) {
    throw std::invalid_argument("not a pseudotriple of this matroid");
  }
  PsmSearch search(options);
  return search.Triple(m, t, depth);
}

}  // namespace matext
