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

#include "matext/dl.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace matext {

std::string ToString(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string ToString(DLTag t) {
  switch (t) {
    case DLTag::kLine: return "LINE";
    case DLTag::kHyperplane: return "HYPERPLANE";
    case DLTag::kCircuitUnion: return "CIRCUIT_UNION";
    case DLTag::kRankSum: return "RANK_SUM";
  }
  return "?";
}

std::string ToString(DLPairReport::Status s) {
  using S = DLPairReport::Status;
  switch (s) {
    case S::kModular: return "modular";
    case S::kGuaranteed: return "guaranteed";
    case S::kWitnessInGround: return "witness_in_ground";
    case S::kWitnessByExtension: return "witness_by_extension";
    case S::kRefuted: return "refuted";
    case S::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void RequireFlats(const Matroid& m, Mask x, Mask y) {
  if (!IsSubset(x | y, m.ground()) || !m.is_flat(x) || !m.is_flat(y)) {
    throw std::invalid_argument("expected two flats, got " + ToString(x) +
                                " and " + ToString(y));
  }
}

bool Modular(const Matroid& m, Mask x, Mask y) {
  return m.rank(x) + m.rank(y) == m.rank(x | y) + m.rank(x & y);
}

}  // namespace

std::optional<Mask> FindQuasiIntersection(const Matroid& host,
                                          const std::vector<Mask>& base_flats_in_x,
                                          Mask x, Mask y) {
  const int rx = host.rank(x);
  const int gap = host.rank(x | y) - rx;
  std::vector<char> forced(base_flats_in_x.size());
  for (std::size_t i = 0; i < base_flats_in_x.size(); ++i) {
    const Mask xp = base_flats_in_x[i];
    forced[i] = host.rank(xp | y) - host.rank(xp) == gap;
  }
  const Mask span = host.closure(x);
  for (Mask t : host.flats()) {
    if (!IsSubset(t, span)) continue;  // DL1: r(T | X) = 0
    bool ok = true;
    for (std::size_t i = 0; i < base_flats_in_x.size() && ok; ++i) {
      const Mask xp = base_flats_in_x[i];
      const bool inside = host.rank(t | xp) == host.rank(xp);
      ok = inside == static_cast<bool>(forced[i]);
    }
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<Mask> QuasiIntersectionIn(const Matroid& m, Mask x, Mask y) {
  RequireFlats(m, x, y);
  return FindQuasiIntersection(m, m.flats_below(x), x, y);
}

std::vector<Mask> DLAnchors(const Matroid& m, Mask x, Mask y) {
  RequireFlats(m, x, y);
  const int gap = m.rank(x | y) - m.rank(x);
  std::vector<Mask> forced;
  for (Mask xp : m.flats_below(x)) {
    if (m.rank(xp | y) - m.rank(xp) == gap) forced.push_back(xp);
  }
  std::vector<Mask> minimal;
  for (Mask f : forced) {  // sorted by rank, so subsets come first
    bool is_min = true;
    for (Mask g : minimal) is_min = is_min && !IsSubset(g, f);
    if (is_min) minimal.push_back(f);
  }
  return minimal;
}

std::optional<DLTag> DLPairFilter(const Matroid& m, Mask x, Mask y) {
  RequireFlats(m, x, y);
  const int k = m.rank();
  if (m.rank(x) == 2) return DLTag::kLine;
  if (m.rank(y) == k - 1) return DLTag::kHyperplane;
  if ((x & y) == 0 && m.is_circuit(x | y)) return DLTag::kCircuitUnion;
  if (m.is_sparse_paving() && (x & y) == 0 && m.rank(x) + m.rank(y) == k + 1 &&
      !(Size(x) == k && m.rank(x) == k - 1)) {
    return DLTag::kRankSum;
  }
  return std::nullopt;
}

namespace {

class DLSearch {
 public:
  explicit DLSearch(const DLOptions& o) : opt_(o) {}

  // Top-level pass; fills the report.
  DLResult Run(const Matroid& m, int depth) {
    DLResult res;
    res.verdict = Check(m, depth, &res);
    return res;
  }

  Verdict Pair(const Matroid& m, Mask x, Mask y, int depth,
               DLPairReport* pr) {
    pr->x = x;
    pr->y = y;
    pr->depth_used = depth;
    if (Modular(m, x, y)) {
      pr->status = DLPairReport::Status::kModular;
      return Verdict::kTrue;
    }
    return CheckPair(m, x, y, depth, pr);
  }

 private:
  using Key = std::pair<int, std::vector<std::uint8_t>>;

  Verdict Memo(const Matroid& m, int depth) {
    Key key{depth, m.rank_table()};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Verdict v = Check(m, depth, nullptr);
    memo_.emplace(std::move(key), v);
    return v;
  }

  Verdict Check(const Matroid& m, int depth, DLResult* report) {
    const auto& flats = m.flats();
    std::vector<std::pair<Mask, Mask>> pairs;
    for (Mask x : flats) {
      for (Mask y : flats) {
        if (IsSubset(x, y) || IsSubset(y, x)) continue;
        pairs.emplace_back(x, y);
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [&m](auto a, auto b) {
      const int ra = m.rank(a.first) + m.rank(a.second);
      const int rb = m.rank(b.first) + m.rank(b.second);
      if (ra != rb) return ra < rb;
      return a < b;
    });
    Verdict overall = Verdict::kTrue;
    for (auto [x, y] : pairs) {
      DLPairReport pr;
      pr.x = x;
      pr.y = y;
      pr.depth_used = depth;
      if (Modular(m, x, y)) {
        pr.status = DLPairReport::Status::kModular;
        if (report && opt_.report_all_pairs) report->pairs.push_back(pr);
        continue;
      }
      if (opt_.use_filters) {
        if (auto tag = DLPairFilter(m, x, y)) {
          pr.status = DLPairReport::Status::kGuaranteed;
          pr.tag = tag;
          if (report && opt_.report_all_pairs) report->pairs.push_back(pr);
          continue;
        }
      }
      const Verdict v = CheckPair(m, x, y, depth, &pr);
      if (report) report->pairs.push_back(pr);
      if (v == Verdict::kFalse) {
        if (report) report->refuting_pair = pr;
        return Verdict::kFalse;
      }
      if (v == Verdict::kInconclusive) overall = Verdict::kInconclusive;
    }
    return overall;
  }

  Verdict CheckPair(const Matroid& m, Mask x, Mask y, int depth,
                    DLPairReport* pr) {
    const std::vector<Mask> below = m.flats_below(x);
    bool unsure = false;
    if (auto t = FindQuasiIntersection(m, below, x, y)) {
      const Verdict v = depth == 1 ? Verdict::kTrue : Memo(m, depth - 1);
      if (v == Verdict::kTrue) {
        pr->status = DLPairReport::Status::kWitnessInGround;
        pr->witness = *t;
        return Verdict::kTrue;
      }
      unsure = unsure || v == Verdict::kInconclusive;
    }
    if (m.size() + 1 <= kMaxPoints) {
      CutEnumerator cuts(m, DLAnchors(m, x, y), opt_.budget);
      while (auto cut = cuts.Next()) {
        const Matroid ext = ExtendByPoint(m, *cut).result;
        auto t = FindQuasiIntersection(ext, below, x, y);
        if (!t) continue;
        const Verdict v = depth == 1 ? Verdict::kTrue : Memo(ext, depth - 1);
        if (v == Verdict::kTrue) {
          pr->status = DLPairReport::Status::kWitnessByExtension;
          pr->witness = *t;
          pr->cut_generators = cut->minimal();
          return Verdict::kTrue;
        }
        unsure = unsure || v == Verdict::kInconclusive;
      }
      unsure = unsure || cuts.truncated();
    } else {
      unsure = true;
    }
    pr->status = unsure ? DLPairReport::Status::kInconclusive
                        : DLPairReport::Status::kRefuted;
    return unsure ? Verdict::kInconclusive : Verdict::kFalse;
  }

  DLOptions opt_;
  std::map<Key, Verdict> memo_;
};

}  // namespace

DLResult IsKDL(const Matroid& m, int depth, const DLOptions& options) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  DLSearch search(options);
  return search.Run(m, depth);
}

DLPairReport CheckDLPair(const Matroid& m, Mask x, Mask y, int depth,
                         const DLOptions& options) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  RequireFlats(m, x, y);
  DLSearch search(options);
  DLPairReport pr;
  search.Pair(m, x, y, depth, &pr);
  return pr;
}

bool IsMatroidAKExtension(const Matroid& base, const Matroid& ext, Mask x,
                          Mask y) {
  const Mask z = Bit(base.size());
  if (ext.rank(x | z) != ext.rank(x)) return false;
  const int rz = ext.rank(z);
  const int ry = base.rank(y);
  for (Mask xp : base.flats_below(x)) {
    if (ext.rank(xp | z) - rz != base.rank(xp | y) - ry) return false;
  }
  return true;
}

RankFourEquivalence DLAKEquivRank4(const Matroid& m, Mask x, Mask y,
                                   std::int64_t budget) {
  if (m.rank() != 4) throw std::invalid_argument("matroid must have rank 4");
  RequireFlats(m, x, y);
  if (m.rank(x) != 3 || m.rank(y) != 2 || Modular(m, x, y)) {
    throw std::invalid_argument(
        "expected a nonmodular (hyperplane, line) pair of flats");
  }
  RankFourEquivalence out;
  const std::vector<Mask> below = m.flats_below(x);

  out.dl_exists = FindQuasiIntersection(m, below, x, y).has_value();
  if (!out.dl_exists) {
    CutEnumerator cuts(m, DLAnchors(m, x, y), budget);
    while (auto cut = cuts.Next()) {
      if (FindQuasiIntersection(ExtendByPoint(m, *cut).result, below, x, y)) {
        out.dl_exists = true;
        break;
      }
    }
    if (!out.dl_exists && cuts.truncated()) {
      throw std::runtime_error("cut budget exhausted in the DL search");
    }
  }

  // AK side: the point must lie on x and on every line X' of x whose span
  // with y is a hyperplane.
  std::vector<Mask> must = {x};
  for (Mask xp : m.flats(2)) {
    if (IsSubset(xp, x) && m.rank(xp | y) == 3) must.push_back(xp);
  }
  CutEnumerator cuts(m, must, budget);
  while (auto cut = cuts.Next()) {
    if (IsMatroidAKExtension(m, ExtendByPoint(m, *cut).result, x, y)) {
      out.ak_matroid_exists = true;
      break;
    }
  }
  if (!out.ak_matroid_exists && cuts.truncated()) {
    throw std::runtime_error("cut budget exhausted in the AK search");
  }
  return out;
}

}  // namespace matext
