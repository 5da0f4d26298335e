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


#include "matext/ak.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "matext/extension.h"

namespace matext {

std::string ToString(StepKind k) { return k == StepKind::kAk ? "AK" : "CI"; }

std::string ToString(AKTag t) {
  switch (t) {
    case AKTag::kModular: return "MODULAR";
    case AKTag::kXYCircuit: return "XY_CIRCUIT";
    case AKTag::kXLine: return "X_LINE";
    case AKTag::kYHyperplane: return "Y_HYPERPLANE";
    case AKTag::kTwoHyperplanes: return "TWO_HYPERPLANES";
    case AKTag::kSparseRankSum: return "SPARSE_RANK_SUM";
    case AKTag::kGeResolved: return "GE_RESOLVED";
  }
  return "?";
}

std::string ToString(AKPairReport::Status s) {
  switch (s) {
    case AKPairReport::Status::kModular: return "modular";
    case AKPairReport::Status::kGuaranteed: return "guaranteed";
    case AKPairReport::Status::kLpFeasible: return "lp_feasible";
    case AKPairReport::Status::kLpInfeasible: return "lp_infeasible";
  }
  return "?";
}

void ValidateSequence(const Matroid& m, const AKSequence& seq) {
  ValidateSequence(m.size(), seq);
}

void ValidateSequence(int n_points, const AKSequence& seq) {
  const int total = n_points + static_cast<int>(seq.size());
  if (total > 14) {
    throw std::invalid_argument("sequence needs " + std::to_string(total) +
                                " points; the LP supports at most 14");
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Mask avail = FullMask(n_points + static_cast<int>(i));
    const AKStep& s = seq[i];
    if (s.x == 0 || s.y == 0) {
      throw std::invalid_argument("step " + std::to_string(i) +
                                  " has an empty set");
    }
    if (!IsSubset(s.x, avail) || !IsSubset(s.y, avail)) {
      throw std::invalid_argument("step " + std::to_string(i) +
                                  " references a point not yet introduced");
    }
  }
}

bool GeHeuristic(const Matroid& m, Mask x, Mask y, int budget,
                 std::vector<std::vector<Mask>>* chain) {
  Matroid cur = m;
  std::vector<std::vector<Mask>> steps;
  for (int round = 0;; ++round) {
    const Mask cx = cur.closure(x);
    const Mask cy = cur.closure(y);
    if (IsModularPair(cur, cx, cy)) {
      if (chain) *chain = std::move(steps);
      return true;
    }
    if (round >= budget || cur.size() >= kMaxPoints) return false;
    const ModularCut cut = GenerateCut(cur, {cx, cy});
    if (cut.is_loop_cut()) return false;
    steps.push_back({cx, cy});
    cur = ExtendByPoint(cur, cut).result;
  }
}

std::optional<AKTag> AkPairFilter(const Matroid& m, Mask x, Mask y,
                                  bool use_ge, int ge_budget) {
  x = m.closure(x);
  y = m.closure(y);
  if (IsModularPair(m, x, y)) return AKTag::kModular;
  const int k = m.rank();
  const int rx = m.rank(x);
  const int ry = m.rank(y);
  const bool disjoint = (x & y) == 0;
  if (disjoint && m.is_circuit(x | y)) return AKTag::kXYCircuit;
  if (rx == 2) return AKTag::kXLine;
  if (disjoint && ry == k - 1) return AKTag::kYHyperplane;
  if (rx == k - 1 && ry == k - 1) return AKTag::kTwoHyperplanes;
  if (m.is_sparse_paving() && disjoint && rx + ry == k + 1 &&
      !(Size(x) == k && rx == k - 1)) {
    return AKTag::kSparseRankSum;
  }
  if (use_ge && GeHeuristic(m, x, y, ge_budget)) return AKTag::kGeResolved;
  return std::nullopt;
}

namespace {

// Auxiliary point defined by an AK1 or CI1 row (f(az) - f(a)), or -1.
int DefinedPoint(const Row& r) {
  if (r.tag != RowTag::kAk1 && r.tag != RowTag::kCi1) return -1;
  if (r.terms.size() != 2) return -1;
  const Term& a = r.terms[0].coef > 0 ? r.terms[0] : r.terms[1];
  const Term& b = r.terms[0].coef > 0 ? r.terms[1] : r.terms[0];
  const Mask diff = static_cast<Mask>(a.var) & ~static_cast<Mask>(b.var);
  if (Size(diff) != 1) return -1;
  return LowestPoint(diff);
}

void EnsureUnused(const PolymatroidLP& lp, int z) {
  if (z < 0 || z >= lp.n_points()) {
    throw std::invalid_argument("auxiliary point out of range");
  }
  for (const Row& r : lp.explicit_rows()) {
    if (DefinedPoint(r) == z) {
      throw std::logic_error("point " + std::to_string(z) +
                             " already serves another step");
    }
  }
}

int Var(Mask a) { return static_cast<int>(a); }

}  // namespace

void AkConstraints(PolymatroidLP& lp, int z, Mask x, Mask y,
                   const std::vector<Mask>& subsets_of_x) {
  EnsureUnused(lp, z);
  const Mask zb = Bit(z);
  if ((x | y) & zb) throw std::invalid_argument("z inside its own sets");
  lp.AddRow({{Var(x | zb), 1}, {Var(x), -1}}, Sense::kEq, 0, RowTag::kAk1);
  for (Mask s : subsets_of_x) {
    if (!IsSubset(s, x)) throw std::invalid_argument("not a subset of x");
    lp.AddRow({{Var(s | zb), 1}, {Var(zb), -1}, {Var(s | y), -1}, {Var(y), 1}},
              Sense::kEq, 0, RowTag::kAk2);
  }
}

void CiConstraints(PolymatroidLP& lp, int z, Mask x, Mask y) {
  EnsureUnused(lp, z);
  const Mask zb = Bit(z);
  if ((x | y) & zb) throw std::invalid_argument("z inside its own sets");
  lp.AddRow({{Var(x | zb), 1}, {Var(x), -1}}, Sense::kEq, 0, RowTag::kCi1);
  lp.AddRow({{Var(y | zb), 1}, {Var(y), -1}}, Sense::kEq, 0, RowTag::kCi1);
  lp.AddRow({{Var(zb), 1}, {Var(x), -1}, {Var(y), -1}, {Var(x | y), 1}},
            Sense::kEq, 0, RowTag::kCi2);
}

namespace {

// Subsets of x for the second AK condition. Inside the matroid a subset and
// its closure give the same row, so one representative per closure is kept.
std::vector<Mask> AkSubsets(const Matroid& m, Mask x, bool all) {
  std::vector<Mask> out;
  if (all || !IsSubset(x, m.ground())) {
    ForEachSubset(x, [&](Mask s) {
      if (s) out.push_back(s);
    });
    std::reverse(out.begin(), out.end());
    return out;
  }
  std::set<Mask> seen;
  ForEachSubset(x, [&](Mask s) {
    if (!s) return;
    const Mask c = m.closure(s);
    if (seen.insert(c).second) out.push_back(c & x);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Mask ForcedClosure(const Matroid& m, const AKSequence& seq, Mask a) {
  const int n = m.size();
  const Mask q = m.ground();
  while (true) {
    Mask b = a | m.closure(a & q);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const AKStep& s = seq[i];
      const Mask zb = Bit(n + static_cast<int>(i));
      if (b & zb) continue;
      if (IsSubset(s.x, b)) {
        b |= zb;
      } else if (s.kind == StepKind::kCi) {
        if (IsSubset(s.y, b)) b |= zb;
      } else if (IsSubset(s.x, q) && IsSubset(s.y, q) && (b & s.x) &&
                 MutualRank(m, b & s.x, s.y) == MutualRank(m, s.x, s.y)) {
        b |= zb;
      }
    }
    if (b == a) return a;
    a = b;
  }
}

namespace {

struct BuildCounts {
  std::size_t pin_rows = 0;
  std::size_t closure_rows = 0;
  std::vector<std::size_t> per_step;
};

PolymatroidLP Build(const Matroid& m, const AKSequence& seq,
                    const SequenceLPOptions& options, BuildCounts* counts) {
  ValidateSequence(m, seq);
  const int n = m.size();
  const int total = n + static_cast<int>(seq.size());
  PolymatroidLP lp(total);
  lp.AddShannonBlock();
  std::size_t before = lp.num_rows();
  PinMatroid(lp, m);
  if (counts) counts->pin_rows = lp.num_rows() - before;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const AKStep& s = seq[i];
    const int z = n + static_cast<int>(i);
    before = lp.num_rows();
    if (s.kind == StepKind::kAk) {
      AkConstraints(lp, z, s.x, s.y,
                    AkSubsets(m, s.x, options.ak2_all_subsets));
    } else {
      CiConstraints(lp, z, s.x, s.y);
    }
    if (counts) counts->per_step.push_back(lp.num_rows() - before);
  }
  if (options.closure_rows && !seq.empty()) {
    before = lp.num_rows();
    const Mask q = m.ground();
    for (Mask a = 1; a <= FullMask(total); ++a) {
      if (IsSubset(a, q)) continue;
      const Mask b = ForcedClosure(m, seq, a);
      if (b != a) {
        lp.AddRow({{Var(a), 1}, {Var(b), -1}}, Sense::kEq, 0,
                  RowTag::kClosure);
      }
    }
    if (counts) counts->closure_rows = lp.num_rows() - before;
  }
  return lp;
}

}  // namespace

PolymatroidLP BuildSequenceLP(const Matroid& m, const AKSequence& seq,
                              const SequenceLPOptions& options) {
  return Build(m, seq, options, nullptr);
}

SequenceReport CheckSequence(const Matroid& m, const AKSequence& seq,
                             const SequenceLPOptions& options) {
  BuildCounts counts;
  const PolymatroidLP lp = Build(m, seq, options, &counts);
  SequenceReport rep;
  rep.shannon_rows = lp.shannon_rows();
  rep.pin_rows = counts.pin_rows;
  rep.closure_rows = counts.closure_rows;
  rep.rows_per_step = counts.per_step;
  rep.outcome = Solve(lp);
  return rep;
}

std::vector<std::vector<int>> Automorphisms(const Matroid& m,
                                            std::size_t limit) {
  const int n = m.size();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  // Checks every subset of {0..i} containing i.
  auto consistent = [&](int i) {
    bool ok = true;
    ForEachSubset(FullMask(i), [&](Mask s) {
      if (!ok) return;
      const Mask a = s | Bit(i);
      Mask img = 0;
      for (int p : Points(a)) img |= Bit(perm[p]);
      if (m.rank(a) != m.rank(img)) ok = false;
    });
    return ok;
  };
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  out.push_back(identity);
  auto rec = [&](auto&& self, int i) -> void {
    if (out.size() >= limit) return;
    if (i == n) {
      if (perm != identity) out.push_back(perm);
      return;
    }
    for (int j = 0; j < n && out.size() < limit; ++j) {
      if (used[j]) continue;
      perm[i] = j;
      if (!consistent(i)) continue;
      used[j] = true;
      self(self, i + 1);
      used[j] = false;
    }
    perm[i] = -1;
  };
  rec(rec, 0);
  return out;
}

namespace {

using Pair = std::pair<Mask, Mask>;

std::vector<Pair> NonmodularFlatPairs(const Matroid& m) {
  std::vector<Pair> out;
  for (Mask x : m.flats()) {
    for (Mask y : m.flats()) {
      if (x != y && !IsModularPair(m, x, y)) out.push_back({x, y});
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const Pair& a, const Pair& b) {
    const int ra = m.rank(a.first) + m.rank(a.second);
    const int rb = m.rank(b.first) + m.rank(b.second);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  return out;
}

Mask Apply(const std::vector<int>& perm, Mask a) {
  Mask out = 0;
  for (int p : Points(a)) out |= Bit(perm[p]);
  return out;
}

class Searcher {
 public:
  Searcher(const Matroid& m, const AKOptions& o) : m_(m), o_(o) {}

  AKResult DepthOne() {
    AKResult res;
    const bool ci = o_.kind == StepKind::kCi;
    for (const Pair& p : NonmodularFlatPairs(m_)) {
      if (ci && p.first > p.second) continue;
      AKPairReport rep;
      rep.x = p.first;
      rep.y = p.second;
      if (o_.use_filters && !ci) {
        rep.tag = AkPairFilter(m_, p.first, p.second, o_.use_ge, o_.ge_budget);
      }
      if (rep.tag) {
        rep.status = AKPairReport::Status::kGuaranteed;
        res.pairs.push_back(rep);
        continue;
      }
      base_.push_back(p);
      if (res.verdict == Verdict::kFalse && !o_.scan_all_pairs) continue;
      if (OutOfBudget()) {
        res.truncated = true;
        continue;
      }
      AKSequence seq{{o_.kind, p.first, p.second, ""}};
      LPOutcome out = SolveSeq(seq);
      if (out.status == LPStatus::kInfeasible) {
        rep.status = AKPairReport::Status::kLpInfeasible;
        if (res.verdict != Verdict::kFalse) {
          res.verdict = Verdict::kFalse;
          res.refutation = seq;
          res.certificate = std::move(out);
        }
      } else {
        rep.status = AKPairReport::Status::kLpFeasible;
      }
      res.pairs.push_back(rep);
    }
    if (res.verdict != Verdict::kFalse && res.truncated) {
      res.verdict = Verdict::kInconclusive;
    }
    res.lps_solved = lps_;
    return res;
  }

  // Deeper levels; `res` holds the depth-one result.
  void Deepen(int max_depth, AKResult& res) {
    if (res.verdict == Verdict::kFalse) return;
    const auto group = Automorphisms(m_);
    for (int d = 2; d <= max_depth && !res.refutation; ++d) {
      if (m_.size() + d > 14) {
        truncated_ = true;
        break;
      }
      if (Evaluate(Candidates(d, group), res) || truncated_) break;
    }
    res.truncated = res.truncated || truncated_;
    if (res.verdict != Verdict::kFalse) {
      res.verdict = res.truncated ? Verdict::kInconclusive : Verdict::kTrue;
    }
    res.lps_solved = lps_;
  }

 private:
  bool OutOfBudget() {
    if (lps_ >= o_.budget) truncated_ = true;
    return truncated_;
  }

  LPOutcome SolveSeq(const AKSequence& seq) {
    PolymatroidLP lp = BuildSequenceLP(m_, seq);
    ++lps_;
    LPOutcome out = Solve(lp);
    if (o_.on_lp) o_.on_lp(seq, out.status);
    return out;
  }

  // Sequences of length d: d-1 base pairs whose points are forced into the
  // closure of a flat F, then AK(F + all auxiliary points, Y). Flats are
  // taken up to automorphism and ordered by the number of sequences they
  // generate.
  std::vector<AKSequence> Candidates(
      int d, const std::vector<std::vector<int>>& group) const {
    const int k = m_.rank();
    struct Plan {
      std::size_t cost = 0;
      Mask f = 0;
      std::vector<int> forced;
      std::vector<Mask> ys;
    };
    std::vector<Plan> plans;
    for (Mask f : m_.flats()) {
      const int rf = m_.rank(f);
      if (rf < 1 || rf >= k) continue;
      bool rep = true;
      for (const auto& g : group) {
        if (Apply(g, f) < f) {
          rep = false;
          break;
        }
      }
      if (!rep) continue;
      Plan p;
      p.f = f;
      for (std::size_t i = 0; i < base_.size(); ++i) {
        const auto& [x, y] = base_[i];
        if (IsSubset(x, f) ||
            (o_.kind == StepKind::kCi && IsSubset(y, f)) ||
            ((f & x) && MutualRank(m_, f & x, y) == MutualRank(m_, x, y))) {
          p.forced.push_back(static_cast<int>(i));
        }
      }
      for (Mask y : m_.flats()) {
        const int ry = m_.rank(y);
        if (ry < 1 || ry > k - 2 || IsSubset(y, f) || IsModularPair(m_, f, y)) {
          continue;
        }
        p.ys.push_back(y);
      }
      std::stable_sort(p.ys.begin(), p.ys.end(), [&](Mask a, Mask b) {
        return std::make_pair(m_.rank(a), a) < std::make_pair(m_.rank(b), b);
      });
      p.cost = Binomial(p.forced.size(), d - 1) * p.ys.size();
      if (p.cost > 0) plans.push_back(std::move(p));
    }
    std::stable_sort(plans.begin(), plans.end(),
                     [](const Plan& a, const Plan& b) {
                       return std::make_pair(a.cost, a.f) <
                              std::make_pair(b.cost, b.f);
                     });
    std::vector<AKSequence> out;
    const Mask w = FullMask(m_.size() + d - 1) & ~m_.ground();
    for (const Plan& p : plans) {
      const int total = static_cast<int>(p.forced.size());
      std::vector<int> pick(d - 1);
      for (int i = 0; i < d - 1; ++i) pick[i] = i;
      while (true) {
        AKSequence prefix;
        for (int i : pick) {
          const auto& [x, y] = base_[p.forced[i]];
          prefix.push_back({o_.kind, x, y, ""});
        }
        for (Mask y : p.ys) {
          AKSequence seq = prefix;
          seq.push_back({o_.kind, p.f | w, y, ""});
          out.push_back(std::move(seq));
        }
        // Next combination in lexicographic order.
        int i = d - 2;
        while (i >= 0 && pick[i] == total - (d - 1) + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < d - 1; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return out;
  }

  static std::size_t Binomial(std::size_t n, int r) {
    if (r < 0 || static_cast<std::size_t>(r) > n) return 0;
    std::size_t c = 1;
    for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
    return c;
  }

  // Solves candidates in list order, in batches across threads; the first
  // infeasible one in list order wins. Returns true when one was found.
  bool Evaluate(const std::vector<AKSequence>& cands, AKResult& res) {
    const std::size_t threads = static_cast<std::size_t>(std::max(1, o_.threads));
    for (std::size_t start = 0; start < cands.size(); start += threads) {
      if (OutOfBudget()) return false;
      const std::size_t left = static_cast<std::size_t>(o_.budget - lps_);
      const std::size_t end = std::min({cands.size(), start + threads, start + left});
      std::vector<LPOutcome> outs(end - start);
      auto work = [&](std::size_t i) {
        outs[i - start] = Solve(BuildSequenceLP(m_, cands[i]));
      };
      if (end - start == 1) {
        work(start);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t i = start; i < end; ++i) pool.emplace_back(work, i);
        for (auto& t : pool) t.join();
      }
      for (std::size_t i = start; i < end; ++i) {
        ++lps_;
        LPOutcome& out = outs[i - start];
        if (o_.on_lp) o_.on_lp(cands[i], out.status);
        if (out.status == LPStatus::kInfeasible) {
          res.verdict = Verdict::kFalse;
          res.refutation = cands[i];
          res.certificate = std::move(out);
          return true;
        }
      }
    }
    return false;
  }

  const Matroid& m_;
  AKOptions o_;
  std::vector<Pair> base_;
  std::int64_t lps_ = 0;
  bool truncated_ = false;
};

}  // namespace

AKResult CheckOneAk(const Matroid& m, const AKOptions& options) {
  Searcher s(m, options);
  return s.DepthOne();
}

AKResult SearchRefutation(const Matroid& m, int max_depth,
                          const AKOptions& options) {
  Searcher s(m, options);
  AKResult res = s.DepthOne();
  if (max_depth >= 2) s.Deepen(max_depth, res);
  return res;
}

AKResult IsKAk(const Matroid& m, int depth, const AKOptions& options) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  return SearchRefutation(m, depth, options);
}

}  // namespace matext
