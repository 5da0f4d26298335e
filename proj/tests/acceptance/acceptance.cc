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


// Acceptance suite. Prints one line per criterion:
//   criterion <n> PASS|FAIL|SKIP <title>: <measurement> [<tolerance>]
// Usage: acceptance [criterion numbers...]; no arguments runs all. Exit
// status is nonzero when any selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "matext/ak.h"
#include "matext/catalog.h"
#include "matext/dl.h"
#include "matext/extension.h"
#include "matext/lp.h"
#include "matext/lp_io.h"
#include "matext/psm.h"
#include "matext/secret_sharing.h"

namespace matext {
namespace {

enum class Outcome { kPass, kFail, kSkip };

struct Line {
  Outcome outcome = Outcome::kFail;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fixed(double x, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

Line Pass(std::string d) { return {Outcome::kPass, std::move(d)}; }
Line Fail(std::string d) { return {Outcome::kFail, std::move(d)}; }
Line Judge(bool ok, std::string d) { return {ok ? Outcome::kPass : Outcome::kFail, std::move(d)}; }

// ---- 1 ----
Line ConstructionChecks() {
  const auto start = Clock::now();
  const std::vector<std::vector<int>> rows = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  const std::vector<std::vector<int>> cols = {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
  std::vector<Mask> ch;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 1) continue;
      ch.push_back(FromPoints(rows[i]) | FromPoints(cols[j]));
    }
  }
  const Matroid t3 = Matroid::SparsePaving(9, 5, ch);
  const Matroid isd = SelfDual510();
  const bool ok = VerifyMatroidAxioms(t3).ok && t3 == TicTacToe() &&
                  VerifyMatroidAxioms(isd).ok && isd.is_sparse_paving() &&
                  Dual(isd) == isd && Delete(isd, Bit(9)).matroid == t3 &&
                  Contract(isd, Bit(9)).matroid == Dual(t3) &&
                  Dual(t3) == TicTacToeDual();
  const double t = Seconds(start);
  return Judge(ok && t < 1.0,
               std::string(ok ? "all identities hold" : "identity failed") +
                   " in " + Fixed(t, 3) + " s [exact equality; < 1 s]");
}

// ---- 2 ----
Line IsdSequenceRefutation() {
  const auto start = Clock::now();
  const Matroid isd = SelfDual510();
  const int a = 10, b = 11;
  const AKSequence seq = {
      {StepKind::kAk, FromPoints({4, 5, 7, 8, 9}), FromPoints({3, 6}), "alpha"},
      {StepKind::kAk, FromPoints({1, 2, 4, 5, 9}), FromPoints({0, 3}), "beta"},
      {StepKind::kAk, FromPoints({2, 5, 8, 9, a, b}), FromPoints({1, 7}), "gamma"}};
  const SequenceReport r = CheckSequence(isd, seq);
  std::string why;
  const bool cert = r.outcome.status == LPStatus::kInfeasible &&
                    CheckCertificate(BuildSequenceLP(isd, seq), r.outcome, &why);
  const double t = Seconds(start);
  return Judge(cert && t < 600,
               "status " + ToString(r.outcome.status) + ", certificate " +
                   (cert ? "valid" : "invalid " + why) + ", " + Fixed(t, 1) +
                   " s [exact Farkas certificate; < 600 s]");
}

// ---- 3 ----
Line IsdTwoDl() {
  const auto start = Clock::now();
  DLOptions o;
  o.budget = std::int64_t{1} << 40;
  const DLResult r = IsKDL(SelfDual510(), 2, o);
  const double t = Seconds(start);
  return Judge(r.verdict == Verdict::kTrue && t < 1800,
               "verdict " + ToString(r.verdict) + ", " +
                   std::to_string(r.pairs.size()) + " pairs needed work, " +
                   Fixed(t, 1) + " s [true, exhaustive; < 1800 s]");
}

// ---- 4 ----
Line DualRefutation() {
  const auto start = Clock::now();
  const Matroid m = TicTacToeDual();
  const AKResult r = SearchRefutation(m, 3);
  bool cert = false;
  std::string seq;
  if (r.refutation) {
    cert = r.certificate.status == LPStatus::kInfeasible &&
           CheckCertificate(BuildSequenceLP(m, *r.refutation), r.certificate);
    for (const AKStep& s : *r.refutation) {
      seq += " AK(" + ToString(s.x) + "," + ToString(s.y) + ")";
    }
  }
  return Judge(r.verdict == Verdict::kFalse && cert,
               "verdict " + ToString(r.verdict) + ", sequence" + seq +
                   ", certificate " + (cert ? "valid" : "missing") + ", " +
                   std::to_string(r.lps_solved) + " LPs, " + Fixed(Seconds(start), 1) +
                   " s [infeasible sequence of length <= 3 with certificate]");
}

// ---- 5 ----
Line FilterSpeedup() {
  const Matroid m = TicTacToe();
  AKOptions off;
  off.use_filters = false;
  off.scan_all_pairs = true;
  off.budget = std::int64_t{1} << 40;
  AKOptions on;
  on.use_filters = true;
  on.use_ge = true;
  on.scan_all_pairs = true;
  on.budget = std::int64_t{1} << 40;
  auto t0 = Clock::now();
  const AKResult slow = CheckOneAk(m, off);
  const double ts = Seconds(t0);
  t0 = Clock::now();
  const AKResult fast = CheckOneAk(m, on);
  const double tf = Seconds(t0);
  const double ratio = ts / std::max(tf, 1e-9);
  return Judge(slow.verdict == fast.verdict && ratio >= 10,
               "unfiltered " + Fixed(ts, 2) + " s (" + std::to_string(slow.lps_solved) +
                   " LPs), filtered " + Fixed(tf, 3) + " s (" +
                   std::to_string(fast.lps_solved) + " LPs), ratio " + Fixed(ratio, 1) +
                   ", verdicts " + ToString(slow.verdict) + "/" + ToString(fast.verdict) +
                   " [ratio >= 10, equal verdicts]");
}

// ---- 6 ----
Line RankFour() {
  const auto start = Clock::now();
  const Matroid v = Vamos();
  int pairs = 0, equal = 0;
  for (Mask x : v.flats(3)) {
    for (Mask y : v.flats(2)) {
      if (IsSubset(y, x) || IsModularPair(v, x, y)) continue;
      ++pairs;
      const RankFourEquivalence e = DLAKEquivRank4(v, x, y);
      if (e.dl_exists == e.ak_matroid_exists) ++equal;
    }
  }
  const double t = Seconds(start);
  return Judge(pairs > 0 && equal == pairs && t < 60,
               std::to_string(equal) + "/" + std::to_string(pairs) +
                   " (hyperplane, line) pairs agree, " + Fixed(t, 2) +
                   " s [all agree; < 60 s]");
}

// ---- 7 ----
Line GuaranteeSoundness() {
  const auto start = Clock::now();
  int matroids = 0, tagged = 0, violations = 0;
  std::map<std::string, int> by_tag;
  for (std::uint64_t seed = 0; matroids < 100; ++seed) {
    const int n = 6 + static_cast<int>(seed % 4);
    const int k = 3 + static_cast<int>((seed / 4) % 2);
    const Matroid m = RandomSparsePaving(n, k, seed, 2 + static_cast<int>(seed % 7));
    ++matroids;
    for (Mask x : m.flats()) {
      for (Mask y : m.flats()) {
        if (x == y || IsModularPair(m, x, y)) continue;
        const auto tag = AkPairFilter(m, x, y);
        if (!tag || *tag == AKTag::kModular || *tag == AKTag::kGeResolved) continue;
        ++tagged;
        ++by_tag[ToString(*tag)];
        const bool lp_ok =
            CheckSequence(m, {{StepKind::kAk, x, y, ""}}).outcome.status ==
            LPStatus::kFeasible;
        bool dl_ok = true;
        if (!IsSubset(x, y) && !IsSubset(y, x)) {
          const auto st = CheckDLPair(m, x, y, 1).status;
          dl_ok = st == DLPairReport::Status::kWitnessInGround ||
                  st == DLPairReport::Status::kWitnessByExtension;
        }
        if (!lp_ok || !dl_ok) ++violations;
      }
    }
  }
  std::string tags;
  for (const auto& [t, c] : by_tag) tags += " " + t + "=" + std::to_string(c);
  return Judge(violations == 0 && tagged > 0,
               std::to_string(matroids) + " matroids, " + std::to_string(tagged) +
                   " tagged pairs (" + tags.substr(tags.empty() ? 0 : 1) + "), " +
                   std::to_string(violations) + " violations, " +
                   Fixed(Seconds(start), 1) + " s [zero violations]");
}

// ---- 8 ----
Line LpProperties() {
  const auto start = Clock::now();
  int implied = 0, total = 0, roundtrips = 0;
  bool ok = true;
  auto roundtrip = [&](const PolymatroidLP& lp, const LPOutcome& out) {
    const PolymatroidLP lp2 = LPFromJson(LPToJson(lp));
    const LPOutcome out2 = OutcomeFromJson(OutcomeToJson(out));
    const bool good = CheckCertificate(lp2, out2) &&
                      OutcomeToJson(out2) == OutcomeToJson(out);
    ok = ok && good;
    ++roundtrips;
  };
  for (int n = 1; n <= 4; ++n) {
    const Mask full = FullMask(n);
    SolveOptions exact;
    exact.exact_only = true;
    for (Mask a = 0; a <= full; ++a) {
      for (Mask b = 0; b <= full; ++b) {
        std::vector<std::pair<int, Rational>> obj;
        auto add = [&](Mask s, int c) {
          if (s) obj.push_back({static_cast<int>(s), c});
        };
        if (IsSubset(a, b) && a != b) {
          add(b, 1);
          add(a, -1);
        } else if (a < b && !IsSubset(a, b) && !IsSubset(b, a)) {
          add(a, 1);
          add(b, 1);
          add(a | b, -1);
          add(a & b, -1);
        } else {
          continue;
        }
        PolymatroidLP lp(n);
        lp.AddShannonBlock();
        lp.AddRow({{static_cast<int>(full), 1}}, Sense::kLe, 1, RowTag::kRankPin);
        lp.SetObjective(PolymatroidLP::Goal::kMinimize, obj);
        const LPOutcome out = Solve(lp, exact);
        ++total;
        if (out.status == LPStatus::kOptimal && out.value == 0) ++implied;
        roundtrip(lp, out);
      }
    }
  }
  const Matroid m = TicTacToeDual();
  const AKSequence seq = {{StepKind::kAk, 0b000011011, 0b011000000, ""},
                          {StepKind::kAk, 0b000110110, 0b110000000, ""},
                          {StepKind::kAk, 0b11000000111, 0b000101000, ""}};
  const PolymatroidLP lp = BuildSequenceLP(m, seq);
  const LPOutcome first = Solve(lp);
  const std::string ref = OutcomeToJson(first);
  int same = 0;
  for (int i = 0; i < 10; ++i) same += OutcomeToJson(Solve(lp)) == ref;
  roundtrip(lp, first);
  return Judge(ok && implied == total && same == 10,
               std::to_string(implied) + "/" + std::to_string(total) +
                   " monotone/submodular inequalities on n <= 4 implied by the "
                   "elemental block, " + std::to_string(same) +
                   "/10 identical repeated solves, " + std::to_string(roundtrips) +
                   " certificate round trips " + (ok ? "valid" : "FAILED") + ", " +
                   Fixed(Seconds(start), 1) + " s [all exact]");
}

// ---- 9 ----
Line MutualRankOfAuxiliary() {
  const auto start = Clock::now();
  int feasible = 0, exact = 0;
  for (const Matroid& m : {TicTacToeDual(), Vamos(), RandomSparsePaving(8, 3, 3)}) {
    for (Mask x : m.flats()) {
      for (Mask y : m.flats()) {
        if (x == y || IsModularPair(m, x, y)) continue;
        const SequenceReport r = CheckSequence(m, {{StepKind::kAk, x, y, ""}});
        if (r.outcome.status != LPStatus::kFeasible) continue;
        ++feasible;
        if (r.outcome.point.size() > Bit(m.size()) &&
            r.outcome.point[Bit(m.size())] == MutualRank(m, x, y)) {
          ++exact;
        }
      }
    }
  }
  return Judge(feasible > 0 && exact == feasible,
               std::to_string(exact) + "/" + std::to_string(feasible) +
                   " feasible single-pair LPs have f(z) = r(X)+r(Y)-r(XY), " +
                   Fixed(Seconds(start), 1) + " s [exact equality]");
}

// ---- 10 ----
Line CensusBounds() {
  const char* env = std::getenv("MATEXT_CENSUS_DIR");
  const std::string dir = env ? env : "";
  if (dir.empty() || !std::filesystem::exists(dir)) {
    return {Outcome::kSkip,
            "the 8/9-point matroid census is not available (set "
            "MATEXT_CENSUS_DIR to a directory holding its catalog files); "
            "targets 52/45, 8/7, 38/33, 89/88 not evaluated"};
  }
  return Fail("census directory " + dir +
              " found, but no ingester for its format is implemented");
}

// ---- 11 ----
bool BruteForceDepthTwo(const Matroid& m) {
  for (const PseudoTriple& t : GetPsmTriples(m)) {
    CutEnumerator all(m, {}, std::int64_t{1} << 40);
    bool found = false;
    while (auto c = all.Next()) {
      if (!c->contains(t.x) || !c->contains(t.y) || !c->contains(t.z) ||
          c->contains(t.a)) {
        continue;
      }
      if (BaseCheckPsm(ExtendByPoint(m, *c).result)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Line Pseudomodularity() {
  const auto start = Clock::now();
  const Catalog c = Catalog::WithBuiltins();
  int builtins = 0, base_equal = 0;
  for (const std::string& n : c.Names()) {
    const Matroid m = c.Get(n);
    ++builtins;
    base_equal += BaseCheckPsm(m) == (RecursivePsm(m, 1).verdict == Verdict::kTrue);
  }
  int small = 0, agree = 0, refuted = 0;
  std::vector<Matroid> cases = {Vamos()};
  for (std::uint64_t seed = 0; seed < 14; ++seed) {
    cases.push_back(RandomSparsePaving(8, 4, seed, 4 + static_cast<int>(seed)));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    cases.push_back(RandomSparsePaving(7, 3, seed, 3 + static_cast<int>(seed)));
  }
  for (const Matroid& m : cases) {
    ++small;
    const PsmResult r = RecursivePsm(m, 2);
    const bool brute = BruteForceDepthTwo(m);
    agree += r.verdict != Verdict::kInconclusive && (r.verdict == Verdict::kTrue) == brute;
    refuted += !brute;
  }
  int uniform = 0, empty = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      ++uniform;
      empty += GetPsmTriples(Uniform(k, n)).empty();
    }
  }
  return Judge(base_equal == builtins && agree == small && empty == uniform,
               "base check = depth 1 on " + std::to_string(base_equal) + "/" +
                   std::to_string(builtins) + " built-ins; depth 2 matches brute "
                   "force on " + std::to_string(agree) + "/" + std::to_string(small) +
                   " matroids of <= 8 points (" + std::to_string(refuted) +
                   " refuted); " + std::to_string(empty) + "/" +
                   std::to_string(uniform) + " uniform matroids have no "
                   "pseudotriples; " + Fixed(Seconds(start), 1) + " s [exact agreement]");
}

// ---- 12 ----
Line Scope() {
  const bool vamos = IsKDL(Vamos(), 1).verdict == Verdict::kFalse;
  const bool uniform = IsKDL(Uniform(3, 6), 1).verdict == Verdict::kTrue;
  return Judge(vamos && uniform,
               "census-wide DL counts are not targets; the DL checker is "
               "validated by criteria 3, 6, 7 and 11 (spot check: Vamos not "
               "1-DL, U(3,6) 1-DL)");
}

}  // namespace
}  // namespace matext

int main(int argc, char** argv) {
  using namespace matext;
  const std::vector<std::pair<std::string, std::function<Line()>>> criteria = {
      {"T3 and ISD_5_10 construction", ConstructionChecks},
      {"three-step AK sequence refutes ISD_5_10", IsdSequenceRefutation},
      {"ISD_5_10 is 2-DL", IsdTwoDl},
      {"T3 dual refutation at depth 3", DualRefutation},
      {"filter speedup on T3", FilterSpeedup},
      {"rank-4 DL/AK equivalence on Vamos", RankFour},
      {"guarantee-lemma soundness", GuaranteeSoundness},
      {"LP engine properties", LpProperties},
      {"auxiliary point carries the mutual rank", MutualRankOfAuxiliary},
      {"census bound reproduction", CensusBounds},
      {"pseudomodularity checks", Pseudomodularity},
      {"census counts out of scope", Scope},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(static_cast<int>(i));
  }
  int failures = 0;
  for (int c : selected) {
    if (c < 1 || c > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << c << "\n";
      return 2;
    }
    Line line;
    try {
      line = criteria[c - 1].second();
    } catch (const std::exception& e) {
      line = {Outcome::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = line.outcome == Outcome::kPass   ? "PASS"
                      : line.outcome == Outcome::kSkip ? "SKIP"
                                                       : "FAIL";
    failures += line.outcome == Outcome::kFail;
    std::cout << "criterion " << c << " " << tag << " " << criteria[c - 1].first
              << ": " << line.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
