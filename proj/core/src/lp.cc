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

#include "matext/lp.h"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "lp_internal.h"

namespace matext {

std::string ToString(Sense s) {
  switch (s) {
    case Sense::kGe: return ">=";
    case Sense::kLe: return "<=";
    case Sense::kEq: return "=";
  }
  return "?";
}

Sense ParseSense(std::string_view s) {
  if (s == ">=") return Sense::kGe;
  if (s == "<=") return Sense::kLe;
  if (s == "=" || s == "==") return Sense::kEq;
  throw std::invalid_argument("unknown sense '" + std::string(s) + "'");
}

namespace {
constexpr std::pair<RowTag, const char*> kTagNames[] = {
    {RowTag::kShannon, "SHANNON"}, {RowTag::kRankPin, "RANK_PIN"},
    {RowTag::kAk1, "AK1"},         {RowTag::kAk2, "AK2'"},
    {RowTag::kCi1, "CI1"},         {RowTag::kCi2, "CI2"},
    {RowTag::kAccess, "ACCESS"},   {RowTag::kObjLink, "OBJ_LINK"},
    {RowTag::kClosure, "CLOSURE"},
};
}  // namespace

std::string ToString(RowTag t) {
  for (const auto& [tag, name] : kTagNames) {
    if (tag == t) return name;
  }
  return "?";
}

RowTag ParseRowTag(std::string_view s) {
  for (const auto& [tag, name] : kTagNames) {
    if (s == name) return tag;
  }
  throw std::invalid_argument("unknown row tag '" + std::string(s) + "'");
}

std::string ToString(LPStatus s) {
  switch (s) {
    case LPStatus::kFeasible: return "feasible";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

LPStatus ParseLPStatus(std::string_view s) {
  for (LPStatus st : {LPStatus::kFeasible, LPStatus::kInfeasible,
                      LPStatus::kOptimal, LPStatus::kUnbounded}) {
    if (s == ToString(st)) return st;
  }
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

std::size_t ShannonRowCount(int n) {
  if (n <= 0) return 0;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  return pairs * (n >= 2 ? (std::size_t{1} << (n - 2)) : 0) + n;
}

namespace {

// Inserts zero bits at positions i < j.
Mask Expand(Mask c, int i, int j) {
  const Mask low = c & (Bit(i) - 1);
  const Mask rest = c >> i;
  const Mask mid = rest & (Bit(j - i - 1) - 1);
  const Mask high = rest >> (j - i - 1);
  return low | (mid << (i + 1)) | (high << (j + 1));
}

}  // namespace

Row ShannonRow(int n, std::size_t index) {
  if (index >= ShannonRowCount(n)) throw std::out_of_range("shannon row index");
  Row r;
  r.sense = Sense::kGe;
  r.tag = RowTag::kShannon;
  const std::size_t per_pair = n >= 2 ? std::size_t{1} << (n - 2) : 0;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (index < pairs * per_pair) {
    std::size_t p = index / per_pair;
    const Mask c = static_cast<Mask>(index % per_pair);
    int i = 0;
    while (p >= static_cast<std::size_t>(n - 1 - i)) {
      p -= n - 1 - i;
      ++i;
    }
    const int j = i + 1 + static_cast<int>(p);
    const Mask a = Expand(c, i, j);
    r.terms = {{static_cast<int>(a | Bit(i)), 1},
               {static_cast<int>(a | Bit(j)), 1},
               {static_cast<int>(a | Bit(i) | Bit(j)), -1}};
    if (a != 0) r.terms.push_back({static_cast<int>(a), -1});
    return r;
  }
  const int i = static_cast<int>(index - pairs * per_pair);
  const Mask full = FullMask(n);
  r.terms = {{static_cast<int>(full), 1}};
  if (full != Bit(i)) r.terms.push_back({static_cast<int>(full & ~Bit(i)), -1});
  return r;
}

std::vector<Row> ShannonBlock(int n) {
  std::vector<Row> out;
  const std::size_t count = ShannonRowCount(n);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(ShannonRow(n, i));
  return out;
}

PolymatroidLP::PolymatroidLP(int n_points, std::vector<std::string> extra_vars)
    : n_(n_points), extra_names_(std::move(extra_vars)) {
  if (n_points < 0 || n_points > kMaxPoints) {
    throw std::invalid_argument("LP ground size must be in [0, 16]");
  }
}

int PolymatroidLP::extra_var(std::string_view name) const {
  for (int k = 0; k < num_extra(); ++k) {
    if (extra_names_[k] == name) return extra_var(k);
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::string PolymatroidLP::VarName(int id) const {
  if (id >= (1 << n_)) return extra_names_.at(id - (1 << n_));
  return "f" + ToString(static_cast<Mask>(id));
}

void PolymatroidLP::AddShannonBlock() {
  if (n_ > 14) {
    std::ostringstream msg;
    msg << "elemental block on " << n_ << " points would need "
        << ShannonRowCount(n_) << " rows; the cap is 14 points";
    throw std::length_error(msg.str());
  }
  shannon_ = true;
}

std::size_t PolymatroidLP::AddRow(Row r) {
  std::vector<Term> merged;
  std::sort(r.terms.begin(), r.terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  for (const Term& t : r.terms) {
    if (t.var < 0 || t.var >= var_limit()) {
      throw std::invalid_argument("variable id out of range in row");
    }
    if (t.var == 0 || t.coef == 0) continue;
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
      if (merged.back().coef == 0) merged.pop_back();
    } else {
      merged.push_back(t);
    }
  }
  r.terms = std::move(merged);
  r.rhs.canonicalize();
  rows_.push_back(std::move(r));
  return num_rows() - 1;
}

std::size_t PolymatroidLP::AddRow(std::vector<Term> terms, Sense sense,
                                  Rational rhs, RowTag tag) {
  Row r;
  r.terms = std::move(terms);
  r.sense = sense;
  r.rhs = std::move(rhs);
  r.tag = tag;
  return AddRow(std::move(r));
}

Row PolymatroidLP::row(std::size_t index) const {
  const std::size_t s = shannon_rows();
  if (index < s) return ShannonRow(n_, index);
  return rows_.at(index - s);
}

void PolymatroidLP::SetObjective(Goal goal,
                                 std::vector<std::pair<int, Rational>> terms) {
  for (const auto& [v, c] : terms) {
    if (v <= 0 || v >= var_limit()) {
      throw std::invalid_argument("objective variable out of range");
    }
  }
  goal_ = goal;
  objective_ = std::move(terms);
}

void PinMatroid(PolymatroidLP& lp, const Matroid& m) {
  if (m.size() > lp.n_points()) {
    throw std::invalid_argument("matroid has more points than the LP");
  }
  for (Mask a = 1; a <= m.ground(); ++a) {
    lp.AddRow({{static_cast<int>(a), 1}}, Sense::kEq, m.rank(a),
              RowTag::kRankPin);
  }
}

Rational RowActivity(const Row& row, const std::vector<Rational>& point) {
  Rational s = 0;
  for (const Term& t : row.terms) s += point.at(t.var) * t.coef;
  return s;
}

namespace {

bool Fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool Satisfied(const Row& r, const Rational& act) {
  switch (r.sense) {
    case Sense::kGe: return act >= r.rhs;
    case Sense::kLe: return act <= r.rhs;
    case Sense::kEq: return act == r.rhs;
  }
  return false;
}

bool CheckPoint(const PolymatroidLP& lp, const std::vector<Rational>& x,
                std::string* why) {
  if (static_cast<int>(x.size()) != lp.var_limit()) {
    return Fail(why, "point has the wrong length");
  }
  if (lp.var_limit() > 0 && x[0] != 0) return Fail(why, "f(empty) must be 0");
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const Row r = lp.row(i);
    if (!Satisfied(r, RowActivity(r, x))) {
      return Fail(why, "row " + std::to_string(i) + " (" + ToString(r.tag) +
                           ") is violated");
    }
  }
  return true;
}

bool CheckSigns(const PolymatroidLP& lp, const LPOutcome& out,
                std::string* why) {
  for (const auto& [i, y] : out.multipliers) {
    if (i >= lp.num_rows()) return Fail(why, "multiplier row out of range");
    const Sense s = i < lp.shannon_rows() ? Sense::kGe
                                          : lp.explicit_rows()[i - lp.shannon_rows()].sense;
    if ((s == Sense::kGe && y < 0) || (s == Sense::kLe && y > 0)) {
      return Fail(why, "multiplier on row " + std::to_string(i) +
                           " has the wrong sign");
    }
  }
  return true;
}

// sum y_i a_i and sum y_i b_i.
void Combine(const PolymatroidLP& lp, const LPOutcome& out,
             std::vector<Rational>* lhs, Rational* rhs) {
  lhs->assign(lp.var_limit(), 0);
  *rhs = 0;
  for (const auto& [i, y] : out.multipliers) {
    if (y == 0) continue;
    const Row r = lp.row(i);
    for (const Term& t : r.terms) (*lhs)[t.var] += y * t.coef;
    *rhs += y * r.rhs;
  }
}

std::vector<Rational> MinimizationCost(const PolymatroidLP& lp) {
  std::vector<Rational> c(lp.var_limit(), 0);
  for (const auto& [v, q] : lp.objective()) {
    c[v] += lp.goal() == PolymatroidLP::Goal::kMaximize ? Rational(-q) : q;
  }
  return c;
}

}  // namespace

bool CheckCertificate(const PolymatroidLP& lp, const LPOutcome& out,
                      std::string* why) {
  const bool optimizing = lp.goal() != PolymatroidLP::Goal::kFeasibility;
  switch (out.status) {
    case LPStatus::kFeasible:
      if (optimizing) return Fail(why, "an optimization LP needs a bound");
      return CheckPoint(lp, out.point, why);
    case LPStatus::kInfeasible: {
      if (!CheckSigns(lp, out, why)) return false;
      std::vector<Rational> lhs;
      Rational rhs;
      Combine(lp, out, &lhs, &rhs);
      for (int v = 0; v < lp.var_limit(); ++v) {
        if (lhs[v] != 0) {
          return Fail(why, "combination leaves " + lp.VarName(v) +
                               " with coefficient " + ToString(lhs[v]));
        }
      }
      if (rhs <= 0) return Fail(why, "combined right-hand side is not positive");
      return true;
    }
    case LPStatus::kOptimal: {
      if (!optimizing) return Fail(why, "no objective to be optimal for");
      if (!CheckPoint(lp, out.point, why)) return false;
      const std::vector<Rational> c = MinimizationCost(lp);
      Rational cx = 0;
      for (int v = 0; v < lp.var_limit(); ++v) cx += c[v] * out.point[v];
      const Rational value =
          lp.goal() == PolymatroidLP::Goal::kMaximize ? Rational(-cx) : cx;
      if (value != out.value) return Fail(why, "value does not match the point");
      if (!CheckSigns(lp, out, why)) return false;
      std::vector<Rational> lhs;
      Rational rhs;
      Combine(lp, out, &lhs, &rhs);
      for (int v = 0; v < lp.var_limit(); ++v) {
        if (v > 0 && lhs[v] != c[v]) {
          return Fail(why, "dual combination differs from the cost on " +
                               lp.VarName(v));
        }
      }
      if (rhs != cx) return Fail(why, "dual bound differs from the value");
      return true;
    }
    case LPStatus::kUnbounded: {
      if (!optimizing) return Fail(why, "no objective to be unbounded");
      if (!CheckPoint(lp, out.point, why)) return false;
      if (static_cast<int>(out.ray.size()) != lp.var_limit()) {
        return Fail(why, "ray has the wrong length");
      }
      if (lp.var_limit() > 0 && out.ray[0] != 0) {
        return Fail(why, "ray moves f(empty)");
      }
      for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        const Row r = lp.row(i);
        const Rational d = RowActivity(r, out.ray);
        const bool ok = (r.sense == Sense::kGe && d >= 0) ||
                        (r.sense == Sense::kLe && d <= 0) ||
                        (r.sense == Sense::kEq && d == 0);
        if (!ok) return Fail(why, "ray leaves row " + std::to_string(i));
      }
      const std::vector<Rational> c = MinimizationCost(lp);
      Rational cd = 0;
      for (int v = 0; v < lp.var_limit(); ++v) cd += c[v] * out.ray[v];
      if (cd >= 0) return Fail(why, "ray does not improve the objective");
      return true;
    }
  }
  return Fail(why, "unknown status");
}

LPOutcome Solve(const PolymatroidLP& lp, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  LPOutcome out;
  bool done = false;
  if (!options.exact_only) done = internal::SolveWithFloatBasis(lp, options, &out);
  if (!done) out = internal::SolveDenseExact(lp, options);
  out.stats.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return out;
}

}  // namespace matext

namespace matext::internal {

std::size_t ElementalIndex(int n, int i, int j, Mask a) {
  if (i > j) std::swap(i, j);
  std::size_t p = 0;
  for (int k = 0; k < i; ++k) p += n - 1 - k;
  p += j - i - 1;
  const Mask low = a & (Bit(i) - 1);
  const Mask mid = (a >> (i + 1)) & (Bit(j - i - 1) - 1);
  const Mask high = a >> (j + 1);
  const Mask c = low | (mid << i) | (high << (j - 1));
  return p * (std::size_t{1} << (n - 2)) + c;
}

std::size_t MonotoneIndex(int n, int i) {
  return ShannonRowCount(n) - n + i;
}

}  // namespace matext::internal
