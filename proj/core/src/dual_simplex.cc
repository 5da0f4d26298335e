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

// Floating-point dual simplex over the rows of a polymatroid LP, followed by
// exact certification of the final basis.
//
// Presolve merges variables tied by equalities of the form f(A) = f(B) and
// fixes variables pinned by single-variable equalities. The solver then works
// on the remaining classes. Its basis holds one row per class. The starting
// basis uses derived lower bounds f(S) >= f(T) for fixed T inside S, which
// follow from chains of elemental rows; with nonnegative costs this basis is
// dual feasible, so no phase one is needed.

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lp_internal.h"

namespace matext::internal {

namespace {

constexpr double kPrimalTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr int kRefactorEvery = 64;
constexpr std::int64_t kMaxDenominator = 1000000;

// ---------------------------------------------------------------------------
// Presolve.

class Presolve {
 public:
  struct Event {
    bool merge = false;
    std::size_t row = 0;  // global row index
    int root = 0;         // fixed class, or surviving class of a merge
    int child = 0;
    std::size_t child_count = 0;
  };

  explicit Presolve(const PolymatroidLP& lp) : lp_(lp) {
    const int v = lp.var_limit();
    parent_.resize(v);
    std::iota(parent_.begin(), parent_.end(), 0);
    members_.resize(v);
    for (int i = 0; i < v; ++i) members_[i] = {i};
    fixed_.assign(v, 0);
    value_.assign(v, 0);
    if (v > 0) fixed_[0] = 1;
    eliminated_.assign(lp.explicit_rows().size(), 0);
  }

  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  int FindConst(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Class-space image of a row: coefficients by root plus the right-hand
  // side with fixed classes moved over.
  void Reduce(const Row& r, std::vector<std::pair<int, std::int64_t>>* terms,
              Rational* rhs) {
    terms->clear();
    *rhs = r.rhs;
    for (const Term& t : r.terms) {
      const int root = Find(t.var);
      if (fixed_[root]) {
        *rhs -= value_[root] * t.coef;
        continue;
      }
      auto it = std::find_if(terms->begin(), terms->end(),
                             [root](const auto& e) { return e.first == root; });
      if (it == terms->end()) {
        terms->emplace_back(root, t.coef);
      } else {
        it->second += t.coef;
      }
    }
    std::erase_if(*terms, [](const auto& e) { return e.second == 0; });
  }

  // Returns false with `conflict` set when some row reduces to a violated
  // constant.
  bool Run() {
    const auto& rows = lp_.explicit_rows();
    const std::size_t base = lp_.shannon_rows();
    std::vector<std::pair<int, std::int64_t>> terms;
    Rational rhs;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (eliminated_[k]) continue;
        const Row& r = rows[k];
        Reduce(r, &terms, &rhs);
        if (terms.empty()) {
          const bool ok = (r.sense == Sense::kGe && rhs <= 0) ||
                          (r.sense == Sense::kLe && rhs >= 0) ||
                          (r.sense == Sense::kEq && rhs == 0);
          if (!ok) {
            conflict_row_ = base + k;
            // Orientation that makes the combination's right side positive.
            conflict_sign_ = rhs > 0 ? 1 : -1;
            return false;
          }
          eliminated_[k] = 1;
          continue;
        }
        if (r.sense != Sense::kEq) continue;
        if (terms.size() == 1) {
          const int root = terms[0].first;
          fixed_[root] = 1;
          value_[root] = rhs / terms[0].second;
          events_.push_back({false, base + k, root, 0, 0});
          eliminated_[k] = 1;
          changed = true;
        } else if (terms.size() == 2 && rhs == 0 &&
                   terms[0].second == -terms[1].second) {
          int a = terms[0].first, b = terms[1].first;
          if (members_[a].size() < members_[b].size()) std::swap(a, b);
          events_.push_back({true, base + k, a, b, members_[b].size()});
          parent_[b] = a;
          members_[a].insert(members_[a].end(), members_[b].begin(),
                             members_[b].end());
          eliminated_[k] = 1;
          changed = true;
        }
      }
    }
    return true;
  }

  bool fixed(int root) const { return fixed_[root]; }
  const Rational& value(int root) const { return value_[root]; }
  const std::vector<int>& members(int root) const { return members_[root]; }
  bool eliminated(std::size_t k) const { return eliminated_[k]; }
  void MarkFixedUnused(int root) {
    fixed_[root] = 1;
    value_[root] = 0;
  }
  std::size_t conflict_row() const { return conflict_row_; }
  int conflict_sign() const { return conflict_sign_; }

  // Adds multiples of presolve rows to `w` so that sum w_i a_i equals
  // `target` exactly, given that the two already agree on every class that
  // is not fixed. Works backwards through the presolve events.
  void Route(std::map<std::size_t, Rational>* w,
             const std::vector<Rational>& target) const {
    const int v = lp_.var_limit();
    std::vector<Rational> res(v, 0);
    for (const auto& [i, y] : *w) {
      if (y == 0) continue;
      const Row r = lp_.row(i);
      for (const Term& t : r.terms) res[t.var] += y * t.coef;
    }
    for (int i = 0; i < v; ++i) res[i] -= target[i];
    std::vector<std::vector<int>> members = members_;
    std::vector<int> owner(v);
    for (int i = 0; i < v; ++i) owner[i] = FindConst(i);
    for (auto it = events_.rbegin(); it != events_.rend(); ++it) {
      const Row r = lp_.row(it->row);
      int cls = it->root;
      if (it->merge) {
        // Undo the merge; the row then moves the child's residual onto the
        // surviving class.
        auto& list = members[cls];
        const std::size_t keep = list.size() - it->child_count;
        for (std::size_t k = keep; k < list.size(); ++k) owner[list[k]] = it->child;
        members[it->child].assign(list.begin() + keep, list.end());
        list.resize(keep);
        cls = it->child;
      }
      Rational sum = 0;
      for (int m : members[cls]) sum += res[m];
      std::int64_t coef = 0;
      for (const Term& t : r.terms) {
        if (owner[t.var] == cls) coef += t.coef;
      }
      if (sum != 0) {
        const Rational mu = -sum / coef;
        (*w)[it->row] += mu;
        for (const Term& t : r.terms) res[t.var] += mu * t.coef;
      }
    }
    for (auto it = w->begin(); it != w->end();) {
      it = it->second == 0 ? w->erase(it) : std::next(it);
    }
  }

 private:
  const PolymatroidLP& lp_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> members_;
  std::vector<char> fixed_;
  std::vector<Rational> value_;
  std::vector<char> eliminated_;
  std::vector<Event> events_;
  std::size_t conflict_row_ = 0;
  int conflict_sign_ = 1;
};

// ---------------------------------------------------------------------------
// Reduced problem.

struct CRow {
  std::vector<std::pair<int, double>> terms;  // by column
  double rhs = 0;
};

// A basis row: a derived lower bound on one column, or an original row
// oriented as ">=" (sign -1 flips a "<=" row or an equality).
struct Slot {
  bool bound = true;
  int col = 0;
  std::size_t row = 0;
  int sign = 1;
  bool equality = false;
  CRow crow;
};

struct Bound {
  double value = 0;
  Rational exact = 0;
  // Either a chain f(S) >= f(T) of elemental rows, or an explicit row
  // c x >= b on this column alone.
  bool from_row = false;
  std::size_t row = 0;
  std::int64_t coef = 1;
  Mask s = 0, t = 0;
};

class FloatBasisSolver {
 public:
  FloatBasisSolver(const PolymatroidLP& lp, Presolve& pre)
      : lp_(lp), pre_(pre), n_(lp.n_points()), v_(lp.var_limit()) {}

  // Builds the reduced problem. False when outside the solver's scope.
  bool Setup() {
    if (!lp_.has_shannon_block() || n_ < 1) return false;
    const bool optimizing = lp_.goal() != PolymatroidLP::Goal::kFeasibility;
    std::vector<Rational> cost(v_, 0);
    if (optimizing) {
      const bool maximize = lp_.goal() == PolymatroidLP::Goal::kMaximize;
      for (const auto& [var, c] : lp_.objective()) {
        cost[var] += maximize ? Rational(-c) : c;
      }
    }
    // Extra variables that no remaining row mentions are fixed at zero.
    std::vector<char> seen(v_, 0);
    for (int m = 1; m < (1 << n_); ++m) seen[m] = 1;
    const auto& rows = lp_.explicit_rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (pre_.eliminated(k)) continue;
      for (const Term& t : rows[k].terms) seen[pre_.Find(t.var)] = 1;
    }
    for (int var = (1 << n_); var < v_; ++var) {
      const int root = pre_.Find(var);
      if (root == var && !pre_.fixed(root) && !seen[root]) {
        if (cost[var] != 0) return false;
        pre_.MarkFixedUnused(root);
      }
    }
    col_of_.assign(v_, -1);
    for (int var = 1; var < v_; ++var) {
      const int root = pre_.Find(var);
      if (root == var && !pre_.fixed(root)) {
        col_of_[var] = static_cast<int>(root_of_col_.size());
        root_of_col_.push_back(var);
      }
    }
    ncols_ = static_cast<int>(root_of_col_.size());
    cost_exact_.assign(ncols_, 0);
    for (int var = 1; var < v_; ++var) {
      const int root = pre_.Find(var);
      if (cost[var] == 0) continue;
      if (pre_.fixed(root)) {
        cost_const_ += cost[var] * pre_.value(root);
      } else {
        cost_exact_[col_of_[root]] += cost[var];
      }
    }
    for (const Rational& c : cost_exact_) {
      if (c < 0) return false;
    }
    // Member-level values of fixed classes.
    xm_.assign(v_, 0.0);
    for (int var = 1; var < v_; ++var) {
      const int root = pre_.Find(var);
      if (pre_.fixed(root)) xm_[var] = pre_.value(root).get_d();
    }
    if (!ComputeBounds(rows)) return false;
    BuildPricingRows();
    return true;
  }

  std::int64_t iterations() const { return iterations_; }
  int ncols() const { return ncols_; }

  // Runs the dual simplex; then, for optimization, primal cleanup with the
  // exact costs. Returns +1 optimal, 0 infeasible, -1 failure.
  int Solve(std::int64_t max_iterations) {
    const bool optimizing = lp_.goal() != PolymatroidLP::Goal::kFeasibility;
    cost_.assign(ncols_, 1.0);
    if (optimizing) {
      double scale = 0;
      for (const Rational& c : cost_exact_) scale = std::max(scale, c.get_d());
      if (scale == 0) scale = 1;
      for (int j = 0; j < ncols_; ++j) {
        cost_[j] = cost_exact_[j].get_d() + 1e-6 * scale;
      }
    }
    slots_.assign(ncols_, Slot{});
    for (int j = 0; j < ncols_; ++j) {
      slots_[j].bound = true;
      slots_[j].col = j;
    }
    if (!Refactor()) return -1;
    max_iterations_ = max_iterations;
    while (true) {
      if (++iterations_ > max_iterations_) return -1;
      Entering e;
      if (!Price(&e)) break;
      const int r = DualStep(e);
      if (r == 0) {
        const int c = ConfirmInfeasible();
        if (c <= 0) return c;
        continue;
      }
      if (r < 0) return -1;
    }
    if (!optimizing) return 1;
    for (int j = 0; j < ncols_; ++j) cost_[j] = cost_exact_[j].get_d();
    if (!Refactor()) return -1;
    while (true) {
      if (++iterations_ > max_iterations_) return -1;
      const int r = PrimalStep();
      if (r == 1) break;
      if (r < 0) return -1;
    }
    // The cleanup can leave tiny violations; restore feasibility.
    for (int guard = 0; guard < 1000; ++guard) {
      Entering e;
      if (!Price(&e)) return 1;
      const int r = DualStep(e);
      if (r == 0) {
        const int c = ConfirmInfeasible();
        if (c <= 0) return c;
      } else if (r < 0) {
        return -1;
      }
    }
    return -1;
  }

  const LPOutcome& infeasible_outcome() const { return infeasible_; }

  // After the ratio test finds no leaving row: 0 when the exact certificate
  // holds, 1 to continue after a refactorization that removes accumulated
  // drift, -1 when that was already tried.
  int ConfirmInfeasible() {
    if (CertifyInfeasible(&infeasible_)) return 0;
    if (last_retry_ == iterations_ - 1) return -1;
    last_retry_ = iterations_;
    return Refactor() ? 1 : -1;
  }

  // Certifies the outcome in exact arithmetic.
  bool CertifyInfeasible(LPOutcome* out) {
    std::vector<std::pair<int, double>> combo;  // (slot or -1, multiplier)
    combo.emplace_back(-1, 1.0);
    for (int s = 0; s < ncols_; ++s) {
      if (std::fabs(alpha_[s]) > 1e-12) combo.emplace_back(s, -alpha_[s]);
    }
    // Exact multipliers: rationalized first, solved exactly if that fails.
    std::vector<Rational> mult;
    if (!ExactFarkas(combo, &mult)) return false;
    std::map<std::size_t, Rational> w;
    for (std::size_t k = 0; k < combo.size(); ++k) {
      if (mult[k] == 0) continue;
      if (combo[k].first < 0) {
        AddOriginal(farkas_row_, mult[k], &w);
      } else {
        AddOriginal(slots_[combo[k].first], mult[k], &w);
      }
    }
    pre_.Route(&w, std::vector<Rational>(v_, 0));
    out->status = LPStatus::kInfeasible;
    out->multipliers.assign(w.begin(), w.end());
    return true;
  }

  bool CertifyPoint(LPOutcome* out, bool with_duals) {
    std::vector<Rational> xc(ncols_);
    for (int j = 0; j < ncols_; ++j) xc[j] = Rationalize(x_[j], kMaxDenominator);
    std::vector<Rational> point = Expand(xc);
    if (!PointFeasible(point)) {
      auto exact = SolveBasisExactly();
      if (!exact) return false;
      xc = *exact;
      point = Expand(xc);
      if (!PointFeasible(point)) return false;
    }
    out->point = point;
    if (!with_duals) {
      out->status = LPStatus::kFeasible;
      return true;
    }
    // Duals on the basis.
    std::vector<Rational> y(ncols_);
    for (int s = 0; s < ncols_; ++s) y[s] = Rationalize(y_[s], kMaxDenominator);
    if (!DualsValid(y, xc)) {
      auto exact = SolveDualsExactly();
      if (!exact || !DualsValid(*exact, xc)) return false;
      y = *exact;
    }
    std::map<std::size_t, Rational> w;
    for (int s = 0; s < ncols_; ++s) {
      if (y[s] != 0) AddOriginal(slots_[s], y[s], &w);
    }
    std::vector<Rational> target(v_, 0);
    const bool maximize = lp_.goal() == PolymatroidLP::Goal::kMaximize;
    Rational cx = 0;
    for (const auto& [var, c] : lp_.objective()) {
      target[var] += maximize ? Rational(-c) : c;
      cx += c * point[var];
    }
    pre_.Route(&w, target);
    out->status = LPStatus::kOptimal;
    out->value = cx;
    out->multipliers.assign(w.begin(), w.end());
    return true;
  }

 private:
  struct Entering {
    std::size_t row = 0;
    int sign = 1;
    std::size_t prow = 0;
    double violation = 0;
  };

  struct PRow {
    std::uint32_t begin = 0, end = 0;
    double rhs = 0;
    std::size_t global = 0;
    int sign = 1;
    bool eq = false;
  };

  // ------------------------------------------------------------ bounds
  bool ComputeBounds(const std::vector<Row>& rows) {
    const Mask full = FullMask(n_);
    std::vector<double> lb(std::size_t{1} << n_, 0.0);
    std::vector<Mask> src(std::size_t{1} << n_, 0);
    for (Mask s = 1; s <= full; ++s) {
      const int root = pre_.Find(static_cast<int>(s));
      if (pre_.fixed(root)) {
        lb[s] = pre_.value(root).get_d();
        src[s] = s;
      } else {
        lb[s] = -1e300;
      }
      for (Mask rest = s; rest; rest &= rest - 1) {
        const Mask sub = s & ~(rest & -rest);
        if (lb[sub] > lb[s]) {
          lb[s] = lb[sub];
          src[s] = src[sub];
        }
      }
    }
    bounds_.assign(ncols_, Bound{});
    std::vector<char> has(ncols_, 0);
    for (int j = 0; j < ncols_; ++j) {
      for (int var : pre_.members(root_of_col_[j])) {
        if (var >= (1 << n_)) continue;
        if (!has[j] || lb[var] > bounds_[j].value) {
          has[j] = 1;
          Bound& b = bounds_[j];
          b.value = lb[var];
          b.from_row = false;
          b.s = static_cast<Mask>(var);
          b.t = src[var];
        }
      }
    }
    std::vector<std::pair<int, std::int64_t>> terms;
    Rational rhs;
    const std::size_t base = lp_.shannon_rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (pre_.eliminated(k) || rows[k].sense == Sense::kEq) continue;
      pre_.Reduce(rows[k], &terms, &rhs);
      if (terms.size() != 1) continue;
      const int sign = rows[k].sense == Sense::kGe ? 1 : -1;
      const std::int64_t c = terms[0].second * sign;
      if (c <= 0) continue;
      const int j = col_of_[terms[0].first];
      const Rational val = rhs * sign / c;
      if (!has[j] || val.get_d() > bounds_[j].value) {
        has[j] = 1;
        Bound& b = bounds_[j];
        b.value = val.get_d();
        b.from_row = true;
        b.row = base + k;
        b.coef = c;
      }
    }
    for (int j = 0; j < ncols_; ++j) {
      if (!has[j]) return false;
      Bound& b = bounds_[j];
      if (!b.from_row) {
        b.exact = b.t ? pre_.value(pre_.Find(static_cast<int>(b.t))) : Rational(0);
      } else {
        std::vector<std::pair<int, std::int64_t>> tt;
        Rational r;
        pre_.Reduce(lp_.row(b.row), &tt, &r);
        const int sign = lp_.row(b.row).sense == Sense::kGe ? 1 : -1;
        b.exact = r * sign / b.coef;
      }
    }
    return true;
  }

  // ------------------------------------------------------------ rows
  CRow Reduced(std::size_t global, int sign) {
    const Row r = lp_.row(global);
    CRow c;
    c.rhs = r.rhs.get_d() * sign;
    for (const Term& t : r.terms) {
      const int root = pre_.Find(t.var);
      if (pre_.fixed(root)) {
        c.rhs -= sign * t.coef * xm_[t.var];
        continue;
      }
      const int col = col_of_[root];
      auto it = std::find_if(c.terms.begin(), c.terms.end(),
                             [col](const auto& e) { return e.first == col; });
      if (it == c.terms.end()) {
        c.terms.emplace_back(col, static_cast<double>(sign * t.coef));
      } else {
        it->second += sign * t.coef;
      }
    }
    std::erase_if(c.terms, [](const auto& e) { return e.second == 0; });
    return c;
  }

  // Exact class-space image of an oriented slot.
  void ExactImage(const Slot& s, std::map<int, Rational>* coefs,
                  Rational* rhs) {
    coefs->clear();
    if (s.bound) {
      (*coefs)[s.col] = 1;
      *rhs = bounds_[s.col].exact;
      return;
    }
    std::vector<std::pair<int, std::int64_t>> terms;
    pre_.Reduce(lp_.row(s.row), &terms, rhs);
    *rhs *= s.sign;
    for (const auto& [root, c] : terms) (*coefs)[col_of_[root]] += c * s.sign;
  }

  // Adds multiplier m on an oriented slot to the original-row combination.
  void AddOriginal(const Slot& s, const Rational& m,
                   std::map<std::size_t, Rational>* w) {
    if (!s.bound) {
      (*w)[s.row] += m * s.sign;
      return;
    }
    const Bound& b = bounds_[s.col];
    if (b.from_row) {
      const int sign = lp_.row(b.row).sense == Sense::kGe ? 1 : -1;
      (*w)[b.row] += m * sign / b.coef;
      return;
    }
    // Chain from t up to s, one point at a time.
    const Mask full = FullMask(n_);
    Mask cur = b.t;
    for (int p = 0; p < n_; ++p) {
      if (!Contains(b.s, p) || Contains(cur, p)) continue;
      Mask acc = cur;
      for (int q = 0; q < n_; ++q) {
        if (q == p || Contains(cur, q)) continue;
        (*w)[ElementalIndex(n_, p, q, acc)] += m;
        acc |= Bit(q);
      }
      (*w)[MonotoneIndex(n_, p)] += m;
      cur |= Bit(p);
    }
    (void)full;
  }

  // ------------------------------------------------------------ pricing
  // Distinct class-space images of the non-eliminated rows, all oriented
  // as ">=". Rows with equal left sides keep the largest right side.
  void BuildPricingRows() {
    const std::size_t base = lp_.shannon_rows();
    std::map<std::vector<std::pair<int, double>>, std::size_t> seen;
    auto add = [&](std::size_t global, int sign, bool eq) {
      CRow c = Reduced(global, sign);
      if (c.terms.empty() && c.rhs <= kPrimalTol &&
          (!eq || c.rhs >= -kPrimalTol)) {
        return;
      }
      std::sort(c.terms.begin(), c.terms.end());
      if (!eq) {
        auto [it, fresh] = seen.try_emplace(c.terms, prows_.size());
        if (!fresh) {
          PRow& old = prows_[it->second];
          if (c.rhs > old.rhs) {
            old.rhs = c.rhs;
            old.global = global;
            old.sign = sign;
          }
          return;
        }
      }
      PRow r;
      r.begin = static_cast<std::uint32_t>(pcol_.size());
      for (const auto& [col, v] : c.terms) {
        pcol_.push_back(col);
        pcoef_.push_back(v);
      }
      r.end = static_cast<std::uint32_t>(pcol_.size());
      r.rhs = c.rhs;
      r.global = global;
      r.sign = sign;
      r.eq = eq;
      prows_.push_back(r);
    };
    for (std::size_t g = 0; g < base; ++g) add(g, 1, false);
    const auto& rows = lp_.explicit_rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (pre_.eliminated(k)) continue;
      const Sense sense = rows[k].sense;
      add(base + k, sense == Sense::kLe ? -1 : 1, sense == Sense::kEq);
    }
    for (std::size_t k = 0; k < prows_.size(); ++k) {
      prow_of_global_[prows_[k].global] = k;
    }
    weights_.assign(prows_.size(), 1.0);
    basic_.assign(prows_.size(), 0);
  }

  // Devex pricing: the entering row maximizes violation^2 / weight. The
  // weights are refreshed here from the previous pivot's direction.
  bool Price(Entering* e) {
    double best = 0;
    bool found = false;
    const bool update = pending_update_;
    pending_update_ = false;
    const double wq = update_scale_;
    const double* x = x_.data();
    const double* d = dcol_.data();
    const int* col = pcol_.data();
    const double* coef = pcoef_.data();
    for (std::size_t k = 0; k < prows_.size(); ++k) {
      const PRow& r = prows_[k];
      double act = 0, rate = 0;
      for (std::uint32_t t = r.begin; t < r.end; ++t) {
        act += coef[t] * x[col[t]];
        if (update) rate += coef[t] * d[col[t]];
      }
      if (update) {
        const double r2 = rate * rate * wq;
        if (r2 > weights_[k]) weights_[k] = r2;
      }
      if (basic_[k]) continue;
      double viol = r.rhs - act;
      int sign = r.sign;
      if (r.eq && -viol > viol) {
        viol = -viol;
        sign = -sign;
      }
      if (viol <= kPrimalTol) continue;
      const double score = viol * viol / weights_[k];
      if (score > best) {
        best = score;
        e->row = r.global;
        e->sign = sign;
        e->prow = k;
        e->violation = viol;
        found = true;
      }
    }
    return found;
  }

  // ------------------------------------------------------------ linear algebra
  bool Refactor() {
    etas_.clear();
    base_ = slots_;
    std::vector<int> free_pos(ncols_, -1);
    covered_.assign(ncols_, -1);
    general_.clear();
    for (int s = 0; s < ncols_; ++s) {
      if (base_[s].bound) {
        covered_[base_[s].col] = s;
      } else {
        general_.push_back(s);
      }
    }
    free_cols_.clear();
    for (int j = 0; j < ncols_; ++j) {
      if (covered_[j] < 0) {
        free_pos[j] = static_cast<int>(free_cols_.size());
        free_cols_.push_back(j);
      }
    }
    free_pos_ = free_pos;
    const int k = static_cast<int>(general_.size());
    if (k != static_cast<int>(free_cols_.size())) return false;
    if (k > 0) {
      std::vector<Eigen::Triplet<double>> trip;
      for (int g = 0; g < k; ++g) {
        for (const auto& [col, c] : base_[general_[g]].crow.terms) {
          if (free_pos_[col] >= 0) trip.emplace_back(g, free_pos_[col], c);
        }
      }
      Eigen::SparseMatrix<double> mat(k, k);
      mat.setFromTriplets(trip.begin(), trip.end());
      mat.makeCompressed();
      Eigen::SparseMatrix<double> tr = mat.transpose();
      tr.makeCompressed();
      lu_.compute(mat);
      if (lu_.info() != Eigen::Success) return false;
      lut_.compute(tr);
      if (lut_.info() != Eigen::Success) return false;
    }
    // x = B^{-1} b, y = B^{-T} c.
    Eigen::VectorXd b(ncols_);
    for (int s = 0; s < ncols_; ++s) {
      b[s] = slots_[s].bound ? bounds_[slots_[s].col].value : slots_[s].crow.rhs;
    }
    x_ = BaseSolveTransposed(b);
    Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(cost_.data(), ncols_);
    y_ = BaseSolve(c);
    SyncMembers();
    std::fill(basic_.begin(), basic_.end(), 0);
    for (const Slot& s : slots_) {
      if (!s.bound) basic_[prow_of_global_.at(s.row)] = 1;
    }
    return x_.allFinite() && y_.allFinite();
  }

  // Solves sum_s v_s a_s = a with the factorized base basis.
  Eigen::VectorXd BaseSolve(const Eigen::VectorXd& a) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(ncols_);
    const int k = static_cast<int>(general_.size());
    if (k > 0) {
      Eigen::VectorXd af(k);
      for (int f = 0; f < k; ++f) af[f] = a[free_cols_[f]];
      Eigen::VectorXd vg = lut_.solve(af);
      for (int g = 0; g < k; ++g) v[general_[g]] = vg[g];
    }
    for (int j = 0; j < ncols_; ++j) {
      if (covered_[j] >= 0) v[covered_[j]] = a[j];
    }
    for (int g = 0; g < k; ++g) {
      const double vg = v[general_[g]];
      if (vg == 0) continue;
      for (const auto& [col, c] : base_[general_[g]].crow.terms) {
        if (covered_[col] >= 0) v[covered_[col]] -= vg * c;
      }
    }
    return v;
  }

  // Solves A_B x = r with the factorized base basis (r indexed by slot).
  Eigen::VectorXd BaseSolveTransposed(const Eigen::VectorXd& r) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ncols_);
    for (int j = 0; j < ncols_; ++j) {
      if (covered_[j] >= 0) x[j] = r[covered_[j]];
    }
    const int k = static_cast<int>(general_.size());
    if (k > 0) {
      Eigen::VectorXd rg(k);
      for (int g = 0; g < k; ++g) {
        double v = r[general_[g]];
        for (const auto& [col, c] : base_[general_[g]].crow.terms) {
          if (covered_[col] >= 0) v -= c * x[col];
        }
        rg[g] = v;
      }
      Eigen::VectorXd xf = lu_.solve(rg);
      for (int f = 0; f < k; ++f) x[free_cols_[f]] = xf[f];
    }
    return x;
  }

  struct Eta {
    int l = 0;
    double alpha_l = 1;
    std::vector<std::pair<int, double>> alpha;  // off-pivot entries
  };

  Eigen::VectorXd Ftran(const CRow& row) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(ncols_);
    for (const auto& [col, c] : row.terms) a[col] += c;
    Eigen::VectorXd v = BaseSolve(a);
    for (const Eta& e : etas_) {
      const double w = v[e.l] / e.alpha_l;
      if (w != 0) {
        for (const auto& [i, ai] : e.alpha) v[i] -= ai * w;
      }
      v[e.l] = w;
    }
    return v;
  }

  // Column l of the inverse basis, A_B^{-1} e_l.
  Eigen::VectorXd Btran(int l) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(ncols_);
    v[l] = 1;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double dot = 0;
      for (const auto& [i, ai] : it->alpha) dot += ai * v[i];
      v[it->l] = v[it->l] - (dot + (it->alpha_l - 1) * v[it->l]) / it->alpha_l;
    }
    return BaseSolveTransposed(v);
  }

  void SyncMembers() {
    for (int j = 0; j < ncols_; ++j) {
      for (int var : pre_.members(root_of_col_[j])) xm_[var] = x_[j];
    }
  }

  void Replace(int l, Slot entering, const Eigen::VectorXd& alpha) {
    Eta e;
    e.l = l;
    e.alpha_l = alpha[l];
    for (int i = 0; i < ncols_; ++i) {
      if (i != l && std::fabs(alpha[i]) > 1e-14) e.alpha.emplace_back(i, alpha[i]);
    }
    etas_.push_back(std::move(e));
    if (!slots_[l].bound) basic_[prow_of_global_.at(slots_[l].row)] = 0;
    if (!entering.bound) basic_[prow_of_global_.at(entering.row)] = 1;
    slots_[l] = std::move(entering);
  }

  Slot MakeSlot(const Entering& e) {
    Slot s;
    s.bound = false;
    s.row = e.row;
    s.sign = e.sign;
    const std::size_t base = lp_.shannon_rows();
    s.equality = e.row >= base &&
                 lp_.explicit_rows()[e.row - base].sense == Sense::kEq;
    s.crow = Reduced(e.row, e.sign);
    return s;
  }

  // ------------------------------------------------------------ iterations
  // Returns 1 after a pivot, 0 when infeasibility is proven, -1 on failure.
  int DualStep(const Entering& e) {
    Slot in = MakeSlot(e);
    if (in.crow.terms.empty()) {
      // A row constant on the classes that is violated.
      alpha_ = Eigen::VectorXd::Zero(ncols_);
      farkas_row_ = in;
      return 0;
    }
    Eigen::VectorXd alpha = Ftran(in.crow);
    // Harris ratio test over slots that may leave.
    double theta_max = std::numeric_limits<double>::infinity();
    for (int s = 0; s < ncols_; ++s) {
      if (slots_[s].equality || alpha[s] <= kPivotTol) continue;
      theta_max = std::min(theta_max, (std::max(y_[s], 0.0) + kDualTol) / alpha[s]);
    }
    if (!std::isfinite(theta_max)) {
      alpha_ = alpha;
      farkas_row_ = in;
      return 0;
    }
    int l = -1;
    for (int s = 0; s < ncols_; ++s) {
      if (slots_[s].equality || alpha[s] <= kPivotTol) continue;
      if (std::max(y_[s], 0.0) / alpha[s] <= theta_max &&
          (l < 0 || alpha[s] > alpha[l])) {
        l = s;
      }
    }
    const double theta = std::max(y_[l], 0.0) / alpha[l];
    double act = 0;
    for (const auto& [col, c] : in.crow.terms) act += c * x_[col];
    const double t = (in.crow.rhs - act) / alpha[l];
    Eigen::VectorXd d = Btran(l);
    x_ += t * d;
    dcol_.assign(d.data(), d.data() + ncols_);
    {
      const double wq = std::max(weights_[e.prow], 1.0);
      update_scale_ = wq / (alpha[l] * alpha[l]);
      pending_update_ = true;
      if (!slots_[l].bound) {
        weights_[prow_of_global_.at(slots_[l].row)] =
            std::max(update_scale_, 1.0);
      }
    }
    y_ -= theta * alpha;
    y_[l] = theta;
    Replace(l, std::move(in), alpha);
    if (static_cast<int>(etas_.size()) >= kRefactorEvery && !Refactor()) return -1;
    return 1;
  }

  // One primal simplex step for the current costs. Returns 1 when the duals
  // are feasible, 0 after a pivot, -1 on failure.
  int PrimalStep() {
    int j = -1;
    for (int s = 0; s < ncols_; ++s) {
      if (slots_[s].equality) continue;
      if (y_[s] < -kDualTol && (j < 0 || y_[s] < y_[j])) j = s;
    }
    if (j < 0) return 1;
    Eigen::VectorXd d = Btran(j);
    // Ratio test over all rows not in the basis.
    double best_t = std::numeric_limits<double>::infinity();
    Entering block;
    auto consider = [&](std::size_t row, int sign, double slack, double rate) {
      // rate = oriented a.d; blocking when negative.
      if (rate >= -kPivotTol) return;
      const double t = std::max(slack, 0.0) / -rate;
      if (t < best_t) {
        best_t = t;
        block.row = row;
        block.sign = sign;
      }
    };
    for (std::size_t k = 0; k < prows_.size(); ++k) {
      if (basic_[k]) continue;
      const PRow& r = prows_[k];
      double act = 0, rate = 0;
      for (std::uint32_t t = r.begin; t < r.end; ++t) {
        act += pcoef_[t] * x_[pcol_[t]];
        rate += pcoef_[t] * d[pcol_[t]];
      }
      consider(r.global, r.sign, act - r.rhs, rate);
      if (r.eq) consider(r.global, -r.sign, r.rhs - act, -rate);
    }
    if (!std::isfinite(best_t)) return -1;  // unbounded; cannot happen here
    Slot in = MakeSlot(block);
    Eigen::VectorXd alpha = Ftran(in.crow);
    if (std::fabs(alpha[j]) <= kPivotTol) return -1;
    x_ += best_t * d;
    const double ratio = y_[j] / alpha[j];
    y_ -= ratio * alpha;
    y_[j] = ratio;
    Replace(j, std::move(in), alpha);
    if (static_cast<int>(etas_.size()) >= kRefactorEvery && !Refactor()) return -1;
    return 0;
  }

  // ------------------------------------------------------------ exact checks
  bool ExactFarkas(const std::vector<std::pair<int, double>>& combo,
                   std::vector<Rational>* mult) {
    std::vector<std::map<int, Rational>> images(combo.size());
    std::vector<Rational> rhs(combo.size());
    for (std::size_t k = 0; k < combo.size(); ++k) {
      const Slot& s = combo[k].first < 0 ? farkas_row_ : slots_[combo[k].first];
      ExactImage(s, &images[k], &rhs[k]);
    }
    auto valid = [&](const std::vector<Rational>& m) {
      std::map<int, Rational> sum;
      Rational b = 0;
      for (std::size_t k = 0; k < combo.size(); ++k) {
        if (m[k] == 0) continue;
        const Slot& s = combo[k].first < 0 ? farkas_row_ : slots_[combo[k].first];
        if (!s.equality && m[k] < 0) return false;
        for (const auto& [col, c] : images[k]) sum[col] += m[k] * c;
        b += m[k] * rhs[k];
      }
      for (const auto& [col, c] : sum) {
        if (c != 0) return false;
      }
      return b > 0;
    };
    mult->resize(combo.size());
    for (std::size_t k = 0; k < combo.size(); ++k) {
      (*mult)[k] = Rationalize(combo[k].second, kMaxDenominator);
    }
    if (valid(*mult)) return true;
    // Exact: the entering row has multiplier 1; solve for the others.
    std::map<int, int> row_of_col;
    std::vector<SparseRow> sys;
    std::vector<Rational> b;
    auto row_for = [&](int col) {
      auto it = row_of_col.find(col);
      if (it != row_of_col.end()) return it->second;
      row_of_col[col] = static_cast<int>(sys.size());
      sys.emplace_back();
      b.emplace_back(0);
      return static_cast<int>(sys.size()) - 1;
    };
    for (const auto& [col, c] : images[0]) b[row_for(col)] -= c;
    for (std::size_t k = 1; k < combo.size(); ++k) {
      for (const auto& [col, c] : images[k]) {
        sys[row_for(col)].emplace_back(static_cast<int>(k - 1), c);
      }
    }
    auto sol = SolveSparseSystem(static_cast<int>(combo.size()) - 1, sys, b);
    if (!sol) return false;
    (*mult)[0] = 1;
    for (std::size_t k = 1; k < combo.size(); ++k) (*mult)[k] = (*sol)[k - 1];
    return valid(*mult);
  }

  std::vector<Rational> Expand(const std::vector<Rational>& xc) {
    std::vector<Rational> point(v_, 0);
    for (int var = 1; var < v_; ++var) {
      const int root = pre_.Find(var);
      point[var] = pre_.fixed(root) ? pre_.value(root) : xc[col_of_[root]];
    }
    return point;
  }

  bool PointFeasible(const std::vector<Rational>& point) {
    // Scale to a common denominator so the elemental rows run in integers.
    mpz_class den = 1;
    for (const Rational& q : point) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    const Mask full = FullMask(n_);
    if (den.fits_slong_p()) {
      std::vector<__int128> num(v_);
      bool small = true;
      for (int var = 0; var < v_ && small; ++var) {
        mpz_class s = point[var].get_num() * (den / point[var].get_den());
        small = s.fits_slong_p();
        if (small) num[var] = s.get_si();
      }
      if (small) {
        for (int i = 0; i < n_; ++i) {
          for (int j = i + 1; j < n_; ++j) {
            for (Mask a = 0; a <= full; ++a) {
              if (Contains(a, i) || Contains(a, j)) continue;
              if (num[a | Bit(i)] + num[a | Bit(j)] - num[a | Bit(i) | Bit(j)] -
                      num[a] < 0) {
                return false;
              }
            }
          }
          if (num[full] - num[full & ~Bit(i)] < 0) return false;
        }
        return ExplicitRowsHold(point);
      }
    }
    for (std::size_t i = 0; i < lp_.shannon_rows(); ++i) {
      const Row r = lp_.row(i);
      if (RowActivity(r, point) < r.rhs) return false;
    }
    return ExplicitRowsHold(point);
  }

  bool ExplicitRowsHold(const std::vector<Rational>& point) {
    for (const Row& r : lp_.explicit_rows()) {
      const Rational act = RowActivity(r, point);
      const bool ok = (r.sense == Sense::kGe && act >= r.rhs) ||
                      (r.sense == Sense::kLe && act <= r.rhs) ||
                      (r.sense == Sense::kEq && act == r.rhs);
      if (!ok) return false;
    }
    return true;
  }

  std::optional<std::vector<Rational>> SolveBasisExactly() {
    std::vector<SparseRow> sys(ncols_);
    std::vector<Rational> b(ncols_);
    std::map<int, Rational> img;
    for (int s = 0; s < ncols_; ++s) {
      ExactImage(slots_[s], &img, &b[s]);
      for (const auto& [col, c] : img) sys[s].emplace_back(col, c);
    }
    return SolveSparseSystem(ncols_, sys, b);
  }

  std::optional<std::vector<Rational>> SolveDualsExactly() {
    std::vector<SparseRow> sys(ncols_);
    std::map<int, Rational> img;
    Rational dummy;
    for (int s = 0; s < ncols_; ++s) {
      ExactImage(slots_[s], &img, &dummy);
      for (const auto& [col, c] : img) sys[col].emplace_back(s, c);
    }
    return SolveSparseSystem(ncols_, sys, cost_exact_);
  }

  bool DualsValid(const std::vector<Rational>& y,
                  const std::vector<Rational>& xc) {
    std::vector<Rational> sum(ncols_, 0);
    Rational by = 0;
    std::map<int, Rational> img;
    Rational rhs;
    for (int s = 0; s < ncols_; ++s) {
      if (y[s] == 0) continue;
      if (!slots_[s].equality && y[s] < 0) return false;
      ExactImage(slots_[s], &img, &rhs);
      for (const auto& [col, c] : img) sum[col] += y[s] * c;
      by += y[s] * rhs;
    }
    Rational cx = 0;
    for (int j = 0; j < ncols_; ++j) {
      if (sum[j] != cost_exact_[j]) return false;
      cx += cost_exact_[j] * xc[j];
    }
    return by == cx;
  }

 public:
  void CacheRhs() {
    rhs_double_.clear();
    for (const Row& r : lp_.explicit_rows()) rhs_double_.push_back(r.rhs.get_d());
  }

 private:
  const PolymatroidLP& lp_;
  Presolve& pre_;
  int n_;
  int v_;
  int ncols_ = 0;
  std::vector<int> col_of_;
  std::vector<int> root_of_col_;
  std::vector<Rational> cost_exact_;
  Rational cost_const_ = 0;
  std::vector<double> cost_;
  std::vector<Bound> bounds_;
  std::vector<double> xm_;
  std::vector<double> rhs_double_;

  std::vector<Slot> slots_;
  std::vector<Slot> base_;
  std::vector<int> covered_;
  std::vector<int> general_;
  std::vector<int> free_cols_;
  std::vector<int> free_pos_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lut_;
  std::vector<Eta> etas_;
  std::vector<PRow> prows_;
  std::vector<int> pcol_;
  std::vector<double> pcoef_;
  std::map<std::size_t, std::size_t> prow_of_global_;
  std::vector<char> basic_;      // by pricing row
  std::vector<double> weights_;  // devex reference weights by pricing row
  std::vector<double> dcol_;     // last pivot direction, by column
  double update_scale_ = 0;
  bool pending_update_ = false;
  Eigen::VectorXd x_;
  Eigen::VectorXd y_;
  Eigen::VectorXd alpha_;
  Slot farkas_row_;
  std::int64_t iterations_ = 0;
  std::int64_t max_iterations_ = 0;
  std::int64_t last_retry_ = -2;
  LPOutcome infeasible_;
};

}  // namespace

bool SolveWithFloatBasis(const PolymatroidLP& lp, const SolveOptions& options,
                         LPOutcome* out) {
  if (!lp.has_shannon_block()) return false;
  Presolve pre(lp);
  *out = LPOutcome{};
  out->stats.method = "float-dual-simplex";
  if (!pre.Run()) {
    std::map<std::size_t, Rational> w;
    w[pre.conflict_row()] = pre.conflict_sign();
    pre.Route(&w, std::vector<Rational>(lp.var_limit(), 0));
    out->status = LPStatus::kInfeasible;
    out->multipliers.assign(w.begin(), w.end());
    return true;
  }
  FloatBasisSolver solver(lp, pre);
  if (!solver.Setup()) return false;
  solver.CacheRhs();
  out->stats.reduced_vars = solver.ncols();
  const int status = solver.Solve(options.max_iterations);
  out->stats.iterations = solver.iterations();
  if (status < 0) return false;
  if (status == 0) {
    out->status = LPStatus::kInfeasible;
    out->multipliers = solver.infeasible_outcome().multipliers;
    return true;
  }
  const bool optimizing = lp.goal() != PolymatroidLP::Goal::kFeasibility;
  return solver.CertifyPoint(out, optimizing);
}

}  // namespace matext::internal
