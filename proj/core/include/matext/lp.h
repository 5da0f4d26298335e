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


#ifndef MATEXT_LP_H_
#define MATEXT_LP_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matext/matroid.h"
#include "matext/rational.h"
#include "matext/subset.h"

namespace matext {

enum class Sense { kGe, kLe, kEq };

// Provenance of a constraint row.
enum class RowTag {
  kShannon,
  kRankPin,
  kAk1,
  kAk2,
  kCi1,
  kCi2,
  kAccess,
  kObjLink,
  // f(A) = f(B) where B is a closure of A forced by the other rows.
  kClosure,
};

std::string ToString(Sense s);
std::string ToString(RowTag t);
Sense ParseSense(std::string_view s);
RowTag ParseRowTag(std::string_view s);

struct Term {
  int var = 0;
  std::int64_t coef = 0;
};

struct Row {
  std::vector<Term> terms;
  Sense sense = Sense::kGe;
  Rational rhs = 0;
  RowTag tag = RowTag::kShannon;
};

// Elemental inequalities on n points: for i < j and A avoiding both,
// f(Ai) + f(Aj) - f(Aij) - f(A) >= 0, then f(Q) - f(Q - i) >= 0 for each i.
std::size_t ShannonRowCount(int n);
Row ShannonRow(int n, std::size_t index);
std::vector<Row> ShannonBlock(int n);

// Variables are nonempty subsets of the points, identified by their mask,
// followed by named extra variables with ids 2^n, 2^n + 1, ...
// f(empty set) is the constant 0: terms on variable 0 are dropped.
class PolymatroidLP {
 public:
  enum class Goal { kFeasibility, kMinimize, kMaximize };

  PolymatroidLP() = default;
  explicit PolymatroidLP(int n_points, std::vector<std::string> extra_vars = {});

  int n_points() const { return n_; }
  int num_extra() const { return static_cast<int>(extra_names_.size()); }
  const std::vector<std::string>& extra_names() const { return extra_names_; }
  int extra_var(int k) const { return (1 << n_) + k; }
  int extra_var(std::string_view name) const;
  // Valid variable ids are 1 .. var_limit() - 1.
  int var_limit() const { return (1 << n_) + num_extra(); }
  std::string VarName(int id) const;

  // Adds the elemental block. Its rows are kept implicit and occupy global
  // row indices 0 .. ShannonRowCount(n) - 1.
  void AddShannonBlock();
  bool has_shannon_block() const { return shannon_; }
  std::size_t shannon_rows() const { return shannon_ ? ShannonRowCount(n_) : 0; }

  // Returns the global row index.
  std::size_t AddRow(Row r);
  std::size_t AddRow(std::vector<Term> terms, Sense sense, Rational rhs,
                     RowTag tag);
  std::size_t num_rows() const { return shannon_rows() + rows_.size(); }
  Row row(std::size_t index) const;
  const std::vector<Row>& explicit_rows() const { return rows_; }

  void SetObjective(Goal goal, std::vector<std::pair<int, Rational>> terms);
  Goal goal() const { return goal_; }
  const std::vector<std::pair<int, Rational>>& objective() const {
    return objective_;
  }

 private:
  int n_ = 0;
  std::vector<std::string> extra_names_;
  bool shannon_ = false;
  std::vector<Row> rows_;
  Goal goal_ = Goal::kFeasibility;
  std::vector<std::pair<int, Rational>> objective_;
};

// f(X) = r(X) for every nonempty X over the matroid's points, which are the
// first m.size() points of the LP.
void PinMatroid(PolymatroidLP& lp, const Matroid& m);

enum class LPStatus { kFeasible, kInfeasible, kOptimal, kUnbounded };
std::string ToString(LPStatus s);
LPStatus ParseLPStatus(std::string_view s);

struct LPStats {
  std::string method;
  std::int64_t iterations = 0;
  std::int64_t reduced_vars = 0;
  std::int64_t reduced_rows = 0;
  double seconds = 0;
};

// Multiplier signs: >= 0 on >= rows, <= 0 on <= rows, free on = rows.
//  kInfeasible: sum y_i a_i = 0 and sum y_i b_i > 0.
//  kOptimal:    sum y_i a_i = c and sum y_i b_i = c.x for a minimization
//               (c is negated for maximization).
//  kUnbounded:  point is feasible and ray improves the objective without
//               leaving the feasible region.
struct LPOutcome {
  LPStatus status = LPStatus::kFeasible;
  std::vector<Rational> point;  // indexed by variable id; point[0] = 0
  std::vector<Rational> ray;
  Rational value = 0;
  std::vector<std::pair<std::size_t, Rational>> multipliers;  // by row index
  LPStats stats;
};

struct SolveOptions {
  std::int64_t max_iterations = 2000000;
  // Disables the floating-point path and runs the exact dense simplex.
  bool exact_only = false;
};

LPOutcome Solve(const PolymatroidLP& lp, const SolveOptions& options = {});

// Re-verifies an outcome from scratch in rational arithmetic.
bool CheckCertificate(const PolymatroidLP& lp, const LPOutcome& outcome,
                      std::string* why = nullptr);

// Exact value of a row at a point.
Rational RowActivity(const Row& row, const std::vector<Rational>& point);

}  // namespace matext

#endif  // MATEXT_LP_H_
